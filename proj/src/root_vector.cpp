#include "kmroots/root_vector.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "kmroots/error.hpp"

namespace kmroots {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Mixed: return "mixed";
  }
  return "?";
}

namespace {

RootVector::Coeff checked_narrow(long long v) {
  if (v < INT32_MIN || v > INT32_MAX)
    throw Error(ErrorKind::Overflow, "root vector coefficient " + std::to_string(v) + " out of range");
  return static_cast<RootVector::Coeff>(v);
}

void check_rank(std::size_t n) {
  if (n > RootVector::kCapacity)
    throw Error(ErrorKind::RankTooLarge,
                "rank " + std::to_string(n) + " exceeds capacity " + std::to_string(RootVector::kCapacity));
}

}  // namespace

RootVector::RootVector(std::size_t rank) : rank_(static_cast<std::uint32_t>(rank)) {
  check_rank(rank);
}

RootVector::RootVector(std::initializer_list<Coeff> coeffs)
    : RootVector(std::span<const Coeff>(coeffs.begin(), coeffs.size())) {}

RootVector::RootVector(std::span<const Coeff> coeffs) {
  check_rank(coeffs.size());
  rank_ = static_cast<std::uint32_t>(coeffs.size());
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
  refresh();
}

RootVector::RootVector(const std::vector<long long>& coeffs) {
  check_rank(coeffs.size());
  rank_ = static_cast<std::uint32_t>(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = checked_narrow(coeffs[i]);
  refresh();
}

RootVector RootVector::simple(std::size_t rank, std::size_t i) {
  RootVector v(rank);
  v.set(i, 1);
  return v;
}

void RootVector::set(std::size_t i, Coeff value) {
  c_[i] = value;
  refresh();
}

void RootVector::add(std::size_t i, Coeff delta) {
  c_[i] = checked_narrow(static_cast<long long>(c_[i]) + delta);
  refresh();
}

void RootVector::refresh() noexcept {
  std::int64_t h = 0;
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < rank_; ++i) {
    h += c_[i];
    pos |= c_[i] > 0;
    neg |= c_[i] < 0;
  }
  height_ = h;
  sign_ = pos ? (neg ? Sign::Mixed : Sign::Positive) : (neg ? Sign::Negative : Sign::Zero);
}

std::vector<std::size_t> RootVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] != 0) s.push_back(i);
  return s;
}

bool RootVector::supported_in(std::span<const std::size_t> subset) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] != 0 && std::find(subset.begin(), subset.end(), i) == subset.end()) return false;
  return true;
}

int RootVector::simple_index() const noexcept {
  if (height_ != 1 || sign_ != Sign::Positive) return -1;
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] == 1) return static_cast<int>(i);
  return -1;
}

RootVector::Coeff RootVector::content() const noexcept {
  Coeff g = 0;
  for (std::size_t i = 0; i < rank_; ++i) g = std::gcd(g, std::abs(c_[i]));
  return g;
}

RootVector RootVector::divided(Coeff k) const {
  RootVector r = *this;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (k == 0 || c_[i] % k != 0)
      throw Error(ErrorKind::InvalidInput, str() + " is not divisible by " + std::to_string(k));
    r.c_[i] = c_[i] / k;
  }
  r.refresh();
  return r;
}

bool RootVector::dominated_by(const RootVector& other) const noexcept {
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = checked_narrow(-static_cast<long long>(c_[i]));
  r.refresh();
  return r;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.rank_ != rank_)
    throw Error(ErrorKind::DimensionMismatch, "adding vectors of rank " + std::to_string(rank_) + " and " +
                                                  std::to_string(o.rank_));
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked_narrow(static_cast<long long>(c_[i]) + o.c_[i]);
  refresh();
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.rank_ != rank_)
    throw Error(ErrorKind::DimensionMismatch, "subtracting vectors of rank " + std::to_string(rank_) + " and " +
                                                  std::to_string(o.rank_));
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked_narrow(static_cast<long long>(c_[i]) - o.c_[i]);
  refresh();
  return *this;
}

RootVector operator*(std::int64_t k, const RootVector& v) {
  RootVector r = v;
  for (std::size_t i = 0; i < v.rank_; ++i) {
    long long p;
    if (__builtin_mul_overflow(static_cast<long long>(v.c_[i]), static_cast<long long>(k), &p))
      throw Error(ErrorKind::Overflow, "scaling " + v.str());
    r.c_[i] = checked_narrow(p);
  }
  r.refresh();
  return r;
}

bool operator==(const RootVector& a, const RootVector& b) noexcept {
  return a.rank_ == b.rank_ && std::equal(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin());
}

std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) noexcept {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.height_ <=> b.height_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin(),
                                                b.c_.begin() + b.rank_);
}

std::size_t RootVector::hash() const noexcept {
  // FNV-1a over the coefficients
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < rank_; ++i) {
    h ^= static_cast<std::uint32_t>(c_[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string RootVector::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

RootVector RootVector::parse(std::string_view text) {
  const auto bad = [&] { return Error(ErrorKind::InvalidInput, "cannot parse root vector '" + std::string(text) + "'"); };
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view body = trim(text);
  const bool open = !body.empty() && body.front() == '[';
  const bool close = !body.empty() && body.back() == ']';
  if (open != close) throw bad();
  if (open) body = trim(body.substr(1, body.size() - 2));
  if (body.empty()) throw Error(ErrorKind::InvalidInput, "empty root vector");

  const bool commas = body.find(',') != std::string_view::npos;
  std::vector<long long> vals;
  std::size_t i = 0;
  while (i <= body.size()) {
    std::size_t j = i;
    if (commas) {
      j = body.find(',', i);
      if (j == std::string_view::npos) j = body.size();
    } else {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    }
    const auto tok = trim(body.substr(i, j - i));
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) throw bad();
    vals.push_back(v);
    i = j + 1;
    if (!commas) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i >= body.size()) break;
    }
  }
  return RootVector(vals);
}

}  // namespace kmroots
