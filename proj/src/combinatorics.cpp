#include "kmroots/combinatorics.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "kmroots/error.hpp"

namespace kmroots::combinatorics {

int mobius(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::NonPositive, "mobius(" + std::to_string(d) + ")");
  int result = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

mpz_class witt_dim(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1)
    throw Error(ErrorKind::NonPositive, "witt_dim(" + std::to_string(m) + ", " + std::to_string(n) + ")");
  mpz_class sum = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n / d));
    sum += mu * term;
  }
  const mpz_class nn(static_cast<long>(n));
  if (sum % nn != 0) throw Error(ErrorKind::NonIntegerMultiplicity, "Witt sum not divisible by n");
  return sum / nn;
}

std::int64_t lyndon_count(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::NonPositive, "lyndon_count arguments must be positive");
  if (m > kLyndonMaxLetters || n > kLyndonMaxLength)
    throw Error(ErrorKind::OracleBoundExceeded,
                "lyndon_count(" + std::to_string(m) + ", " + std::to_string(n) + ") beyond oracle bounds");
  // Duval: generates every Lyndon word of length <= n in lexicographic order.
  std::vector<std::int64_t> w{-1};
  std::int64_t count = 0;
  while (!w.empty()) {
    ++w.back();
    if (static_cast<std::int64_t>(w.size()) == n) ++count;
    const auto len = w.size();
    while (static_cast<std::int64_t>(w.size()) < n) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == m - 1) w.pop_back();
  }
  return count;
}

std::int64_t witt_exponential_threshold(std::int64_t m, Epsilon eps) {
  if (m < 2) throw Error(ErrorKind::InvalidInput, "threshold needs m >= 2");
  if (eps.den <= 0 || eps.num <= 0 || eps.num >= eps.den)
    throw Error(ErrorKind::InvalidInput, "epsilon must lie strictly between 0 and 1");
  // witt > m^{(1-eps)n}  <=>  witt^den > m^{(den-num) n}
  const auto den = static_cast<unsigned long>(eps.den);
  const auto exponent_scale = static_cast<unsigned long>(eps.den - eps.num);
  std::int64_t run = 0;
  for (std::int64_t n = 1; n <= kThresholdSearchLimit; ++n) {
    mpz_class lhs, rhs;
    const mpz_class w = witt_dim(m, n);
    mpz_pow_ui(lhs.get_mpz_t(), w.get_mpz_t(), den);
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(m), exponent_scale * static_cast<unsigned long>(n));
    run = lhs > rhs ? run + 1 : 0;
    if (run == kThresholdWindow) return n - kThresholdWindow;
  }
  throw Error(ErrorKind::SearchBoundExceeded, "no threshold below " + std::to_string(kThresholdSearchLimit));
}

mpz_class partition(std::int64_t n) {
  if (n < 0) return 0;
  static std::mutex lock;
  static std::vector<mpz_class> memo{1};
  std::lock_guard<std::mutex> guard(lock);
  while (static_cast<std::int64_t>(memo.size()) <= n) {
    const auto k = static_cast<std::int64_t>(memo.size());
    mpz_class p = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      const bool add = j % 2 == 1;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      mpz_class t = memo[k - g1];
      if (g2 <= k) t += memo[k - g2];
      if (add)
        p += t;
      else
        p -= t;
    }
    memo.push_back(p);
  }
  return memo[n];
}

std::int64_t partition_bruteforce(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::NonPositive, "partition_bruteforce of a negative number");
  if (n > kPartitionOracleMax)
    throw Error(ErrorKind::OracleBoundExceeded, "partition_bruteforce(" + std::to_string(n) + ")");
  std::int64_t count = 0;
  // parts are generated non-increasing; `left` is what remains to be split
  auto gen = [&](auto&& self, std::int64_t left, std::int64_t largest) -> void {
    if (left == 0) {
      ++count;
      return;
    }
    for (std::int64_t part = std::min(left, largest); part >= 1; --part) self(self, left - part, part);
  };
  gen(gen, n, n);
  return count;
}

double hardy_ramanujan(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::NonPositive, "hardy_ramanujan needs n >= 1");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace kmroots::combinatorics
