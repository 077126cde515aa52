#include "kmroots/multiplicity.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <exception>
#include <mutex>

#include "kmroots/error.hpp"
#include "kmroots/weyl.hpp"

namespace kmroots {

std::string matrix_id(const CartanMatrix& a, const Symmetrizer& q) {
  std::string canon;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) canon += std::to_string(a(i, j)) + ",";
    canon += ";";
  }
  canon += "q";
  for (auto v : q.q) canon += std::to_string(v) + ",";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int default_height_for_rank(std::size_t rank) {
  if (rank <= 3) return 40;
  if (rank == 4) return 24;
  return 16;
}

MultiplicityTable::MultiplicityTable(CartanMatrix a, Symmetrizer q)
    : a_(std::move(a)), q_(std::move(q)), b_(a_, q_), id_(matrix_id(a_, q_)) {}

const MultEntry* MultiplicityTable::find(const RootVector& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? nullptr : &it->second;
}

bool MultiplicityTable::in_range(const RootVector& x) const noexcept {
  const auto h = x.height();
  return (h < 0 ? -h : h) <= max_height_;
}

mpz_class MultiplicityTable::mult(const RootVector& x) const {
  if (x.rank() != a_.size()) throw Error(ErrorKind::DimensionMismatch, "mult of " + x.str());
  if (x.is_zero()) throw Error(ErrorKind::ZeroVector, "mult of the zero vector");
  if (x.sign() == Sign::Mixed) return 0;
  if (!in_range(x))
    throw Error(ErrorKind::HeightBoundExceeded,
                x.str() + " exceeds table height " + std::to_string(max_height_));
  const auto* e = find(x.is_positive() ? x : -x);
  return e ? e->mult : mpz_class(0);
}

mpq_class MultiplicityTable::c(const RootVector& x) const {
  if (!x.is_positive()) throw Error(ErrorKind::NotPositive, "c of " + x.str());
  if (!in_range(x))
    throw Error(ErrorKind::HeightBoundExceeded,
                x.str() + " exceeds table height " + std::to_string(max_height_));
  const auto* e = find(x);
  return e ? e->c : mpq_class(0);
}

std::vector<std::pair<RootVector, MultEntry>> MultiplicityTable::sorted_entries() const {
  std::vector<std::pair<RootVector, MultEntry>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

void MultiplicityTable::insert(const RootVector& x, MultEntry e) { entries_[x] = std::move(e); }

std::vector<RootVector> level_candidates(const CartanMatrix& a, int height) {
  std::vector<RootVector> out;
  const std::size_t n = a.size();
  if (height < 1) return out;
  // Compositions of `height` into n parts, enumerated so that the
  // coefficient vectors come out in increasing lexicographic order.
  RootVector v(n);
  std::vector<int> rest(n + 1, 0);
  auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      v.set(i, left);
      if (is_connected(a, v)) out.push_back(v);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      v.set(i, k);
      self(self, i + 1, left - k);
    }
    v.set(i, 0);
  };
  recurse(recurse, 0, height);
  return out;
}

namespace {

// Evaluates one candidate from the frozen lower levels of `lower`.
LevelValue evaluate(const MultiplicityTable& lower, const RootVector& beta) {
  const auto& a = lower.matrix();
  const auto& b = lower.gram();
  const std::size_t n = a.size();
  LevelValue out{beta, {}, false};

  if (beta.simple_index() >= 0) {
    out.entry = {1, 1};
    return out;
  }

  // Sum over ordered splits beta = b1 + b2 with both parts in Q+; pairs are
  // visited once with b1 lexicographically below b2 and weighted by 2.
  mpq_class rhs = 0;
  RootVector b1(n);
  for (;;) {
    // Mixed-radix increment of b1 within the box [0, beta]; beta itself is
    // the last value, so reaching it ends the scan.
    bool wrapped = true;
    for (std::size_t i = n; i-- > 0;) {
      if (b1[i] < beta[i]) {
        b1.add(i, 1);
        wrapped = false;
        break;
      }
      b1.set(i, 0);
    }
    if (wrapped || b1 == beta) break;
    const RootVector b2 = beta - b1;
    const auto cmp = std::lexicographical_compare_three_way(b1.coeffs().begin(), b1.coeffs().end(),
                                                            b2.coeffs().begin(), b2.coeffs().end());
    if (cmp > 0) continue;
    const auto* e1 = lower.find(b1);
    if (!e1) continue;
    const auto* e2 = lower.find(b2);
    if (!e2) continue;
    const std::int64_t weight = cmp == 0 ? 1 : 2;
    rhs += mpq_class(mpz_class(static_cast<long>(weight * form(b, b1, b2)))) * e1->c * e2->c;
  }

  const std::int64_t factor = form(b, beta, beta) - 2 * rho_pairing(b, beta);
  mpq_class c;
  if (factor != 0) {
    c = rhs / mpq_class(mpz_class(static_cast<long>(factor)));
  } else {
    if (rhs != 0)
      throw Error(ErrorKind::ZeroDenominator,
                  "(beta, beta - 2 rho) = 0 at " + beta.str() + " with right-hand side " + rhs.get_str());
    // The recurrence is silent here. Such vectors are never multiples of
    // imaginary roots, so c is 1/g when beta/g is a real root, else 0.
    out.degenerate = true;
    const auto g = beta.content();
    const RootVector prim = beta.divided(g);
    const auto kind = classify_root(a, b, prim);
    if (kind == RootKind::Imaginary)
      throw Error(ErrorKind::ZeroDenominator, "vanishing factor at imaginary multiple " + beta.str());
    c = kind == RootKind::Real ? mpq_class(1, g) : mpq_class(0);
  }
  c.canonicalize();

  mpq_class m = c;
  const auto g = beta.content();
  for (RootVector::Coeff k = 2; k <= g; ++k) {
    if (g % k != 0) continue;
    if (const auto* e = lower.find(beta.divided(k))) {
      mpq_class part(e->mult, k);
      part.canonicalize();
      m -= part;
    }
  }
  m.canonicalize();
  if (m.get_den() != 1 || m < 0)
    throw Error(ErrorKind::NonIntegerMultiplicity, "multiplicity of " + beta.str() + " came out as " + m.get_str());
  out.entry = {m.get_num(), c};
  return out;
}

void publish(MultiplicityTable& table, std::vector<LevelValue>& values) {
  std::size_t degenerate = 0;
  for (auto& v : values) {
    degenerate += v.degenerate;
    if (v.entry.c != 0) table.insert(v.beta, std::move(v.entry));
  }
  table.add_degenerate(degenerate);
}

}  // namespace

std::vector<LevelValue> compute_level_serial(const MultiplicityTable& lower, const std::vector<RootVector>& level) {
  std::vector<LevelValue> out;
  out.reserve(level.size());
  for (const auto& beta : level) out.push_back(evaluate(lower, beta));
  return out;
}

std::vector<LevelValue> compute_level_parallel(const MultiplicityTable& lower, const std::vector<RootVector>& level,
                                               int threads) {
  std::vector<LevelValue> out(level.size());
  std::exception_ptr failure;
  std::mutex failure_lock;
  const long count = static_cast<long>(level.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
  for (long idx = 0; idx < count; ++idx) {
    try {
      out[idx] = evaluate(lower, level[idx]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void extend_table(MultiplicityTable& table, int max_height, const EngineOptions& opts) {
  for (int h = table.max_height() + 1; h <= max_height; ++h) {
    const auto level = level_candidates(table.matrix(), h);
    auto values = opts.execution == Execution::Serial ? compute_level_serial(table, level)
                                                      : compute_level_parallel(table, level, opts.threads);
    publish(table, values);
    table.set_max_height(h);
  }
}

MultiplicityTable compute_table(const CartanMatrix& a, const Symmetrizer& q, int max_height,
                                const EngineOptions& opts) {
  MultiplicityTable t(a, q);
  extend_table(t, max_height, opts);
  return t;
}

mpq_class peterson_c(const MultiplicityTable& table, const RootVector& beta) { return table.c(beta); }

std::vector<std::pair<RootVector, mpz_class>> enumerate_roots(const MultiplicityTable& table, int h) {
  if (h < 1) throw Error(ErrorKind::InvalidInput, "height bound must be at least 1");
  if (h > table.max_height())
    throw Error(ErrorKind::HeightBoundExceeded,
                "requested height " + std::to_string(h) + " beyond table height " + std::to_string(table.max_height()));
  std::vector<std::pair<RootVector, mpz_class>> out;
  for (auto& [v, e] : table.sorted_entries())
    if (v.height() <= h && e.mult > 0) out.emplace_back(v, e.mult);
  return out;
}

}  // namespace kmroots
