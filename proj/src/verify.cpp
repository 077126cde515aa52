#include "kmroots/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "kmroots/cache.hpp"
#include "kmroots/combinatorics.hpp"
#include "kmroots/error.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/weyl.hpp"

namespace kmroots {

bool MatrixReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(matrices.begin(), matrices.end(), [](const MatrixReport& m) { return m.passed(); });
}

std::size_t VerificationReport::failure_count() const noexcept {
  std::size_t n = 0;
  for (const auto& m : matrices)
    for (const auto& c : m.checks) n += c.failures.size();
  return n;
}

std::vector<CorpusEntry> default_corpus() {
  auto make = [](std::string name, IntMatrix rows) {
    auto a = validate(rows);
    a.set_name(name);
    return CorpusEntry{std::move(name), std::move(a)};
  };
  return {
      make("A2", {{2, -1}, {-1, 2}}),
      make("A1(1)", {{2, -2}, {-2, 2}}),
      make("A2(1)", {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
      make("D4(3)", {{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}),
      make("hyperbolic-3", {{2, -3}, {-3, 2}}),
      make("rank3-affine-sub", {{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}),
  };
}

namespace {

constexpr std::size_t kSubsetRankLimit = 12;

std::vector<std::vector<std::size_t>> connected_subsets(const CartanMatrix& a, bool proper) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = a.size();
  if (n > kSubsetRankLimit) {
    if (!proper) out = a.components();
    return out;
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (proper && mask == (1u << n) - 1) continue;
    RootVector ind(n);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        ind.set(i, 1);
        idx.push_back(i);
      }
    if (is_connected(a, ind)) out.push_back(std::move(idx));
  }
  return out;
}

// Null roots of all connected affine principal submatrices, deduplicated.
std::vector<RootVector> affine_null_roots(const CartanMatrix& a, const Symmetrizer& q) {
  std::vector<RootVector> out;
  for (const auto& j : connected_subsets(a, false)) {
    const auto type = classify_subset(a, q, j);
    if (type.tag == TypeTag::Affine && type.null_root &&
        std::find(out.begin(), out.end(), *type.null_root) == out.end())
      out.push_back(*type.null_root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<RootVector, mpz_class>> signed_roots(const MultiplicityTable& t, int h) {
  auto pos = enumerate_roots(t, std::min(h, t.max_height()));
  std::vector<std::pair<RootVector, mpz_class>> out;
  out.reserve(2 * pos.size());
  for (const auto& [r, m] : pos) out.emplace_back(-r, m);
  std::reverse(out.begin(), out.end());
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

bool decidable(const MultiplicityTable& t, const RootVector& v) {
  return v.is_zero() || v.sign() == Sign::Mixed || t.in_range(v);
}

mpz_class dim_h(const CartanMatrix& a) { return mpz_class(static_cast<long>(2 * a.size() - a.matrix_rank())); }

mpz_class dim_at(const MultiplicityTable& t, const RootVector& v) {
  return v.is_zero() ? dim_h(t.matrix()) : t.mult(v);
}

std::string join(const std::vector<mpz_class>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s;
}

CheckResult start(std::string name, std::string anchor) {
  CheckResult r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  return r;
}

}  // namespace

CheckResult check_real_mult_one(const MultiplicityTable& t, int h) {
  auto r = start("real_mult_one", "every real root has multiplicity 1");
  const auto& a = t.matrix();
  for (int height = 1; height <= std::min(h, t.max_height()); ++height)
    for (const auto& x : level_candidates(a, height)) {
      const auto kind = classify_root(a, t.gram(), x);
      const auto m = t.mult(x);
      if (kind == RootKind::Real) {
        ++r.instances;
        if (m != 1) r.failures.push_back({{x}, "real root with multiplicity " + m.get_str()});
      }
      if ((kind != RootKind::NotARoot) != (m > 0))
        r.failures.push_back({{x}, "Weyl root test says " + std::string(to_string(kind)) + " but multiplicity is " +
                                       m.get_str()});
    }
  return r;
}

CheckResult check_dim_sum_bound(const MultiplicityTable& t, int h) {
  auto r = start("dim_sum_bound", "mult(x+y) >= mult(x) + mult(y) - 1 for distinct roots x, y with (x,y) < 0");
  const auto roots = signed_roots(t, h);
  const auto& b = t.gram();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const auto& [x, mx] = roots[i];
      const auto& [y, my] = roots[j];
      if (form(b, x, y) >= 0) continue;
      const auto s = x + y;
      const auto hs = s.height();
      if ((hs < 0 ? -hs : hs) > h) continue;
      ++r.instances;
      const auto lhs = dim_at(t, s);
      if (lhs < mx + my - 1)
        r.failures.push_back({{x, y}, "mult(x+y)=" + lhs.get_str() + " < " + mpz_class(mx + my - 1).get_str()});
    }
  return r;
}

CheckResult check_small_multiple(const MultiplicityTable& t) {
  auto r = start("small_multiple", "mult(s*beta) >= 2 for some 1 <= s <= 5, beta non-isotropic imaginary in K");
  const auto& a = t.matrix();
  for (int height = 1; 5 * height <= t.max_height(); ++height)
    for (const auto& x : level_candidates(a, height)) {
      if (!in_K(a, x) || form(t.gram(), x, x) >= 0) continue;
      ++r.instances;
      std::vector<mpz_class> ms;
      for (std::int64_t s = 1; s <= 5; ++s) ms.push_back(t.mult(s * x));
      if (std::none_of(ms.begin(), ms.end(), [](const mpz_class& m) { return m >= 2; }))
        r.failures.push_back({{x}, "mult(s*beta) for s=1..5: " + join(ms)});
    }
  return r;
}

CheckResult check_affine_periodicity(const MultiplicityTable& t, int k_max) {
  auto r = start("affine_periodicity",
                 "mult(k*delta) takes at most two values, periodically, for each affine principal submatrix");
  for (const auto& d : affine_null_roots(t.matrix(), t.symmetrizer())) {
    std::vector<mpz_class> vals;
    for (std::int64_t k = 1; k <= k_max && t.in_range(k * d); ++k) vals.push_back(t.mult(k * d));
    if (vals.empty()) continue;
    ++r.instances;
    const std::set<mpz_class> distinct(vals.begin(), vals.end());
    int period = 0;
    for (int p = 1; p <= 3 && period == 0; ++p) {
      bool ok = true;
      for (std::size_t k = 0; k + p < vals.size(); ++k) ok = ok && vals[k] == vals[k + p];
      if (ok) period = p;
    }
    if (distinct.size() > 2 || period == 0)
      r.failures.push_back({{d}, "mult(k*delta) for k=1..: " + join(vals)});
  }
  return r;
}

CheckResult check_submatrix(const MultiplicityTable& t, int h, const EngineOptions& engine) {
  auto r = start("submatrix", "roots supported in J have the same multiplicity for A and for A restricted to J");
  const auto& a = t.matrix();
  const int height = std::min(h, t.max_height());
  for (const auto& j : connected_subsets(a, true)) {
    const auto sub = submatrix(a, j);
    const auto st = compute_table(sub, symmetrize(sub), height, engine);
    for (int ht = 1; ht <= height; ++ht)
      for (const auto& x : level_candidates(sub, ht)) {
        RootVector big(a.size());
        for (std::size_t i = 0; i < j.size(); ++i) big.set(j[i], x[i]);
        ++r.instances;
        const auto ms = st.mult(x), mb = t.mult(big);
        if (ms != mb)
          r.failures.push_back({{big}, "submatrix gives " + ms.get_str() + ", full matrix gives " + mb.get_str()});
      }
  }
  return r;
}

CheckResult check_partition_bound(const MultiplicityTable& t, int alpha_height) {
  auto r = start("partition_bound", "mult(e + k*delta) >= p(k) from the far endpoint e of an isotropic string");
  const auto& b = t.gram();
  const auto roots = signed_roots(t, alpha_height);
  for (const auto& d : affine_null_roots(t.matrix(), t.symmetrizer()))
    for (const auto& [alpha, m] : roots) {
      if (form(b, alpha, d) >= 0) continue;
      std::int64_t shift = 0;
      bool decided = true;
      for (;;) {
        const auto v = alpha - (shift + 1) * d;
        if (!decidable(t, v)) {
          decided = false;
          break;
        }
        if (v.is_zero() || t.mult(v) == 0) break;
        ++shift;
      }
      if (!decided) continue;
      ++r.instances;
      const auto e = alpha - shift * d;
      for (std::int64_t k = 0; decidable(t, e + k * d); ++k) {
        const auto p = combinatorics::partition(k);
        const auto actual = dim_at(t, e + k * d);
        if (actual < p)
          r.failures.push_back({{alpha, d}, "shift " + std::to_string(shift) + ", k=" + std::to_string(k) + ": mult " +
                                                actual.get_str() + " < p(k)=" + p.get_str()});
      }
    }
  return r;
}

CheckResult check_increments(const MultiplicityTable& t, int h) {
  auto r = start("increments", "mult(a+m*b) - mult(a+n*b) >= (m-n)(mult(b) - 1) when (a,b) < 0, b imaginary");
  const auto& a = t.matrix();
  const auto& b = t.gram();
  const auto roots = signed_roots(t, h);
  for (const auto& [beta, mb] : enumerate_roots(t, std::min(h, t.max_height()) / 2)) {
    if (classify_root(a, b, beta) != RootKind::Imaginary) continue;
    for (const auto& [alpha, ma] : roots) {
      if (alpha == beta || form(b, alpha, beta) >= 0) continue;
      ++r.instances;
      std::vector<mpz_class> dims;
      for (std::int64_t n = 0; t.in_range(alpha + n * beta); ++n) dims.push_back(t.mult(alpha + n * beta));
      for (std::size_t n = 0; n < dims.size(); ++n) {
        if (dims[n] == 0) {
          r.failures.push_back({{alpha, beta}, "string ends at n=" + std::to_string(n)});
          break;
        }
        for (std::size_t m = n + 1; m < dims.size(); ++m) {
          const mpz_class need = mpz_class(static_cast<long>(m - n)) * (mb - 1);
          if (dims[m] - dims[n] < need)
            r.failures.push_back({{alpha, beta}, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " mults " +
                                                     dims[m].get_str() + "," + dims[n].get_str() + " need increment " +
                                                     need.get_str()});
        }
      }
    }
  }
  return r;
}

CheckResult check_strings(const MultiplicityTable& t, int max_height, Window window) {
  auto r = start("strings", "string tags agree with the members found inside the window");
  const auto betas = enumerate_roots(t, std::min(max_height, t.max_height()));
  auto alphas = signed_roots(t, max_height);
  alphas.insert(alphas.begin() + static_cast<std::ptrdiff_t>(alphas.size() / 2),
                {RootVector(t.matrix().size()), mpz_class(0)});
  for (const auto& [beta, mb] : betas)
    for (const auto& [alpha, ma] : alphas) {
      ++r.instances;
      RootString s;
      try {
        s = analyze(t, alpha, beta, window);
      } catch (const Error& e) {
        r.failures.push_back({{alpha, beta}, e.what()});
        continue;
      }
      const auto& c = s.classification;
      const bool lo_open = s.run_lo == s.window.lo, hi_open = s.run_hi == s.window.hi;
      std::string bad;
      switch (c.tag) {
        case StringTag::Trivial:
          if (s.size() != 1 || lo_open || hi_open) bad = "trivial string with more than one member";
          break;
        case StringTag::Finite:
          if (lo_open || hi_open) bad = "finite string without both endpoints in the window";
          break;
        case StringTag::BiInfinite:
          if (!lo_open || !hi_open) bad = "bi-infinite string ends inside the window";
          break;
        case StringTag::SemiInfinitePlus:
          if (!hi_open || (lo_open && !c.unknown_at_bound)) bad = "semi-infinite (+) string disagrees with the window";
          break;
        case StringTag::SemiInfiniteMinus:
          if (!lo_open || (hi_open && !c.unknown_at_bound)) bad = "semi-infinite (-) string disagrees with the window";
          break;
        case StringTag::InfiniteAtLeastOneDirection:
          if ((c.plus_infinite && !hi_open) || (c.minus_infinite && !lo_open) ||
              (!c.plus_infinite && !c.minus_infinite))
            bad = "certified direction ends inside the window";
          break;
      }
      if (bad.empty() && c.beta_kind == RootKind::Real)
        for (const auto& p : s.points)
          if (!s.member(p.n) && p.kind != PointKind::NonRoot) bad = "real string with a gap at n=" + std::to_string(p.n);
      if (!bad.empty()) r.failures.push_back({{alpha, beta}, bad + " (" + std::string(to_string(c.tag)) + ")"});
    }
  return r;
}

int table_height_for(const CartanMatrix& a, const Symmetrizer& q, const VerifyOptions& opts) {
  int h = opts.max_height;
  for (const auto& d : affine_null_roots(a, q)) {
    const auto need = static_cast<int>(std::min<std::int64_t>(opts.k_max * d.height(), opts.periodic_height_cap));
    h = std::max(h, need);
  }
  return h;
}

MatrixReport verify_matrix(const std::string& name, const CartanMatrix& a, const VerifyOptions& opts) {
  const auto q = symmetrize(a);
  MatrixReport rep;
  rep.name = name;
  rep.matrix_id = matrix_id(a, q);
  rep.rows = a.rows();
  rep.max_height = opts.max_height;
  rep.table_height = table_height_for(a, q, opts);
  const auto t = load_or_compute(opts.cache_dir, a, q, rep.table_height, opts.engine);
  const int h = opts.max_height;

  auto timed = [&](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult c = fn();
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.checks.push_back(std::move(c));
  };
  timed([&] { return check_real_mult_one(t, h); });
  timed([&] { return check_dim_sum_bound(t, h); });
  timed([&] { return check_small_multiple(t); });
  timed([&] { return check_affine_periodicity(t, opts.k_max); });
  timed([&] { return check_submatrix(t, h, opts.engine); });
  timed([&] { return check_partition_bound(t, opts.string_height); });
  timed([&] { return check_increments(t, h); });
  timed([&] { return check_strings(t, opts.string_height, opts.window); });
  return rep;
}

VerificationReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts) {
  VerificationReport rep;
  for (const auto& e : corpus) rep.matrices.push_back(verify_matrix(e.name, e.matrix, opts));
  return rep;
}

}  // namespace kmroots
