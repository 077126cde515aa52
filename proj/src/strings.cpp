#include "kmroots/strings.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "kmroots/combinatorics.hpp"
#include "kmroots/error.hpp"
#include "kmroots/lattice.hpp"

namespace kmroots {

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::Root: return "root";
    case PointKind::Origin: return "origin";
    case PointKind::NonRoot: return "non-root";
  }
  return "?";
}

std::string_view to_string(StringTag t) {
  switch (t) {
    case StringTag::Trivial: return "Trivial";
    case StringTag::Finite: return "Finite";
    case StringTag::SemiInfinitePlus: return "SemiInfinitePlus";
    case StringTag::SemiInfiniteMinus: return "SemiInfiniteMinus";
    case StringTag::BiInfinite: return "BiInfinite";
    case StringTag::InfiniteAtLeastOneDirection: return "InfiniteAtLeastOneDirection";
  }
  return "?";
}

std::string_view to_string(GrowthTag t) {
  switch (t) {
    case GrowthTag::MultiplicityOne: return "MultiplicityOne";
    case GrowthTag::Bounded: return "Bounded";
    case GrowthTag::SuperPolynomialLB: return "SuperPolynomialLB";
    case GrowthTag::ExponentialLB: return "ExponentialLB";
  }
  return "?";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::WittExponential: return "WittExponential";
    case CertificateKind::PartitionLB: return "PartitionLB";
    case CertificateKind::LinearIncrement: return "LinearIncrement";
    case CertificateKind::AffinePeriodicity: return "AffinePeriodicity";
  }
  return "?";
}

Window parse_window(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw Error(ErrorKind::InvalidInput, "window must look like a..b");
  Window w;
  auto parse = [&](std::string_view part, int& out) {
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc() || p != part.data() + part.size())
      throw Error(ErrorKind::InvalidInput, "bad window bound '" + std::string(part) + "'");
  };
  parse(text.substr(0, dots), w.lo);
  parse(text.substr(dots + 2), w.hi);
  if (w.lo > 0 || w.hi < 0) throw Error(ErrorKind::InvalidInput, "window must contain 0");
  return w;
}

namespace {

bool decidable(const MultiplicityTable& t, const RootVector& v) {
  return v.is_zero() || v.sign() == Sign::Mixed || t.in_range(v);
}

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::CertificateViolated, what); }

void check_samples(const Certificate& c, const RootString& s) {
  for (const auto& p : c.samples)
    if (p.lower_bound > p.actual)
      violated(std::string(to_string(c.kind)) + " bound " + p.lower_bound.get_str() + " exceeds " +
               p.actual.get_str() + " at n=" + std::to_string(p.n) + " for alpha=" + s.alpha.str() +
               " beta=" + s.beta.str());
}

// Cor. style increments along direction d starting at the first member whose
// form with d*beta is negative.
std::optional<Certificate> increment_certificate(const MultiplicityTable& t, const RootString& s, int d) {
  const auto& b = t.gram();
  const RootVector dir = d > 0 ? s.beta : -s.beta;
  const mpz_class mb = t.mult(s.beta);
  int start = d > 0 ? s.run_lo : s.run_hi;
  auto inside = [&](int n) { return n >= s.window.lo && n <= s.window.hi; };
  for (; s.member(start); start += d) {
    const auto& p = s.at(start);
    if (p.kind == PointKind::Root && p.vector != dir && form(b, p.vector, dir) < 0) break;
  }
  if (!s.member(start)) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::LinearIncrement;
  c.description = "mult(g+(k+1)d) >= mult(g+kd) + mult(beta) - 1 from g=" + s.at(start).vector.str() +
                  ", d=" + dir.str() + ", mult(beta)=" + mb.get_str();
  for (int n = start; inside(n + d); n += d) {
    const auto& prev = s.at(n);
    const auto& next = s.at(n + d);
    c.samples.push_back({n + d, prev.dim + mb - 1, next.dim});
    if (next.kind != PointKind::Root) break;
  }
  return c;
}

// Smallest s <= 5 with mult(s*beta) >= 2 inside the table, 0 if none.
int witt_shift(const MultiplicityTable& t, const RootVector& bp) {
  for (int k = 1; k <= 5 && k * bp.height() <= t.max_height(); ++k)
    if (t.mult(static_cast<std::int64_t>(k) * bp) >= 2) return k;
  return 0;
}

}  // namespace

RootString extract(const MultiplicityTable& table, const RootVector& alpha, const RootVector& beta, Window window) {
  if (window.lo > 0 || window.hi < 0) throw Error(ErrorKind::InvalidInput, "window must contain 0");
  const auto& a = table.matrix();
  const auto& b = table.gram();
  if (alpha.rank() != a.size() || beta.rank() != a.size())
    throw Error(ErrorKind::DimensionMismatch, "string vectors do not match the matrix rank");
  if (beta.is_zero() || classify_root(a, b, beta) == RootKind::NotARoot)
    throw Error(ErrorKind::NotARoot, "beta=" + beta.str() + " is not a root");
  if (!alpha.is_zero() && classify_root(a, b, alpha) == RootKind::NotARoot)
    throw Error(ErrorKind::NotARoot, "alpha=" + alpha.str() + " is neither 0 nor a root");
  if (!decidable(table, alpha))
    throw Error(ErrorKind::HeightBoundExceeded, "alpha=" + alpha.str() + " beyond table height");

  RootString s;
  s.alpha = alpha;
  s.beta = beta;
  s.requested = window;
  int lo = 0, hi = 0;
  while (lo - 1 >= window.lo && decidable(table, alpha + static_cast<std::int64_t>(lo - 1) * beta)) --lo;
  while (hi + 1 <= window.hi && decidable(table, alpha + static_cast<std::int64_t>(hi + 1) * beta)) ++hi;
  s.window = {lo, hi};
  s.clipped = s.window != window;

  const mpz_class dim_h(static_cast<long>(2 * a.size() - a.matrix_rank()));
  for (int n = lo; n <= hi; ++n) {
    StringPoint p;
    p.n = n;
    p.vector = alpha + static_cast<std::int64_t>(n) * beta;
    if (p.vector.is_zero()) {
      p.kind = PointKind::Origin;
      p.dim = dim_h;
    } else {
      p.dim = table.mult(p.vector);
      p.kind = p.dim > 0 ? PointKind::Root : PointKind::NonRoot;
    }
    s.points.push_back(std::move(p));
  }
  s.run_lo = s.run_hi = 0;
  while (s.run_lo - 1 >= lo && s.at(s.run_lo - 1).kind != PointKind::NonRoot) --s.run_lo;
  while (s.run_hi + 1 <= hi && s.at(s.run_hi + 1).kind != PointKind::NonRoot) ++s.run_hi;
  return s;
}

RootString classify(const MultiplicityTable& table, const RootVector& alpha, const RootVector& beta, Window window) {
  const auto& a = table.matrix();
  const auto& b = table.gram();
  RootString s = extract(table, alpha, beta, window);
  auto& cls = s.classification;
  cls.beta_kind = classify_root(a, b, beta);
  cls.beta_norm = form(b, beta, beta);
  cls.alpha_beta = form(b, alpha, beta);
  const bool alpha_real = !alpha.is_zero() && classify_root(a, b, alpha) == RootKind::Real;
  const bool reaches_hi = s.run_hi == s.window.hi;
  const bool reaches_lo = s.run_lo == s.window.lo;

  if (s.size() == 1 && !(reaches_hi || reaches_lo)) {
    cls.tag = StringTag::Trivial;
    cls.evidence = "alpha - beta and alpha + beta are not in the root system";
    s.growth.tag = alpha_real ? GrowthTag::MultiplicityOne : GrowthTag::Bounded;
    return s;
  }
  if (s.size() == 1) {
    throw Error(ErrorKind::HeightBoundExceeded, "table too small to decide |R| > 1 for alpha=" + alpha.str());
  }

  if (cls.beta_kind == RootKind::Real) {
    // Real strings are finite; widen until both ends are seen.
    const Classification base = cls;
    Window w = window;
    while ((s.run_lo == s.window.lo || s.run_hi == s.window.hi) && !s.clipped) {
      w = {2 * w.lo - 1, 2 * w.hi + 1};
      s = extract(table, alpha, beta, w);
    }
    s.classification = base;
    auto& c = s.classification;
    c.tag = StringTag::Finite;
    c.evidence = "beta is real";
    const bool proportional = [&] {
      if (alpha.is_zero()) return true;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
          if (static_cast<std::int64_t>(alpha[i]) * beta[j] != static_cast<std::int64_t>(alpha[j]) * beta[i])
            return false;
      return true;
    }();
    if (!proportional && s.run_lo > s.window.lo && s.run_hi < s.window.hi) {
      const auto& end = s.at(s.run_lo).vector;
      const auto num = 2 * form(b, end, beta);
      if (num % c.beta_norm != 0) violated("coroot pairing not integral at " + end.str());
      const auto expect = std::abs(num / c.beta_norm) + 1;
      if (expect != static_cast<std::int64_t>(s.size()))
        violated("real string through " + alpha.str() + " along " + beta.str() + " has length " +
                 std::to_string(s.size()) + " but endpoint pairing predicts " + std::to_string(expect));
      c.endpoint_formula_checked = true;
    }
    bool all_one = true;
    for (int n = s.run_lo; n <= s.run_hi; ++n)
      if (s.at(n).kind == PointKind::Root && s.at(n).dim != 1) all_one = false;
    s.growth.tag = all_one ? GrowthTag::MultiplicityOne : GrowthTag::Bounded;
    return s;
  }

  if (cls.beta_norm < 0) {
    for (int n = s.run_lo; n <= s.run_hi; ++n) {
      const auto& p = s.at(n);
      if (p.kind != PointKind::Root) continue;
      const auto f = form(b, p.vector, beta);
      cls.plus_infinite |= f < 0;
      cls.minus_infinite |= f > 0;
    }
    if (cls.plus_infinite && !reaches_hi) violated("string certified infinite towards +beta ends inside the window");
    if (cls.minus_infinite && !reaches_lo) violated("string certified infinite towards -beta ends inside the window");
    s.growth.tag = GrowthTag::ExponentialLB;
    const RootVector bp = beta.is_positive() ? beta : -beta;
    s.growth.witt_s = witt_shift(table, bp);
    if (s.growth.witt_s > 0) s.growth.witt_m = table.mult(static_cast<std::int64_t>(s.growth.witt_s) * bp);
    if (cls.plus_infinite && cls.minus_infinite) {
      cls.tag = StringTag::BiInfinite;
      cls.evidence = "members with negative and with positive form against beta";
    } else if (cls.plus_infinite) {
      s.growth.direction = 1;
      if (!reaches_lo) {
        cls.tag = StringTag::SemiInfinitePlus;
        cls.evidence = "member with negative form against beta; non-root at n=" + std::to_string(s.run_lo - 1);
      } else {
        cls.tag = StringTag::InfiniteAtLeastOneDirection;
        cls.unknown_at_bound = true;
        cls.evidence = "infinite towards +beta; -beta side undecided at the window edge";
      }
    } else if (cls.minus_infinite) {
      s.growth.direction = -1;
      if (!reaches_hi) {
        cls.tag = StringTag::SemiInfiniteMinus;
        cls.evidence = "member with positive form against beta; non-root at n=" + std::to_string(s.run_hi + 1);
      } else {
        cls.tag = StringTag::InfiniteAtLeastOneDirection;
        cls.unknown_at_bound = true;
        cls.evidence = "infinite towards -beta; +beta side undecided at the window edge";
      }
    } else {
      violated("nontrivial non-isotropic string without a certified direction");
    }
    return s;
  }

  // isotropic beta
  if (cls.alpha_beta == 0) {
    cls.tag = StringTag::BiInfinite;
    cls.plus_infinite = cls.minus_infinite = true;
    cls.evidence = "isotropic beta orthogonal to alpha";
    if (!reaches_lo || !reaches_hi) violated("bi-infinite string ends inside the window");
    s.growth.tag = alpha_real ? GrowthTag::MultiplicityOne : GrowthTag::Bounded;
    return s;
  }
  const int d = cls.alpha_beta < 0 ? 1 : -1;
  cls.tag = d > 0 ? StringTag::SemiInfinitePlus : StringTag::SemiInfiniteMinus;
  cls.plus_infinite = d > 0;
  cls.minus_infinite = d < 0;
  cls.evidence = "isotropic beta with (alpha, beta) = " + std::to_string(cls.alpha_beta);
  if (d > 0 ? !reaches_hi : !reaches_lo) violated("semi-infinite string ends inside the window on its infinite side");
  if (d > 0 ? reaches_lo : reaches_hi) cls.unknown_at_bound = true;
  s.growth.tag = GrowthTag::SuperPolynomialLB;
  s.growth.direction = d;
  s.growth.shift = d > 0 ? -s.run_lo : s.run_hi;
  return s;
}

bool support_criterion(const CartanMatrix& a, const GramTable& b, const RootVector& alpha, const RootVector& beta) {
  if (!in_K(a, beta) || form(b, beta, beta) != 0 || classify_root(a, b, beta) != RootKind::Imaginary)
    throw Error(ErrorKind::PreconditionViolated, "beta=" + beta.str() + " is not an isotropic element of K");
  if (!alpha.is_positive()) throw Error(ErrorKind::PreconditionViolated, "alpha=" + alpha.str() + " is not positive");
  if (classify_root(a, b, alpha) == RootKind::NotARoot)
    throw Error(ErrorKind::PreconditionViolated, "alpha=" + alpha.str() + " is not a root");
  const auto up = alpha + beta, down = alpha - beta;
  const bool nontrivial =
      classify_root(a, b, up) != RootKind::NotARoot || down.is_zero() || classify_root(a, b, down) != RootKind::NotARoot;
  if (!nontrivial) throw Error(ErrorKind::PreconditionViolated, "string through alpha=" + alpha.str() + " is trivial");
  const bool orthogonal = form(b, alpha, beta) == 0;
  const auto supp = beta.support();
  if (orthogonal != alpha.supported_in(supp))
    violated("support criterion disagrees with the form for alpha=" + alpha.str() + " beta=" + beta.str());
  return orthogonal;
}

std::vector<Certificate> growth_certificate(const MultiplicityTable& t, const RootString& s) {
  std::vector<Certificate> certs;
  const auto& cls = s.classification;
  const int H = t.max_height();

  switch (s.growth.tag) {
    case GrowthTag::ExponentialLB: {
      const RootVector bp = s.beta.is_positive() ? s.beta : -s.beta;
      const auto h = bp.height();
      const int found = witt_shift(t, bp);
      if (found == 0 && 5 * h <= H) violated("no s <= 5 with mult(s*beta) >= 2 for beta=" + bp.str());
      if (found > 0) {
        Certificate c;
        c.kind = CertificateKind::WittExponential;
        const mpz_class m = t.mult(static_cast<std::int64_t>(found) * bp);
        c.description = "mult(n*s*beta) >= witt_dim(m, n) with s=" + std::to_string(found) + ", m=" + m.get_str();
        if (!m.fits_slong_p()) violated("generator count too large");
        for (std::int64_t n = 1; n * found * h <= H; ++n)
          c.samples.push_back(
              {n, combinatorics::witt_dim(m.get_si(), n), t.mult(n * found * bp)});
        certs.push_back(std::move(c));
      }
      if (cls.plus_infinite)
        if (auto c = increment_certificate(t, s, 1)) certs.push_back(std::move(*c));
      if (cls.minus_infinite)
        if (auto c = increment_certificate(t, s, -1)) certs.push_back(std::move(*c));
      break;
    }
    case GrowthTag::SuperPolynomialLB: {
      const int d = s.growth.direction;
      if (!cls.unknown_at_bound) {
        Certificate c;
        c.kind = CertificateKind::PartitionLB;
        const int base = d > 0 ? s.run_lo : s.run_hi;
        c.description = "mult(e + k*d) >= p(k) from the endpoint e=" + s.at(base).vector.str() +
                        " (shift " + std::to_string(s.growth.shift) + ")";
        for (int k = 0; base + d * k >= s.window.lo && base + d * k <= s.window.hi; ++k)
          c.samples.push_back({k, combinatorics::partition(k), s.at(base + d * k).dim});
        certs.push_back(std::move(c));
      }
      if (auto c = increment_certificate(t, s, d)) certs.push_back(std::move(*c));
      break;
    }
    case GrowthTag::Bounded:
    case GrowthTag::MultiplicityOne: {
      if (cls.beta_kind != RootKind::Imaginary || cls.beta_norm != 0 || cls.tag != StringTag::BiInfinite) break;
      Certificate c;
      c.kind = CertificateKind::AffinePeriodicity;
      std::set<mpz_class> values;
      for (const auto& p : s.points)
        if (p.kind == PointKind::Root) {
          values.insert(p.dim);
          c.samples.push_back({p.n, 1, p.dim});
        } else if (p.kind == PointKind::NonRoot) {
          c.samples.push_back({p.n, 1, p.dim});
        }
      c.values.assign(values.begin(), values.end());
      for (int period = 1; period <= 3 && c.period == 0; ++period) {
        bool ok = true;
        for (int n = s.window.lo; n + period <= s.window.hi && ok; ++n) {
          const auto &x = s.at(n), &y = s.at(n + period);
          if (x.kind != PointKind::Origin && y.kind != PointKind::Origin && x.dim != y.dim) ok = false;
        }
        if (ok) c.period = period;
      }
      c.description = "multiplicities off the origin take " + std::to_string(c.values.size()) +
                      " value(s) with period " + std::to_string(c.period);
      if (c.values.size() > 2 || c.period == 0)
        violated("affine-type string along " + s.beta.str() + " through " + s.alpha.str() +
                 " is not periodic with at most two values");
      certs.push_back(std::move(c));
      break;
    }
  }
  for (const auto& c : certs) check_samples(c, s);
  return certs;
}

RootString analyze(const MultiplicityTable& table, const RootVector& alpha, const RootVector& beta, Window window) {
  RootString s = classify(table, alpha, beta, window);
  s.certificates = growth_certificate(table, s);
  return s;
}

MonotonicityReport monotonicity_report(const MultiplicityTable& table, const RootVector& gamma, const RootVector& beta,
                                       Window window) {
  const auto& a = table.matrix();
  const auto& b = table.gram();
  if (beta.is_zero() || classify_root(a, b, beta) != RootKind::Imaginary || form(b, beta, beta) >= 0)
    throw Error(ErrorKind::PreconditionViolated, "beta=" + beta.str() + " is not a non-isotropic imaginary root");
  const RootString s = extract(table, gamma, beta, window);
  if (s.size() <= 1 && s.run_lo > s.window.lo && s.run_hi < s.window.hi)
    throw Error(ErrorKind::PreconditionViolated, "string through " + gamma.str() + " is trivial");

  MonotonicityReport rep;
  rep.mult_beta = table.mult(beta);
  rep.strict_asserted = rep.mult_beta > 1;
  const auto f0 = form(b, gamma, beta);
  for (int d : {1, -1}) {
    const RootVector dir = d > 0 ? beta : -beta;
    int base;
    if (d * f0 < 0) {
      base = 0;
    } else if (f0 == 0 && s.member(d) && s.at(d).kind == PointKind::Root) {
      base = d;
    } else {
      continue;
    }
    if (s.at(base).vector == dir) base += d;
    if (!s.member(base)) continue;
    (d > 0 ? rep.plus_checked : rep.minus_checked) = true;
    std::vector<mpz_class> dims;
    int n = base;
    for (; n >= s.window.lo && n <= s.window.hi; n += d) {
      if (!s.member(n)) {
        rep.violations.push_back("string through " + gamma.str() + " ends at n=" + std::to_string(n) +
                                 " although infinite towards " + dir.str());
        break;
      }
      dims.push_back(s.at(n).dim);
    }
    for (std::size_t i = 0; i < dims.size(); ++i)
      for (std::size_t j = i + 1; j < dims.size(); ++j) {
        ++rep.pairs_checked;
        const mpz_class need = mpz_class(static_cast<long>(j - i)) * (rep.mult_beta - 1);
        if (dims[j] - dims[i] < need)
          rep.violations.push_back("increment from n=" + std::to_string(base + d * static_cast<int>(i)) + " to n=" +
                                   std::to_string(base + d * static_cast<int>(j)) + " is " +
                                   mpz_class(dims[j] - dims[i]).get_str() + " < " + need.get_str());
      }
    if (rep.strict_asserted)
      for (std::size_t i = 0; i + 1 < dims.size(); ++i)
        if (dims[i + 1] <= dims[i])
          rep.violations.push_back("not strictly increasing at n=" + std::to_string(base + d * static_cast<int>(i)));
  }
  return rep;
}

}  // namespace kmroots
