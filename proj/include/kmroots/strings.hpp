#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kmroots/multiplicity.hpp"
#include "kmroots/root_vector.hpp"
#include "kmroots/weyl.hpp"

namespace kmroots {

struct Window {
  int lo = -12;
  int hi = 12;
  friend bool operator==(const Window&, const Window&) = default;
};

inline constexpr Window kDefaultWindow{-12, 12};

/// Parses "a..b" (a <= 0 <= b).
Window parse_window(std::string_view text);

enum class PointKind { Root, Origin, NonRoot };

/// One lattice point alpha + n beta. `dim` is the root multiplicity, 0 for a
/// non-root, and dim h = 2|I| - rank(A) for the origin.
struct StringPoint {
  int n = 0;
  RootVector vector;
  PointKind kind = PointKind::NonRoot;
  mpz_class dim;
};

enum class StringTag { Trivial, Finite, SemiInfinitePlus, SemiInfiniteMinus, BiInfinite, InfiniteAtLeastOneDirection };
enum class GrowthTag { MultiplicityOne, Bounded, SuperPolynomialLB, ExponentialLB };
enum class CertificateKind { WittExponential, PartitionLB, LinearIncrement, AffinePeriodicity };

std::string_view to_string(PointKind k);
std::string_view to_string(StringTag t);
std::string_view to_string(GrowthTag t);
std::string_view to_string(CertificateKind k);

struct Classification {
  StringTag tag = StringTag::Trivial;
  std::string evidence;
  RootKind beta_kind = RootKind::NotARoot;
  std::int64_t beta_norm = 0;    // (beta, beta)
  std::int64_t alpha_beta = 0;   // (alpha, beta)
  bool plus_infinite = false;    // infinitude towards +beta proven
  bool minus_infinite = false;   // infinitude towards -beta proven
  bool unknown_at_bound = false;  // one direction undecided inside the window
  bool endpoint_formula_checked = false;
};

struct Growth {
  GrowthTag tag = GrowthTag::MultiplicityOne;
  int direction = 0;       // +1 / -1 for one-sided growth, 0 otherwise
  int shift = 0;           // partition bound shift: alpha - shift*d is the far endpoint
  int witt_s = 0;          // s with mult(s beta) >= 2
  mpz_class witt_m;        // mult(s beta)
};

struct CertificateSample {
  std::int64_t n = 0;
  mpz_class lower_bound;
  mpz_class actual;
};

struct Certificate {
  CertificateKind kind = CertificateKind::AffinePeriodicity;
  std::string description;
  std::vector<CertificateSample> samples;
  std::vector<mpz_class> values;  // AffinePeriodicity: distinct values off the origin
  int period = 0;                 // AffinePeriodicity: smallest period <= 3
};

struct RootString {
  RootVector alpha;
  RootVector beta;
  Window requested;
  Window window;  // enumerated window after clipping to the table height
  bool clipped = false;
  std::vector<StringPoint> points;  // n = window.lo .. window.hi
  int run_lo = 0;                   // maximal consecutive run of members through 0
  int run_hi = 0;
  Classification classification;
  Growth growth;
  std::vector<Certificate> certificates;

  const StringPoint& at(int n) const { return points.at(static_cast<std::size_t>(n - window.lo)); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(run_hi - run_lo + 1); }
  bool member(int n) const noexcept { return n >= run_lo && n <= run_hi; }
};

/// Points alpha + n beta over `window`, clipped to what the table decides.
/// Throws NotARoot if beta is not a root or alpha is neither 0 nor a root.
RootString extract(const MultiplicityTable& table, const RootVector& alpha, const RootVector& beta,
                   Window window = kDefaultWindow);

/// Extracts and classifies the string: theorem-driven tag and growth class.
RootString classify(const MultiplicityTable& table, const RootVector& alpha, const RootVector& beta,
                    Window window = kDefaultWindow);

/// For beta in K isotropic, alpha positive, |R| > 1: returns (alpha, beta) == 0
/// and checks it agrees with supp(alpha) in supp(beta). Throws
/// PreconditionViolated, or CertificateViolated if the two disagree.
bool support_criterion(const CartanMatrix& a, const GramTable& b, const RootVector& alpha, const RootVector& beta);

/// Lower-bound certificates for a classified string. Throws
/// CertificateViolated when a bound exceeds an actual multiplicity.
std::vector<Certificate> growth_certificate(const MultiplicityTable& table, const RootString& s);

/// classify + growth_certificate, stored on the returned string.
RootString analyze(const MultiplicityTable& table, const RootVector& alpha, const RootVector& beta,
                   Window window = kDefaultWindow);

struct MonotonicityReport {
  mpz_class mult_beta;
  bool plus_checked = false;
  bool minus_checked = false;
  bool strict_asserted = false;  // mult(beta) > 1
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Strict increase (when mult beta > 1) and the linear increment bound
/// mult(g + m b) - mult(g + n b) >= (m - n)(mult b - 1) on the window.
/// Throws PreconditionViolated unless beta is non-isotropic imaginary and
/// |R_gamma(beta)| > 1.
MonotonicityReport monotonicity_report(const MultiplicityTable& table, const RootVector& gamma,
                                       const RootVector& beta, Window window = kDefaultWindow);

}  // namespace kmroots
