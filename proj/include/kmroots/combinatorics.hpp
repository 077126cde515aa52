#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace kmroots::combinatorics {

/// Moebius function; throws NonPositive for d < 1.
int mobius(std::int64_t d);

/// Dimension of the degree-n part of the free Lie algebra on m generators,
/// (1/n) sum_{d | n} mu(d) m^{n/d}. The division is checked to be exact.
mpz_class witt_dim(std::int64_t m, std::int64_t n);

inline constexpr std::int64_t kLyndonMaxLetters = 4;
inline constexpr std::int64_t kLyndonMaxLength = 12;

/// Number of Lyndon words of length n over m letters, by enumeration
/// (Duval's generator). Throws OracleBoundExceeded beyond the default bounds.
std::int64_t lyndon_count(std::int64_t m, std::int64_t n);

/// epsilon = eps_num / eps_den in (0, 1).
struct Epsilon {
  std::int64_t num;
  std::int64_t den;
};

inline constexpr std::int64_t kThresholdWindow = 32;
inline constexpr std::int64_t kThresholdSearchLimit = 20000;

/// Smallest N >= 0 with witt_dim(m, n) > m^{(1-eps) n} for every n in
/// (N, N + kThresholdWindow], compared exactly. Throws SearchBoundExceeded.
std::int64_t witt_exponential_threshold(std::int64_t m, Epsilon eps);

/// p(n) by Euler's pentagonal-number recurrence (memoized, thread safe).
mpz_class partition(std::int64_t n);

inline constexpr std::int64_t kPartitionOracleMax = 60;

/// p(n) by generating every non-increasing summand sequence.
std::int64_t partition_bruteforce(std::int64_t n);

/// exp(pi sqrt(2n/3)) / (4 n sqrt 3). Asymptotic only; never a bound.
double hardy_ramanujan(std::int64_t n);

}  // namespace kmroots::combinatorics
