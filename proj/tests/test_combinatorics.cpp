#include <gtest/gtest.h>

#include <cmath>

#include "kmroots/combinatorics.hpp"
#include "kmroots/error.hpp"

using namespace kmroots;
using namespace kmroots::combinatorics;

namespace {

mpz_class ipow(long m, unsigned long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m), n);
  return r;
}

}  // namespace

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(7), -1);
  EXPECT_THROW(mobius(0), Error);
}

TEST(Witt, Examples) {
  EXPECT_EQ(witt_dim(2, 1), 2);
  EXPECT_EQ(witt_dim(2, 5), 6);
  EXPECT_EQ(witt_dim(3, 2), 3);
  EXPECT_EQ(witt_dim(3, 4), 18);
  EXPECT_EQ(witt_dim(1, 1), 1);
  EXPECT_EQ(witt_dim(1, 2), 0);
}

TEST(Lyndon, ExamplesAndBounds) {
  EXPECT_EQ(lyndon_count(2, 5), 6);
  EXPECT_EQ(lyndon_count(2, 1), 2);
  EXPECT_EQ(lyndon_count(3, 3), 8);
  try {
    lyndon_count(5, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OracleBoundExceeded);
  }
  EXPECT_THROW(lyndon_count(2, 13), Error);
}

TEST(WittOracle, MatchesLyndonEnumeration) {
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 12; ++n) ASSERT_EQ(witt_dim(m, n), lyndon_count(m, n)) << m << "," << n;
}

TEST(WittProperty, NecklaceIdentity) {
  // m^n = sum_{d | n} d * witt(m, d)
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 30; ++n) {
      mpz_class s = 0;
      for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d * witt_dim(m, d);
      ASSERT_EQ(s, ipow(m, static_cast<unsigned long>(n))) << m << "," << n;
    }
}

TEST(WittProperty, CrudeLowerBound) {
  for (long m = 2; m <= 5; ++m)
    for (long n = 1; n <= 40; ++n) {
      const mpz_class lhs = 2 * n * witt_dim(m, n);
      ASSERT_GE(lhs, ipow(m, static_cast<unsigned long>(n))) << m << "," << n;
    }
}

TEST(Threshold, Examples) {
  EXPECT_GT(witt_dim(2, 6), 8);
  EXPECT_EQ(witt_dim(3, 4), 18);
  const auto half = witt_exponential_threshold(2, {1, 2});
  EXPECT_LE(half, 5);
  // epsilon near 1 makes the comparison nearly trivial.
  EXPECT_LE(witt_exponential_threshold(2, {99, 100}), 2);
  EXPECT_THROW(witt_exponential_threshold(2, {1, 1}), Error);
  EXPECT_THROW(witt_exponential_threshold(1, {1, 2}), Error);
}

TEST(ThresholdProperty, WindowHoldsAndStartFails) {
  for (long m = 2; m <= 4; ++m)
    for (std::int64_t num : {1, 2, 3}) {
      const Epsilon eps{num, 4};
      const auto n0 = witt_exponential_threshold(m, eps);
      auto holds = [&](long n) {
        mpz_class lhs, rhs;
        const mpz_class w = witt_dim(m, n);
        mpz_pow_ui(lhs.get_mpz_t(), w.get_mpz_t(), 4);
        mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>((4 - num) * n));
        return lhs > rhs;
      };
      for (long n = n0 + 1; n <= n0 + kThresholdWindow; ++n) ASSERT_TRUE(holds(n)) << m << " " << num << " " << n;
      if (n0 > 0) EXPECT_FALSE(holds(n0));
    }
}

TEST(Partition, Examples) {
  EXPECT_EQ(partition(0), 1);
  EXPECT_EQ(partition(5), 7);
  EXPECT_EQ(partition(8), 22);
  EXPECT_EQ(partition(10), 42);
  EXPECT_EQ(partition(100), mpz_class("190569292"));
  EXPECT_EQ(partition(-1), 0);
  EXPECT_EQ(partition_bruteforce(1), 1);
  EXPECT_EQ(partition_bruteforce(5), 7);
  EXPECT_EQ(partition_bruteforce(8), 22);
  EXPECT_THROW(partition_bruteforce(61), Error);
}

TEST(PartitionOracle, MatchesBruteForce) {
  for (std::int64_t n = 0; n <= 60; ++n) ASSERT_EQ(partition(n), partition_bruteforce(n)) << n;
}

TEST(HardyRamanujan, Examples) {
  EXPECT_NEAR(hardy_ramanujan(5), 8.94, 0.01);
  EXPECT_NEAR(hardy_ramanujan(100) / partition(100).get_d(), 1.05, 0.01);
  double prev = 1e9;
  for (int n : {20, 50, 100}) {
    const double r = hardy_ramanujan(n) / partition(n).get_d();
    EXPECT_LT(r, prev);
    EXPECT_GT(r, 1.0);
    prev = r;
  }
}
