#include <gtest/gtest.h>

#include <random>

#include "kmroots/error.hpp"
#include "kmroots/lattice.hpp"
#include "support.hpp"

using namespace kmroots;

TEST(Gram, SimpleRootNormsAndRho) {
  const auto a = validate(kmtest::kTwisted);
  const auto q = symmetrize(a);
  const GramTable b(a, q);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto e = RootVector::simple(3, i);
    EXPECT_EQ(form(b, e, e), 2 * q.q[i]);
    EXPECT_EQ(rho_pairing(b, e), q.q[i]);
  }
  EXPECT_EQ(form(b, RootVector({1, 2, 1}), RootVector({1, 2, 1})), 0);
}

TEST(Gram, Examples) {
  const auto a = validate(kmtest::kHyp3);
  const GramTable b(a, symmetrize(a));
  EXPECT_EQ(form(b, RootVector({1, 1}), RootVector({1, 1})), -2);
  EXPECT_EQ(form(b, RootVector({1, 0}), RootVector({1, 1})), -1);
  const auto r3 = validate(kmtest::kRank3);
  const GramTable b3(r3, symmetrize(r3));
  EXPECT_EQ(form(b3, RootVector({0, 0, 1}), RootVector({1, 1, 0})), -1);
}

TEST(Gram, DimensionMismatch) {
  const auto a = validate(kmtest::kA2);
  const GramTable b(a, symmetrize(a));
  EXPECT_THROW(form(b, RootVector({1, 0, 0}), RootVector({1, 0})), Error);
}

TEST(Lattice, ConnectedAndK) {
  const auto a = validate(kmtest::kRank3);
  EXPECT_TRUE(is_connected(a, RootVector({1, 1, 1})));
  EXPECT_FALSE(is_connected(a, RootVector({1, 0, 1})));
  EXPECT_THROW(is_connected(a, RootVector(3)), Error);
  EXPECT_TRUE(in_K(a, RootVector({1, 1, 0})));
  EXPECT_FALSE(in_K(a, RootVector({0, 0, 1})));
  EXPECT_TRUE(in_K(validate(kmtest::kHyp3), RootVector({1, 1})));
  EXPECT_EQ(pairing(a, RootVector({0, 0, 1}), 1), -1);
}

TEST(LatticeProperty, FormIsSymmetricBilinear) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = kmtest::random_gcm(rng, 3);
    const auto a = validate(m);
    const GramTable b(a, symmetrize(a));
    for (int k = 0; k < 20; ++k) {
      const RootVector x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)}, z{d(rng), d(rng), d(rng)};
      ASSERT_EQ(form(b, x, y), form(b, y, x));
      ASSERT_EQ(form(b, x + y, z), form(b, x, z) + form(b, y, z));
    }
  }
}
