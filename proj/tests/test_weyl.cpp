#include <gtest/gtest.h>

#include <random>

#include "kmroots/error.hpp"
#include "kmroots/weyl.hpp"
#include "support.hpp"

using namespace kmroots;

namespace {

struct Algebra {
  CartanMatrix a;
  GramTable b;
  explicit Algebra(const IntMatrix& m) : a(validate(m)), b(a, symmetrize(a)) {}
  RootKind kind(const RootVector& x) const { return classify_root(a, b, x); }
};

}  // namespace

TEST(Weyl, ReflectSimple) {
  const Algebra s(kmtest::kA2);
  EXPECT_EQ(reflect(s.a, 0, RootVector({1, 0})), RootVector({-1, 0}));
  EXPECT_EQ(reflect(s.a, 0, RootVector({0, 1})), RootVector({1, 1}));
  EXPECT_EQ(apply(s.a, WeylWord{{0, 1}}, RootVector({0, 1})), RootVector({1, 0}));
}

TEST(Weyl, RootKindExamples) {
  const Algebra a2(kmtest::kA2);
  EXPECT_EQ(a2.kind(RootVector({2, 0})), RootKind::NotARoot);
  EXPECT_EQ(a2.kind(RootVector({1, 1})), RootKind::Real);
  EXPECT_EQ(a2.kind(RootVector({-1, -1})), RootKind::Real);
  EXPECT_EQ(a2.kind(RootVector({1, -1})), RootKind::NotARoot);
  EXPECT_EQ(a2.kind(RootVector({2, 1})), RootKind::NotARoot);
  const Algebra aff(kmtest::kA1Aff);
  EXPECT_EQ(aff.kind(RootVector({1, 1})), RootKind::Imaginary);
  EXPECT_EQ(aff.kind(RootVector({3, 3})), RootKind::Imaginary);
  EXPECT_EQ(aff.kind(RootVector({2, 1})), RootKind::Real);
  EXPECT_EQ(aff.kind(RootVector({3, 1})), RootKind::NotARoot);
  const Algebra hyp(kmtest::kHyp3);
  EXPECT_EQ(hyp.kind(RootVector({1, 1})), RootKind::Imaginary);
  EXPECT_EQ(hyp.kind(RootVector({3, 1})), RootKind::Real);
  EXPECT_EQ(hyp.kind(RootVector({2, 0})), RootKind::NotARoot);
  const Algebra r3(kmtest::kRank3);
  EXPECT_EQ(r3.kind(RootVector({1, 0, 1})), RootKind::NotARoot);
  EXPECT_THROW(r3.kind(RootVector(3)), Error);
}

TEST(Weyl, ReduceStops) {
  const Algebra hyp(kmtest::kHyp3);
  const auto r = reduce(hyp.a, RootVector({3, 8}));
  EXPECT_EQ(r.stop, ReductionStop::Simple);
  EXPECT_EQ(apply(hyp.a, r.word, RootVector({3, 8})), r.terminal);
  EXPECT_EQ(reduce(hyp.a, RootVector({1, 1})).stop, ReductionStop::Chamber);
  EXPECT_EQ(reduce(hyp.a, RootVector({2, 0})).stop, ReductionStop::LeftPositive);
  EXPECT_THROW(reduce(hyp.a, RootVector({-1, 0})), Error);
}

TEST(Weyl, OrbitReducePair) {
  const Algebra hyp(kmtest::kHyp3);
  const auto p = orbit_reduce_pair(hyp.a, hyp.b, RootVector({1, 0}), RootVector({3, 8}));
  EXPECT_EQ(p.beta.simple_index() >= 0 || (-p.beta).simple_index() >= 0, true);
  EXPECT_EQ(apply(hyp.a, p.word, RootVector({1, 0})), p.alpha);
  EXPECT_EQ(form(hyp.b, p.alpha, p.beta), form(hyp.b, RootVector({1, 0}), RootVector({3, 8})));
  EXPECT_THROW(orbit_reduce_pair(hyp.a, hyp.b, RootVector({1, 0}), RootVector({2, 0})), Error);
}

TEST(WeylProperty, ReflectionIsAnIsometricInvolution) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-8, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const Algebra s(kmtest::random_gcm(rng, 2 + trial % 4));
    const auto n = s.a.size();
    for (int k = 0; k < 20; ++k) {
      RootVector x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x.set(i, d(rng));
        y.set(i, d(rng));
      }
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_EQ(reflect(s.a, i, reflect(s.a, i, x)), x);
        ASSERT_EQ(form(s.b, reflect(s.a, i, x), reflect(s.a, i, y)), form(s.b, x, y));
      }
    }
  }
}

TEST(WeylProperty, RootKindIsWeylInvariantAndMatchesNorm) {
  std::mt19937 rng(23);
  for (const auto& m : {kmtest::kHyp3, kmtest::kRank3, kmtest::kTwisted, kmtest::kA2Aff}) {
    const Algebra s(m);
    const auto n = s.a.size();
    std::uniform_int_distribution<int> d(0, 5);
    std::uniform_int_distribution<std::size_t> letter(0, n - 1);
    for (int k = 0; k < 300; ++k) {
      RootVector x(n);
      for (std::size_t i = 0; i < n; ++i) x.set(i, d(rng));
      if (x.is_zero()) continue;
      const auto kind = s.kind(x);
      const auto norm = form(s.b, x, x);
      if (kind == RootKind::Real) EXPECT_GT(norm, 0) << x.str();
      if (kind == RootKind::Imaginary) EXPECT_LE(norm, 0) << x.str();
      EXPECT_EQ(s.kind(-x), kind);
      RootVector y = x;
      for (int step = 0; step < 4; ++step) y = reflect(s.a, letter(rng), y);
      EXPECT_EQ(s.kind(y), kind) << x.str() << " -> " << y.str();
    }
  }
}
