#include <gtest/gtest.h>

#include <filesystem>

#include "kmroots/cache.hpp"
#include "kmroots/report.hpp"
#include "kmroots/verify.hpp"
#include "support.hpp"

using namespace kmroots;
using kmtest::table;

namespace {

// Copy of a table with one multiplicity replaced (c kept consistent).
MultiplicityTable tampered(const MultiplicityTable& t, const RootVector& x, long mult) {
  MultiplicityTable out(t.matrix(), t.symmetrizer());
  out.set_max_height(t.max_height());
  for (const auto& [v, e] : t.sorted_entries()) out.insert(v, e);
  const mpz_class old = t.mult(x);
  out.insert(x, {mpz_class(mult), t.c(x) + mpq_class(mpz_class(mult) - old)});
  return out;
}

}  // namespace

TEST(Corpus, Contents) {
  const auto corpus = default_corpus();
  ASSERT_EQ(corpus.size(), 6u);
  std::vector<TypeTag> tags;
  for (const auto& e : corpus) tags.push_back(classify_type(e.matrix, symmetrize(e.matrix)).at(0).tag);
  EXPECT_EQ(tags, (std::vector<TypeTag>{TypeTag::Finite, TypeTag::Affine, TypeTag::Affine, TypeTag::Affine,
                                        TypeTag::Indefinite, TypeTag::Indefinite}));
}

TEST(VerifyChecks, RealMultOne) {
  const auto a2 = check_real_mult_one(table(kmtest::kA2, 3), 3);
  EXPECT_EQ(a2.instances, 3u);
  EXPECT_TRUE(a2.passed());
  EXPECT_TRUE(check_real_mult_one(table(kmtest::kA1Aff, 9), 9).passed());
  EXPECT_TRUE(check_real_mult_one(table(kmtest::kHyp3, 10), 10).passed());
  // Every non-multiple of delta in affine A1 with height <= 9 is real with mult 1.
  for (const auto& [x, m] : enumerate_roots(table(kmtest::kA1Aff, 9), 9))
    if (x[0] != x[1]) EXPECT_EQ(m, 1) << x.str();
}

TEST(VerifyChecks, RealMultOneReportsWitness) {
  const auto bad = tampered(table(kmtest::kHyp3, 10), RootVector({3, 1}), 2);
  const auto r = check_real_mult_one(bad, 10);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].witness.at(0), RootVector({3, 1}));
}

TEST(VerifyChecks, DimSumBound) {
  for (const auto& m : {kmtest::kHyp3, kmtest::kRank3}) {
    const auto r = check_dim_sum_bound(table(m, 12), 12);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.instances, 100u);
  }
}

TEST(VerifyChecks, SmallMultiple) {
  const auto r = check_small_multiple(table(kmtest::kHyp3, 10));
  EXPECT_EQ(r.instances, 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(check_small_multiple(table(kmtest::kA2, 10)).instances, 0u);

  auto bad = tampered(table(kmtest::kHyp3, 10), RootVector({3, 3}), 1);
  bad = tampered(bad, RootVector({4, 4}), 1);
  bad = tampered(bad, RootVector({5, 5}), 1);
  const auto f = check_small_multiple(bad);
  ASSERT_EQ(f.failures.size(), 1u);
  EXPECT_NE(f.failures[0].detail.find("1,1,1,1,1"), std::string::npos);
}

TEST(VerifyChecks, AffinePeriodicity) {
  EXPECT_TRUE(check_affine_periodicity(table(kmtest::kA1Aff, 20), 10).passed());
  EXPECT_TRUE(check_affine_periodicity(table(kmtest::kA2Aff, 30), 10).passed());
  const auto tw = check_affine_periodicity(table(kmtest::kTwisted, 40), 10);
  EXPECT_EQ(tw.instances, 1u);
  EXPECT_TRUE(tw.passed());
  const auto sub = check_affine_periodicity(table(kmtest::kRank3, 20), 10);
  EXPECT_EQ(sub.instances, 1u);
}

TEST(VerifyChecks, SubmatrixAndPartition) {
  EXPECT_TRUE(check_submatrix(table(kmtest::kRank3, 12), 12).passed());
  const auto p = check_partition_bound(table(kmtest::kRank3, 20), 3);
  EXPECT_GT(p.instances, 0u);
  EXPECT_TRUE(p.passed());
}

TEST(VerifyChecks, IncrementsReportWitness) {
  const auto& t = table(kmtest::kHyp3, 12);
  EXPECT_TRUE(check_increments(t, 12).passed());
  const auto bad = tampered(t, RootVector({4, 4}), 2);
  const auto r = check_increments(bad, 12);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failures[0].witness.size(), 2u);
}

TEST(VerifyChecks, StringSweep) {
  for (const auto& m : {kmtest::kA2, kmtest::kA1Aff, kmtest::kHyp3, kmtest::kRank3}) {
    const auto r = check_strings(table(m, 20), 3, kDefaultWindow);
    EXPECT_TRUE(r.passed()) << r.failures.front().detail;
  }
}

TEST(Verify, CorpusPassesAndIsDeterministic) {
  const auto first = verify_corpus(default_corpus());
  EXPECT_TRUE(first.passed());
  EXPECT_EQ(first.failure_count(), 0u);
  const auto second = verify_corpus(default_corpus(), {.engine = {Execution::Serial, 1}});
  EXPECT_EQ(render_report(first, Format::Json), render_report(second, Format::Json));
  for (const auto& m : first.matrices)
    for (const auto& c : m.checks) EXPECT_FALSE(c.anchor.empty());
}

TEST(Verify, UsesCacheDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "kmroots-verify-cache-test";
  std::filesystem::remove_all(dir);
  VerifyOptions opts;
  opts.cache_dir = dir.string();
  const auto a = validate(kmtest::kHyp3);
  const auto rep = verify_matrix("h", a, opts);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(std::filesystem::exists(cache_path(dir, rep.matrix_id)));
  const auto again = verify_matrix("h", a, opts);
  EXPECT_EQ(render_report({{again}}, Format::Json), render_report({{rep}}, Format::Json));
  std::filesystem::remove_all(dir);
}
