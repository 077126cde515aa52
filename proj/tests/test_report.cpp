#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "kmroots/error.hpp"
#include "kmroots/report.hpp"
#include "support.hpp"

using namespace kmroots;
using kmtest::table;
using json = nlohmann::json;

namespace {

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Report, RootRowCounts) {
  EXPECT_EQ(root_rows(table(kmtest::kA2, 3), 3).size(), 3u);
  EXPECT_EQ(root_rows(table(kmtest::kA1Aff, 4), 4).size(), 6u);
  EXPECT_EQ(root_rows(table(kmtest::kRank3, 4), 1).size(), 3u);
}

TEST(Report, RootsJsonFields) {
  const auto& t = table(kmtest::kA1Aff, 4);
  const auto j = json::parse(render_roots(t, root_rows(t, 4), Format::Json));
  ASSERT_EQ(j["roots"].size(), 6u);
  const auto& last = j["roots"][5];
  EXPECT_EQ(last["coeffs"], json::parse("[2,2]"));
  EXPECT_EQ(last["height"], 4);
  EXPECT_EQ(last["kind"], "imaginary");
  EXPECT_EQ(last["norm"], 0);
  EXPECT_EQ(last["mult"], 1);
  EXPECT_EQ(j["matrix_id"], t.id());
}

TEST(Report, RootsCsvAndTable) {
  const auto& t = table(kmtest::kA2, 3);
  const auto csv = render_roots(t, root_rows(t, 3), Format::Csv);
  EXPECT_EQ(line_count(csv), 4u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "coeffs,height,kind,norm,mult");
  EXPECT_NE(csv.find("\"1,1\",2,real,2,1"), std::string::npos);
  const auto tab = render_roots(t, root_rows(t, 3), Format::Table);
  EXPECT_EQ(line_count(tab), 5u);
}

TEST(Report, LargeMultiplicitiesBecomeStrings) {
  // Multiplicities pass 2^63 around height 70 for this matrix.
  const auto& t = table({{2, -10}, {-10, 2}}, 80);
  const auto j = json::parse(render_roots(t, root_rows(t, 80), Format::Json));
  bool saw_string = false;
  for (const auto& r : j["roots"]) {
    const mpz_class m = t.mult(RootVector(r["coeffs"].get<std::vector<long long>>()));
    if (m.fits_slong_p()) {
      ASSERT_TRUE(r["mult"].is_number_integer());
    } else {
      ASSERT_TRUE(r["mult"].is_string());
      EXPECT_EQ(r["mult"].get<std::string>(), m.get_str());
      saw_string = true;
    }
  }
  EXPECT_TRUE(saw_string);
}

TEST(Report, StringJson) {
  const auto& t = table(kmtest::kRank3, 20);
  const auto s = analyze(t, RootVector({0, 0, 1}), RootVector({1, 1, 0}));
  const auto j = json::parse(render_string(s, Format::Json));
  for (const char* key : {"alpha", "beta", "window", "dims", "classification", "growth", "certificates"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["classification"]["tag"], "SemiInfinitePlus");
  EXPECT_EQ(j["growth"]["tag"], "SuperPolynomialLB");
  EXPECT_EQ(j["dims"].size(), s.points.size());
  EXPECT_TRUE(j["origin"].is_null());
  const auto csv = render_string(s, Format::Csv);
  EXPECT_EQ(line_count(csv), s.points.size() + 1);
  EXPECT_NE(render_string(s, Format::Table).find("PartitionLB"), std::string::npos);
}

TEST(Report, VerificationFormats) {
  VerificationReport r;
  MatrixReport m;
  m.name = "x";
  CheckResult ok{"a", "statement", 3, {}, 1.5};
  CheckResult bad{"b", "statement", 2, {{{RootVector({1, 2})}, "detail"}}, 2.5};
  m.checks = {ok, bad};
  r.matrices = {m};
  const auto j = json::parse(render_report(r, Format::Json));
  EXPECT_FALSE(j["passed"]);
  EXPECT_EQ(j["failures"], 1);
  EXPECT_EQ(j["matrices"][0]["checks"][1]["failures"][0]["witness"][0], json::parse("[1,2]"));
  EXPECT_FALSE(j["matrices"][0]["checks"][0].contains("runtime_ms"));
  const auto timed = json::parse(render_report(r, Format::Json, true));
  EXPECT_TRUE(timed["matrices"][0]["checks"][0].contains("runtime_ms"));
  EXPECT_EQ(line_count(render_report(r, Format::Csv)), 3u);
  EXPECT_NE(render_report(r, Format::Table).find("FAIL"), std::string::npos);
}

TEST(Report, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_THROW(parse_format("xml"), Error);
}
