#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kmroots/multiplicity.hpp"
#include "kmroots/strings.hpp"
#include "kmroots/verify.hpp"
#include "kmroots/weyl.hpp"

namespace kmroots {

enum class Format { Json, Csv, Table };

/// "json", "csv" or "table"; throws InvalidInput otherwise.
Format parse_format(std::string_view text);

struct RootRow {
  RootVector coeffs;
  std::int64_t height = 0;
  RootKind kind = RootKind::NotARoot;
  std::int64_t norm = 0;
  mpz_class mult;
};

/// Positive roots up to height h, sorted by (height, lexicographic).
std::vector<RootRow> root_rows(const MultiplicityTable& table, int h);

// Renderers. JSON integers are numbers when they fit in 64 bits and decimal
// strings otherwise. Output is deterministic for fixed input.
std::string render_roots(const MultiplicityTable& table, const std::vector<RootRow>& rows, Format f);
std::string render_string(const RootString& s, Format f);
std::string render_report(const VerificationReport& r, Format f, bool timings = false);

}  // namespace kmroots
