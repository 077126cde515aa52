#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "kmroots/multiplicity.hpp"

namespace kmroots {

inline constexpr int kCacheFormatVersion = 1;

/// Text serialization: a header (format, matrix id, rows, q, max height,
/// entry count) followed by one line "coeffs... mult c_num c_den" per stored
/// entry in (height, lexicographic) order.
void write_table(std::ostream& out, const MultiplicityTable& table);

/// Parses and re-checks a serialized table for (a, q). Throws CorruptCache on
/// any mismatch or failed invariant.
MultiplicityTable read_table(std::istream& in, const CartanMatrix& a, const Symmetrizer& q);

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& matrix_id);

/// Writes <dir>/<matrix_id>.kmc atomically (temp file + rename).
void cache_store(const std::filesystem::path& dir, const MultiplicityTable& table);

/// Loads the cached table for (a, q); nullopt when no file exists. A file whose
/// header names a different matrix id, or whose entries fail re-checks,
/// throws CorruptCache.
std::optional<MultiplicityTable> cache_load(const std::filesystem::path& dir, const CartanMatrix& a,
                                            const Symmetrizer& q);

/// Loads what is cached, extends to `max_height` if needed and stores the
/// result back when it grew. An empty dir disables caching.
MultiplicityTable load_or_compute(const std::filesystem::path& dir, const CartanMatrix& a, const Symmetrizer& q,
                                  int max_height, const EngineOptions& opts = {});

}  // namespace kmroots
