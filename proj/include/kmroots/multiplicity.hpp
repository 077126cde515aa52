#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/root_vector.hpp"

namespace kmroots {

/// mult is dim g_beta; c is the Peterson auxiliary sum_{k | beta} mult(beta/k)/k.
struct MultEntry {
  mpz_class mult;
  mpq_class c;
  friend bool operator==(const MultEntry&, const MultEntry&) = default;
};

/// Content hash of (A, q), hex encoded; keys caches and reports.
std::string matrix_id(const CartanMatrix& a, const Symmetrizer& q);

/// Exact root multiplicities for every positive lattice vector of height at
/// most max_height(). Only vectors with c != 0 are stored; any other positive
/// vector in range has multiplicity 0. Published tables are immutable and safe
/// to share across threads.
class MultiplicityTable {
 public:
  MultiplicityTable(CartanMatrix a, Symmetrizer q);

  const CartanMatrix& matrix() const noexcept { return a_; }
  const Symmetrizer& symmetrizer() const noexcept { return q_; }
  const GramTable& gram() const noexcept { return b_; }
  const std::string& id() const noexcept { return id_; }
  int max_height() const noexcept { return max_height_; }

  /// Entry for a positive vector, or nullptr when c vanishes there.
  const MultEntry* find(const RootVector& x) const;

  /// dim g_x for any nonzero x: negatives via mult(-x), mixed vectors are 0.
  /// Throws ZeroVector, HeightBoundExceeded beyond max_height().
  mpz_class mult(const RootVector& x) const;
  mpq_class c(const RootVector& x) const;
  bool in_range(const RootVector& x) const noexcept;

  /// Stored entries in (height, lexicographic) order.
  std::vector<std::pair<RootVector, MultEntry>> sorted_entries() const;
  std::size_t size() const noexcept { return entries_.size(); }

  /// Number of vectors where (beta, beta - 2 rho) vanished and c had to be
  /// resolved from the Weyl reduction instead of the recurrence.
  std::size_t degenerate_count() const noexcept { return degenerate_; }

  // Engine and cache access.
  void insert(const RootVector& x, MultEntry e);
  void set_max_height(int h) noexcept { max_height_ = h; }
  void add_degenerate(std::size_t n) noexcept { degenerate_ += n; }

 private:
  CartanMatrix a_;
  Symmetrizer q_;
  GramTable b_;
  std::string id_;
  int max_height_ = 0;
  std::size_t degenerate_ = 0;
  std::unordered_map<RootVector, MultEntry, RootVectorHash> entries_;
};

enum class Execution { Serial, Parallel };

struct EngineOptions {
  Execution execution = Execution::Parallel;
  int threads = 0;  // 0: OpenMP default
};

/// All positive vectors of the given height with connected support, in
/// lexicographic order.
std::vector<RootVector> level_candidates(const CartanMatrix& a, int height);

/// Result of evaluating one candidate against the frozen lower levels.
struct LevelValue {
  RootVector beta;
  MultEntry entry;
  bool degenerate = false;
};

/// Serial reference kernel for one height level.
std::vector<LevelValue> compute_level_serial(const MultiplicityTable& lower, const std::vector<RootVector>& level);
/// OpenMP kernel for one height level; must agree exactly with the serial one.
std::vector<LevelValue> compute_level_parallel(const MultiplicityTable& lower, const std::vector<RootVector>& level,
                                               int threads = 0);

/// Extends `table` level by level up to `max_height`.
void extend_table(MultiplicityTable& table, int max_height, const EngineOptions& opts = {});

MultiplicityTable compute_table(const CartanMatrix& a, const Symmetrizer& q, int max_height,
                                const EngineOptions& opts = {});

/// Peterson recurrence value for a positive beta (table lookup).
mpq_class peterson_c(const MultiplicityTable& table, const RootVector& beta);

/// Positive roots up to height h (h <= table height) with multiplicities,
/// sorted by (height, lexicographic).
std::vector<std::pair<RootVector, mpz_class>> enumerate_roots(const MultiplicityTable& table, int h);

/// Default table height by rank: 40 up to rank 3, 24 for rank 4, 16 beyond.
int default_height_for_rank(std::size_t rank);

}  // namespace kmroots
