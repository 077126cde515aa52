#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/multiplicity.hpp"
#include "kmroots/root_vector.hpp"
#include "kmroots/strings.hpp"

namespace kmroots {

struct CheckFailure {
  std::vector<RootVector> witness;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string anchor;  // the statement being checked
  std::size_t instances = 0;
  std::vector<CheckFailure> failures;
  double runtime_ms = 0;
  bool passed() const noexcept { return failures.empty(); }
};

struct MatrixReport {
  std::string name;
  std::string matrix_id;
  IntMatrix rows;
  int max_height = 0;    // height used by the bounded checks
  int table_height = 0;  // height of the table actually computed
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

struct VerificationReport {
  std::vector<MatrixReport> matrices;
  bool passed() const noexcept;
  std::size_t failure_count() const noexcept;
};

struct CorpusEntry {
  std::string name;
  CartanMatrix matrix;
};

/// A2, A1(1), A2(1), D4(3), the rank-2 hyperbolic [[2,-3],[-3,2]] and the
/// rank-3 matrix with an affine principal submatrix.
std::vector<CorpusEntry> default_corpus();

struct VerifyOptions {
  int max_height = 12;
  int k_max = 10;              // multiples k*delta for the periodicity check
  int periodic_height_cap = 40;
  int string_height = 3;       // alpha, beta heights for the string sweep
  Window window = kDefaultWindow;
  EngineOptions engine;
  std::string cache_dir;       // empty: no cache
};

/// Table height needed for a matrix under `opts`.
int table_height_for(const CartanMatrix& a, const Symmetrizer& q, const VerifyOptions& opts);

// Individual checks. `h` bounds the vectors examined; the table may be taller.
CheckResult check_real_mult_one(const MultiplicityTable& t, int h);
CheckResult check_dim_sum_bound(const MultiplicityTable& t, int h);
CheckResult check_small_multiple(const MultiplicityTable& t);
CheckResult check_affine_periodicity(const MultiplicityTable& t, int k_max);
CheckResult check_submatrix(const MultiplicityTable& t, int h, const EngineOptions& engine = {});
CheckResult check_partition_bound(const MultiplicityTable& t, int alpha_height);
CheckResult check_increments(const MultiplicityTable& t, int h);
CheckResult check_strings(const MultiplicityTable& t, int max_height, Window window);

/// Runs every check on one matrix.
MatrixReport verify_matrix(const std::string& name, const CartanMatrix& a, const VerifyOptions& opts = {});
VerificationReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts = {});

}  // namespace kmroots
