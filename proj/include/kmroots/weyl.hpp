#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/root_vector.hpp"

namespace kmroots {

/// Word in the simple reflections; letters are applied left to right, so
/// apply({i, j}, x) = s_j(s_i(x)).
struct WeylWord {
  std::vector<std::size_t> letters;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

RootVector reflect(const CartanMatrix& a, std::size_t i, const RootVector& x);
RootVector apply(const CartanMatrix& a, const WeylWord& w, const RootVector& x);

enum class ReductionStop {
  Simple,        // terminal vector is a simple root
  Chamber,       // terminal vector has all coroot pairings <= 0
  LeftPositive,  // the next reflection would leave the positive cone
};

struct Reduction {
  RootVector terminal;
  WeylWord word;
  ReductionStop stop = ReductionStop::Simple;
};

/// Height-decreasing reduction of a positive vector. At each step reflects in
/// the smallest index with positive pairing. Throws NotPositive.
Reduction reduce(const CartanMatrix& a, const RootVector& x);

enum class RootKind { Real, Imaginary, NotARoot };
std::string_view to_string(RootKind k);

/// Exact root test by Weyl reduction of |x|. Throws ZeroVector.
RootKind classify_root(const CartanMatrix& a, const GramTable& b, const RootVector& x);

struct ReducedPair {
  RootVector alpha;
  RootVector beta;
  WeylWord word;
};

/// Applies the reduction word of |beta| to both vectors, so beta lands in K
/// (or -K) when imaginary and on +-simple when real. Throws NotARoot(beta).
ReducedPair orbit_reduce_pair(const CartanMatrix& a, const GramTable& b, const RootVector& alpha,
                              const RootVector& beta);

}  // namespace kmroots
