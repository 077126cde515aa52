#pragma once

#include <cstdint>
#include <vector>

#include "kmroots/cartan.hpp"
#include "kmroots/root_vector.hpp"

namespace kmroots {

/// Gram matrix B_ij = q_i A_ij of the invariant form on the root lattice.
/// With the symmetrizer normalized to integers every entry is an integer, so
/// the form is evaluated exactly in 64-bit arithmetic.
class GramTable {
 public:
  GramTable(const CartanMatrix& a, const Symmetrizer& q);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return b_[i * n_ + j]; }
  const Symmetrizer& symmetrizer() const noexcept { return q_; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> b_;
  Symmetrizer q_;
};

/// (x, y) = x^T B y. Throws DimensionMismatch on rank mismatch.
std::int64_t form(const GramTable& b, const RootVector& x, const RootVector& y);

/// <x, alpha_i^vee> = sum_j x_j A_ij.
std::int64_t pairing(const CartanMatrix& a, const RootVector& x, std::size_t i);

/// (rho, x) with (rho, alpha_i) = q_i.
std::int64_t rho_pairing(const GramTable& b, const RootVector& x);

/// Support of x induces a connected Dynkin subgraph. Throws ZeroVector.
bool is_connected(const CartanMatrix& a, const RootVector& x);

/// x positive, connected, and <x, alpha_i^vee> <= 0 for every i.
bool in_K(const CartanMatrix& a, const RootVector& x);

}  // namespace kmroots
