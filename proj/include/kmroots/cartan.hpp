#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmroots/root_vector.hpp"

namespace kmroots {

using IntMatrix = std::vector<std::vector<long long>>;

inline constexpr std::size_t kDefaultMaxRank = 16;

/// A validated generalized Cartan matrix together with its Dynkin adjacency.
/// Immutable once constructed; obtain one through validate().
class CartanMatrix {
 public:
  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept { return i != j && a_[i * n_ + j] != 0; }

  /// Connected components of the Dynkin diagram, each sorted, ordered by first index.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  bool connected() const noexcept { return components_.size() == 1; }

  IntMatrix rows() const;
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Rank of A over Q.
  std::size_t matrix_rank() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  friend CartanMatrix validate(const IntMatrix&, std::size_t);
  std::size_t n_ = 0;
  std::vector<int> a_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<std::size_t>> components_;
  std::string name_;
};

/// Checks the three defining conditions; throws Error(NotGCM) naming the
/// violated condition and position, Error(RankTooLarge) above max_rank.
CartanMatrix validate(const IntMatrix& raw, std::size_t max_rank = kDefaultMaxRank);

/// q with q_i A_ij = q_j A_ji, coprime positive integers on each component.
struct Symmetrizer {
  std::vector<std::int64_t> q;
  friend bool operator==(const Symmetrizer&, const Symmetrizer&) = default;
};

Symmetrizer symmetrize(const CartanMatrix& a);

enum class TypeTag { Finite, Affine, Indefinite };
std::string_view to_string(TypeTag t);

/// Type of one connected component. For Affine, null_root is the positive
/// coprime kernel generator, expressed over the full index set.
struct MatrixType {
  std::vector<std::size_t> component;
  TypeTag tag = TypeTag::Indefinite;
  std::optional<RootVector> null_root;
};

/// One entry per Dynkin component, in component order.
std::vector<MatrixType> classify_type(const CartanMatrix& a, const Symmetrizer& q);

/// Type of the principal submatrix on `indices` (must be connected).
MatrixType classify_subset(const CartanMatrix& a, const Symmetrizer& q, const std::vector<std::size_t>& indices);

/// Principal submatrix on J (indices renumbered in increasing order).
CartanMatrix submatrix(const CartanMatrix& a, std::vector<std::size_t> subset);

}  // namespace kmroots
