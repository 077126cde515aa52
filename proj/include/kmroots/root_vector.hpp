#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kmroots {

enum class Sign { Zero, Positive, Negative, Mixed };

std::string_view to_string(Sign s);

/// Integer coefficient vector over the simple roots of a root lattice.
///
/// Storage is inline (no heap) up to kCapacity coordinates so that the
/// multiplicity engine can build and hash millions of candidates cheaply.
/// Height and sign are cached and kept current by every mutator. Arithmetic
/// is checked: a coefficient overflow throws Error(Overflow).
class RootVector {
 public:
  using Coeff = std::int32_t;
  static constexpr std::size_t kCapacity = 32;

  RootVector() = default;
  explicit RootVector(std::size_t rank);
  RootVector(std::initializer_list<Coeff> coeffs);
  explicit RootVector(std::span<const Coeff> coeffs);
  explicit RootVector(const std::vector<long long>& coeffs);

  static RootVector simple(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return rank_; }
  Coeff operator[](std::size_t i) const noexcept { return c_[i]; }
  std::span<const Coeff> coeffs() const noexcept { return {c_.data(), rank_}; }

  void set(std::size_t i, Coeff value);
  void add(std::size_t i, Coeff delta);

  std::int64_t height() const noexcept { return height_; }
  Sign sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == Sign::Zero; }
  bool is_positive() const noexcept { return sign_ == Sign::Positive; }

  std::vector<std::size_t> support() const;
  bool supported_in(std::span<const std::size_t> subset) const;
  /// Index i if this is exactly the simple root alpha_i, otherwise -1.
  int simple_index() const noexcept;
  /// gcd of the absolute coefficients; 0 for the zero vector.
  Coeff content() const noexcept;
  /// Exact division by k; throws InvalidInput when some coefficient is not divisible.
  RootVector divided(Coeff k) const;
  /// Componentwise comparison: this <= other in every coordinate.
  bool dominated_by(const RootVector& other) const noexcept;

  RootVector operator-() const;
  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(std::int64_t k, const RootVector& v);

  friend bool operator==(const RootVector& a, const RootVector& b) noexcept;
  /// Ordering used for every sorted listing: by height, then lexicographic
  /// on the coefficient vector.
  friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) noexcept;

  std::size_t hash() const noexcept;

  /// "[1,2,0]"
  std::string str() const;
  /// Accepts "1,2,0", "[1,2,0]" or whitespace separated coefficients.
  static RootVector parse(std::string_view text);

 private:
  void refresh() noexcept;

  std::array<Coeff, kCapacity> c_{};
  std::uint32_t rank_ = 0;
  std::int64_t height_ = 0;
  Sign sign_ = Sign::Zero;
};

struct RootVectorHash {
  std::size_t operator()(const RootVector& v) const noexcept { return v.hash(); }
};

}  // namespace kmroots
