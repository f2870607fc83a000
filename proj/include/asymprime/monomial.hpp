#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "asymprime/error.hpp"

namespace asymprime {

/// Hard limit on the number of ring variables. Variable subsets are stored as
/// 32-bit masks.
inline constexpr std::size_t kMaxRingVariables = 32;

/// The polynomial ring K[x_1, ..., x_v]. Only the variable names are kept; the
/// coefficient field never enters any computation.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> variable_names);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Index of a variable name, or nvars() if absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector of a monomial. Arithmetic is checked and throws
/// OverflowError instead of wrapping.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The identity monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_i in `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_identity() const noexcept;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// The sorted set of variable indices with nonzero exponent, as a mask.
  std::uint32_t support_mask() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Componentwise max.
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// Componentwise max(a - b, 0): the generator of ((a) : b).
  friend Monomial colon(const Monomial& a, const Monomial& b);
  friend Monomial pow(const Monomial& a, std::uint64_t n);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Renders a monomial as `x^2*y`, or `1` for the identity.
std::string to_string(const Monomial& m, const RingContext& ring);

/// A subset of the variable indices {0, ..., nvars-1}.
class VariableSet {
 public:
  constexpr VariableSet() = default;
  constexpr explicit VariableSet(std::uint32_t mask) : mask_(mask) {}
  static VariableSet all(std::size_t nvars);
  static VariableSet of(std::initializer_list<std::size_t> indices);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept;
  std::vector<std::size_t> indices() const;
  constexpr bool is_subset_of(VariableSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  friend constexpr bool operator==(VariableSet, VariableSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Lexicographic order on the sorted index lists: () < (0) < (0,1) < (1).
bool support_less(VariableSet a, VariableSet b);

/// The monomial prime (x_i : i in S). The empty support is the zero prime.
class MonomialPrime {
 public:
  MonomialPrime() = default;
  explicit MonomialPrime(VariableSet support) : support_(support) {}

  VariableSet support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    return support_less(a.support_, b.support_);
  }

 private:
  VariableSet support_;
};

/// `{x,y}` with variables in ring order; the zero prime renders as `(0)`.
std::string to_string(const MonomialPrime& p, const RingContext& ring);

}  // namespace asymprime
