#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asymprime/ideal.hpp"

namespace asymprime {

using Rational = boost::multiprecision::cpp_rational;

/// A point of Q^v with exact coordinates.
class RationalPoint {
 public:
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  /// The point a / n.
  static RationalPoint scaled(std::span<const Monomial::Exponent> a, std::uint64_t n);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<Rational> coords_;
};

/// conv(exponent vectors of the minimal generators) + nonnegative orthant.
class NewtonPolyhedron {
 public:
  /// Throws SpecError for the zero ideal, which has no polyhedron.
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }

  /// Exact feasibility of: mu >= 0, sum mu = 1, sum mu_g * g <= p.
  bool contains(const RationalPoint& p) const;

 private:
  std::size_t dim_;
  std::vector<Monomial> gens_;
};

/// x^a lies in the integral closure of I^n, i.e. a in n * NP(I).
bool np_member(std::span<const Monomial::Exponent> a, const MonomialIdeal& ideal,
               std::uint64_t n);

/// Minimal generators of the integral closure of I^n. n = 0 gives the unit
/// ideal.
MonomialIdeal closure_of_power(const MonomialIdeal& ideal, std::uint64_t n);

}  // namespace asymprime
