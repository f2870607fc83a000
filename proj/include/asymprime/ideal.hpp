#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asymprime/monomial.hpp"

namespace asymprime {

/// A monomial ideal stored as its antichain of minimal generators, sorted
/// lexicographically. The canonical form is unique, so `==` is ideal
/// equality. No generators is the zero ideal; the single generator 1 is the
/// unit ideal.
class MonomialIdeal {
 public:
  /// The zero ideal of the 0-variable ring; only useful as a placeholder.
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t nvars);
  static MonomialIdeal unit(std::size_t nvars);
  static MonomialIdeal principal(Monomial m);
  /// Canonicalizes `gens`. Throws DimensionError if a generator has the
  /// wrong number of variables.
  static MonomialIdeal from_generators(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_identity(); }

  bool contains(const Monomial& m) const;

  /// Largest exponent of each variable over the minimal generators.
  std::vector<Monomial::Exponent> max_exponents() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal canonicalize(std::size_t nvars, std::vector<Monomial> gens);

 private:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> canonical_gens)
      : nvars_(nvars), gens_(std::move(canonical_gens)) {}

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Minimal generators of the ideal generated by `gens`.
MonomialIdeal canonicalize(std::size_t nvars, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^n by repeated squaring; power(a, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, std::uint64_t n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (a : m).
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
/// (a : b). Colon by the zero ideal is the unit ideal.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// (a : b^oo), the stable value of (a : b^t). Throws SpecError if b is zero.
MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal radical(const MonomialIdeal& a);

/// Image after inverting every variable outside `keep`.
MonomialIdeal localize(const MonomialIdeal& a, VariableSet keep);

/// a is contained in b.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// The ideal (x_i : i in support) of `p` in `nvars` variables.
MonomialIdeal to_ideal(const MonomialPrime& p, std::size_t nvars);

/// True iff the ideal is a monomial prime; stores it in `out` if so.
bool as_prime(const MonomialIdeal& a, MonomialPrime& out);

/// `(x^2, x*y)`, `(0)` or `(1)`.
std::string to_string(const MonomialIdeal& a, const RingContext& ring);

}  // namespace asymprime
