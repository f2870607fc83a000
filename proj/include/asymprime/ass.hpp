#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "asymprime/ideal.hpp"

namespace asymprime {

/// The associated-prime engine loops over all 2^v variable subsets; rings
/// with more variables are rejected with SpecError.
inline constexpr std::size_t kMaxAssVariables = 10;

/// The A-module U/B for monomial ideals B contained in U.
class Subquotient {
 public:
  /// Throws SpecError unless denominator is contained in numerator.
  Subquotient(MonomialIdeal numerator, MonomialIdeal denominator);

  const MonomialIdeal& numerator() const noexcept { return numerator_; }
  const MonomialIdeal& denominator() const noexcept { return denominator_; }
  std::size_t nvars() const noexcept { return numerator_.nvars(); }
  bool is_zero() const noexcept { return numerator_ == denominator_; }

  friend bool operator==(const Subquotient&, const Subquotient&) = default;

 private:
  MonomialIdeal numerator_;
  MonomialIdeal denominator_;
};

Subquotient localize(const Subquotient& q, VariableSet keep);

/// Associated primes, iterated in lexicographic support order.
using AssSet = std::set<MonomialPrime>;

/// A monomial m in the variables of `s` with m in u_s, m not in b_s and
/// x_i * m in b_s for every i in s. Both ideals must already be localized
/// at `s`. Every generator of ((b_s : P_s) ∩ u_s) lies in the cap box
/// m_i <= max exponent of x_i over both generator sets, so the search is
/// finite.
std::optional<Monomial> socle_witness(VariableSet s, const MonomialIdeal& u_s,
                                      const MonomialIdeal& b_s);

/// Ass_A(U/B): the primes P_S whose localized socle is nonzero.
AssSet assoc_primes(const Subquotient& q);

/// Brute-force Ass without localization: every monomial m in U \ B with
/// exponents up to cap + slack whose annihilator (B : m) is a monomial prime.
/// Independent check on assoc_primes.
AssSet assoc_primes_big_oracle(const Subquotient& q, unsigned slack);

/// `{x,y};{y}` style rendering; `-` for the empty set.
std::string to_string(const AssSet& s, const RingContext& ring);

}  // namespace asymprime
