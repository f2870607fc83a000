#include "asymprime/ass.hpp"

#include <algorithm>

namespace asymprime {

namespace {

void require_small_ring(std::size_t nvars) {
  if (nvars > kMaxAssVariables) {
    throw SpecError("associated primes need at most " + std::to_string(kMaxAssVariables) +
                    " variables, ring has " + std::to_string(nvars));
  }
}

}  // namespace

Subquotient::Subquotient(MonomialIdeal numerator, MonomialIdeal denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.nvars() != denominator_.nvars()) {
    throw DimensionError("subquotient ideals live in different rings");
  }
  if (!is_subset(denominator_, numerator_)) {
    throw SpecError("subquotient denominator is not contained in its numerator");
  }
}

Subquotient localize(const Subquotient& q, VariableSet keep) {
  return Subquotient(localize(q.numerator(), keep), localize(q.denominator(), keep));
}

std::optional<Monomial> socle_witness(VariableSet s, const MonomialIdeal& u_s,
                                      const MonomialIdeal& b_s) {
  const std::size_t v = u_s.nvars();
  // The socle of u_s / b_s over P_s is ((b_s : P_s) ∩ u_s) / b_s.
  const MonomialIdeal annihilated = colon(b_s, to_ideal(MonomialPrime(s), v));
  const MonomialIdeal socle = intersect(annihilated, u_s);
  for (const auto& g : socle.generators()) {
    if (!b_s.contains(g)) return g;
  }
  return std::nullopt;
}

AssSet assoc_primes(const Subquotient& q) {
  const std::size_t v = q.nvars();
  require_small_ring(v);
  AssSet out;
  if (q.is_zero()) return out;
  const std::uint32_t subsets = 1u << v;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const VariableSet s(mask);
    const Subquotient local = localize(q, s);
    if (local.is_zero()) continue;
    if (socle_witness(s, local.numerator(), local.denominator())) {
      out.insert(MonomialPrime(s));
    }
  }
  return out;
}

AssSet assoc_primes_big_oracle(const Subquotient& q, unsigned slack) {
  const std::size_t v = q.nvars();
  require_small_ring(v);
  AssSet out;
  if (q.is_zero()) return out;
  std::vector<Monomial::Exponent> cap = q.numerator().max_exponents();
  const auto cap_b = q.denominator().max_exponents();
  for (std::size_t i = 0; i < v; ++i) cap[i] = std::max(cap[i], cap_b[i]) + slack;

  std::vector<Monomial::Exponent> a(v, 0);
  for (;;) {
    const Monomial m(a);
    if (q.numerator().contains(m) && !q.denominator().contains(m)) {
      MonomialPrime p;
      if (as_prime(colon(q.denominator(), m), p)) out.insert(p);
    }
    std::size_t i = 0;
    while (i < v && a[i] == cap[i]) a[i++] = 0;
    if (i == v) break;
    ++a[i];
  }
  return out;
}

std::string to_string(const AssSet& s, const RingContext& ring) {
  if (s.empty()) return "-";
  std::string out;
  for (const auto& p : s) {
    if (!out.empty()) out += ';';
    out += to_string(p, ring);
  }
  return out;
}

}  // namespace asymprime
