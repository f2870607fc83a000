#include "asymprime/ideal.hpp"

#include <algorithm>

namespace asymprime {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionError("ideals live in rings with " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
  }
}

bool degree_then_lex(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  return da != db ? da < db : a < b;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial(nvars)});
}

MonomialIdeal MonomialIdeal::principal(Monomial m) {
  const auto n = m.nvars();
  return MonomialIdeal(n, {std::move(m)});
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t nvars, std::vector<Monomial> gens) {
  return canonicalize(nvars, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("monomial does not belong to this ring");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial::Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Monomial::Exponent> out(nvars_, 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < nvars_; ++i) out[i] = std::max(out[i], g[i]);
  }
  return out;
}

MonomialIdeal canonicalize(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) {
      throw DimensionError("generator has " + std::to_string(g.nvars()) +
                           " variables, ring has " + std::to_string(nvars));
    }
  }
  // A proper divisor has strictly smaller degree, so each candidate only
  // needs checking against generators already kept.
  std::sort(gens.begin(), gens.end(), degree_then_lex);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(nvars, std::move(kept));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return canonicalize(a.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return canonicalize(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint64_t n) {
  MonomialIdeal result = MonomialIdeal::unit(a.nvars());
  MonomialIdeal base = a;
  while (n > 0) {
    if (n & 1u) result = product(result, base);
    n >>= 1u;
    if (n > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return canonicalize(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
  if (m.nvars() != a.nvars()) throw DimensionError("monomial does not belong to this ring");
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) gens.push_back(colon(g, m));
  return canonicalize(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  MonomialIdeal result = MonomialIdeal::unit(a.nvars());
  for (const auto& g : b.generators()) {
    result = intersect(result, colon(a, g));
    if (result == a) break;  // (a : b) always contains a
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw SpecError("saturation by the zero ideal is undefined");
  // (a : b^(t+1)) = ((a : b^t) : b), so one repeat fixes the whole chain.
  MonomialIdeal current = a;
  for (;;) {
    MonomialIdeal next = colon(current, b);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) {
    std::vector<Monomial::Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return canonicalize(a.nvars(), std::move(gens));
}

MonomialIdeal localize(const MonomialIdeal& a, VariableSet keep) {
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) {
    std::vector<Monomial::Exponent> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = keep.contains(i) ? g[i] : 0;
    gens.emplace_back(std::move(e));
  }
  return canonicalize(a.nvars(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

MonomialIdeal to_ideal(const MonomialPrime& p, std::size_t nvars) {
  if (!p.support().is_subset_of(VariableSet::all(nvars))) {
    throw DimensionError("prime does not belong to this ring");
  }
  std::vector<Monomial> gens;
  for (auto i : p.support().indices()) gens.push_back(Monomial::variable(nvars, i));
  return canonicalize(nvars, std::move(gens));
}

bool as_prime(const MonomialIdeal& a, MonomialPrime& out) {
  std::uint32_t mask = 0;
  for (const auto& g : a.generators()) {
    if (g.degree() != 1) return false;
    mask |= g.support_mask();
  }
  out = MonomialPrime(VariableSet(mask));
  return true;
}

std::string to_string(const MonomialIdeal& a, const RingContext& ring) {
  if (a.is_zero()) return "(0)";
  // Generators are stored in increasing lex order; print leading terms first.
  std::string out = "(";
  for (auto it = a.generators().rbegin(); it != a.generators().rend(); ++it) {
    if (it != a.generators().rbegin()) out += ", ";
    out += to_string(*it, ring);
  }
  return out + ")";
}

}  // namespace asymprime
