#include "asymprime/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

namespace asymprime {

namespace {

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("monomial exponent overflow");
  }
  return out;
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionError("monomials have " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

RingContext::RingContext(std::vector<std::string> variable_names)
    : names_(std::move(variable_names)) {
  if (names_.empty()) {
    throw SpecError("ring needs at least one variable");
  }
  if (names_.size() > kMaxRingVariables) {
    throw SpecError("ring has " + std::to_string(names_.size()) + " variables; at most " +
                    std::to_string(kMaxRingVariables) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw SpecError("duplicate variable name '" + n + "'");
    }
  }
}

std::size_t RingContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<Exponent> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_identity() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
  }
  return Monomial(std::move(e));
}

Monomial pow(const Monomial& a, std::uint64_t n) {
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(a.exps_[i]) * n;
    if ((a.exps_[i] != 0 && v / a.exps_[i] != n) ||
        v > std::numeric_limits<Monomial::Exponent>::max()) {
      throw OverflowError("monomial exponent overflow");
    }
    e[i] = static_cast<Monomial::Exponent>(v);
  }
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const RingContext& ring) {
  if (m.nvars() != ring.nvars()) {
    throw DimensionError("monomial does not belong to this ring");
  }
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

VariableSet VariableSet::all(std::size_t nvars) {
  if (nvars > kMaxRingVariables) throw DimensionError("too many variables");
  return VariableSet(nvars == 32 ? ~0u : ((1u << nvars) - 1u));
}

VariableSet VariableSet::of(std::initializer_list<std::size_t> indices) {
  std::uint32_t mask = 0;
  for (auto i : indices) {
    if (i >= kMaxRingVariables) throw DimensionError("variable index out of range");
    mask |= 1u << i;
  }
  return VariableSet(mask);
}

std::size_t VariableSet::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> VariableSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxRingVariables; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool support_less(VariableSet a, VariableSet b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string to_string(const MonomialPrime& p, const RingContext& ring) {
  if (p.is_zero()) return "(0)";
  std::string out = "{";
  bool first = true;
  for (auto i : p.support().indices()) {
    if (i >= ring.nvars()) throw DimensionError("prime does not belong to this ring");
    if (!first) out += ',';
    out += ring.name(i);
    first = false;
  }
  return out + "}";
}

}  // namespace asymprime
