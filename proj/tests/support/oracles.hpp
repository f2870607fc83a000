#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Everything here works on raw exponent vectors and enumerates
// exponent boxes; nothing calls the library's colon, intersection, power,
// saturation, localization, Ass or closure code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "asymprime/ass.hpp"
#include "asymprime/ideal.hpp"

namespace oracle {

using asymprime::AssSet;
using asymprime::Monomial;
using asymprime::MonomialIdeal;
using asymprime::MonomialPrime;
using asymprime::VariableSet;
using Exps = std::vector<std::uint32_t>;

inline Exps exps(const Monomial& m) { return Exps(m.exponents().begin(), m.exponents().end()); }

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool member(const MonomialIdeal& ideal, const Exps& m) {
  for (const auto& g : ideal.generators()) {
    if (divides(exps(g), m)) return true;
  }
  return false;
}

inline Exps add(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Exps cap_of(const std::vector<const MonomialIdeal*>& ideals, std::size_t nvars) {
  Exps cap(nvars, 0);
  for (const auto* ideal : ideals) {
    for (const auto& g : ideal->generators()) {
      for (std::size_t i = 0; i < nvars; ++i) cap[i] = std::max(cap[i], g[i]);
    }
  }
  return cap;
}

/// Visits every exponent vector 0 <= m <= cap.
inline void for_box(const Exps& cap, const std::function<void(const Exps&)>& visit) {
  Exps m(cap.size(), 0);
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < m.size() && m[i] == cap[i]) m[i++] = 0;
    if (i == m.size()) return;
    ++m[i];
  }
}

/// Keeps the elements not divisible by another element.
inline MonomialIdeal minimal(std::size_t nvars, std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) keep.emplace_back(gens[i]);
  }
  return MonomialIdeal::from_generators(nvars, std::move(keep));
}

/// The ideal of all monomials satisfying an up-closed predicate, assuming
/// every minimal element lies in the box.
inline MonomialIdeal ideal_from_box(std::size_t nvars, const Exps& cap,
                                    const std::function<bool(const Exps&)>& in) {
  std::vector<Exps> gens;
  for_box(cap, [&](const Exps& m) {
    if (!in(m)) return;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] == 0) continue;
      Exps down = m;
      --down[i];
      if (in(down)) return;
    }
    gens.push_back(m);
  });
  return minimal(nvars, std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exps> gens;
  for (const auto& g : a.generators()) gens.push_back(exps(g));
  for (const auto& g : b.generators()) gens.push_back(exps(g));
  return minimal(a.nvars(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exps> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(add(exps(g), exps(h)));
  }
  return minimal(a.nvars(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& a, std::uint32_t n) {
  MonomialIdeal out = minimal(a.nvars(), {Exps(a.nvars(), 0)});
  for (std::uint32_t k = 0; k < n; ++k) out = oracle::product(out, a);
  return out;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
  return ideal_from_box(a.nvars(), cap_of({&a, &b}, a.nvars()),
                        [&](const Exps& m) { return member(a, m) && member(b, m); });
}

/// (a : b) by definition: m with m * g in a for every generator g of b.
inline MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  const std::size_t v = a.nvars();
  if (b.is_zero() || a.is_unit()) return MonomialIdeal::unit(v);
  if (a.is_zero()) return a;
  return ideal_from_box(v, cap_of({&a}, v), [&](const Exps& m) {
    for (const auto& g : b.generators()) {
      if (!member(a, add(m, exps(g)))) return false;
    }
    return true;
  });
}

inline MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal cur = a;
  while (true) {
    MonomialIdeal next = oracle::colon(cur, b);
    if (next == cur) return cur;
    cur = next;
  }
}

inline MonomialIdeal localize(const MonomialIdeal& a, VariableSet keep) {
  std::vector<Exps> gens;
  for (const auto& g : a.generators()) {
    Exps e = exps(g);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!keep.contains(i)) e[i] = 0;
    }
    gens.push_back(e);
  }
  return minimal(a.nvars(), std::move(gens));
}

inline MonomialIdeal prime_ideal(VariableSet s, std::size_t nvars) {
  std::vector<Exps> gens;
  for (std::size_t i : s.indices()) {
    Exps e(nvars, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return minimal(nvars, std::move(gens));
}

/// Ass(U/B) by scanning the whole cap box of each localization for a socle
/// element: m in U_S \ B_S with x_i m in B_S for every i in S.
inline AssSet ass_by_socle_scan(const MonomialIdeal& u, const MonomialIdeal& b) {
  const std::size_t v = u.nvars();
  AssSet out;
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    const VariableSet s(mask);
    const MonomialIdeal us = oracle::localize(u, s);
    const MonomialIdeal bs = oracle::localize(b, s);
    Exps cap = cap_of({&us, &bs}, v);
    for (std::size_t i = 0; i < v; ++i) {
      if (!s.contains(i)) cap[i] = 0;
    }
    bool found = false;
    for_box(cap, [&](const Exps& m) {
      if (found || !member(us, m) || member(bs, m)) return;
      for (std::size_t i : s.indices()) {
        Exps up = m;
        ++up[i];
        if (!member(bs, up)) return;
      }
      found = true;
    });
    if (found) out.insert(MonomialPrime(s));
  }
  return out;
}

/// Some kn generators of `ideal` have exponent sum <= k a, i.e.
/// x^{ka} in I^{kn}. Sums above ka can never help, so only the minimal
/// reachable partial sums inside the box are carried forward.
inline bool power_member_bounded(const MonomialIdeal& ideal, const Exps& target, std::uint32_t count) {
  std::set<Exps> frontier{Exps(target.size(), 0)};
  for (std::uint32_t step = 0; step < count; ++step) {
    std::vector<Exps> next;
    for (const auto& s : frontier) {
      for (const auto& g : ideal.generators()) {
        Exps t = add(s, exps(g));
        if (divides(t, target)) next.push_back(t);
      }
    }
    std::set<Exps> reduced;
    for (const auto& t : next) {
      bool dominated = false;
      for (const auto& u : next) {
        if (u != t && divides(u, t)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) reduced.insert(t);
    }
    if (reduced.empty()) return false;
    frontier = std::move(reduced);
  }
  return true;
}

inline std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Absolute values of the nonzero maximal minors of the matrix whose columns
/// are (g, 1) for each generator g and (e_i, 0) for each variable. Any vertex
/// of {mu >= 0, sum mu = 1, sum mu_g g <= a/n} has n * mu with denominator
/// dividing one of them.
inline std::set<std::int64_t> determinant_set(const MonomialIdeal& ideal) {
  const std::size_t v = ideal.nvars();
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& g : ideal.generators()) {
    std::vector<std::int64_t> c(v + 1, 1);
    for (std::size_t i = 0; i < v; ++i) c[i] = g[i];
    cols.push_back(c);
  }
  for (std::size_t i = 0; i < v; ++i) {
    std::vector<std::int64_t> c(v + 1, 0);
    c[i] = 1;
    cols.push_back(c);
  }
  std::set<std::int64_t> out{1};
  std::vector<bool> pick(cols.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(std::min(v + 1, cols.size())), pick.end(), true);
  do {
    std::vector<std::vector<std::int64_t>> m(v + 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!pick[j]) continue;
      for (std::size_t i = 0; i <= v; ++i) m[i].push_back(cols[j][i]);
    }
    if (m[0].size() != v + 1) continue;
    const std::int64_t d = det(m);
    if (d != 0) out.insert(d < 0 ? -d : d);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

/// Valuative test: x^a is integral over I^n iff x^{ka} in I^{kn} for some k,
/// and a k from the determinant set always suffices.
inline bool integral_over_power(const MonomialIdeal& ideal, const Exps& a, std::uint32_t n,
                                const std::set<std::int64_t>& dets) {
  for (std::int64_t k : dets) {
    Exps ka(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ka[i] = static_cast<std::uint32_t>(k) * a[i];
    if (power_member_bounded(ideal, ka, static_cast<std::uint32_t>(k) * n)) return true;
  }
  return false;
}

// ---- random generators ----

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint32_t below(std::uint32_t n) {
    return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(engine);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine); }
};

inline Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_exp) {
  std::vector<std::uint32_t> e(nvars);
  for (auto& x : e) x = rng.below(max_exp + 1);
  return Monomial(std::move(e));
}

/// A nonzero proper ideal: every generator has positive degree.
inline MonomialIdeal random_proper_ideal(Rng& rng, std::size_t nvars, std::uint32_t max_gens,
                                         std::uint32_t max_exp) {
  std::vector<Monomial> gens;
  const std::uint32_t count = 1 + rng.below(max_gens);
  while (gens.size() < count) {
    Monomial m = random_monomial(rng, nvars, max_exp);
    if (!m.is_identity()) gens.push_back(std::move(m));
  }
  return MonomialIdeal::from_generators(nvars, std::move(gens));
}

/// Zero, unit or a random proper ideal.
inline MonomialIdeal random_ideal(Rng& rng, std::size_t nvars, std::uint32_t max_gens,
                                  std::uint32_t max_exp) {
  switch (rng.below(8)) {
    case 0: return MonomialIdeal::zero(nvars);
    case 1: return MonomialIdeal::unit(nvars);
    default: return random_proper_ideal(rng, nvars, max_gens, max_exp);
  }
}

/// U/B with B inside U; covers B = 0 and U = A.
inline asymprime::Subquotient random_subquotient(Rng& rng, std::size_t nvars, std::uint32_t max_exp) {
  MonomialIdeal b = rng.coin(0.15) ? MonomialIdeal::zero(nvars) : random_proper_ideal(rng, nvars, 4, max_exp);
  MonomialIdeal u;
  switch (rng.below(4)) {
    case 0: u = MonomialIdeal::unit(nvars); break;
    case 1: u = b; break;
    default: u = oracle::sum(b, random_proper_ideal(rng, nvars, 3, max_exp)); break;
  }
  return asymprime::Subquotient(std::move(u), std::move(b));
}

}  // namespace oracle
