#include "asymprime/newton.hpp"

#include <algorithm>
#include <limits>

namespace asymprime {

namespace {

// One inequality coeffs . mu <= rhs.
struct Row {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Scale so the first nonzero coefficient has absolute value 1; identical
// half-spaces then compare equal.
void normalize(Row& row) {
  for (const auto& c : row.coeffs) {
    if (c != 0) {
      const Rational scale = abs(c);
      for (auto& x : row.coeffs) x /= scale;
      row.rhs /= scale;
      return;
    }
  }
}

bool same_row(const Row& a, const Row& b) { return a.coeffs == b.coeffs && a.rhs == b.rhs; }

// Fourier-Motzkin elimination of every variable. Returns whether the system
// has a rational solution.
bool feasible(std::vector<Row> rows, std::size_t nvars) {
  for (std::size_t k = nvars; k-- > 0;) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.coeffs[k] > 0) {
        pos.push_back(std::move(r));
      } else if (r.coeffs[k] < 0) {
        neg.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational wp = -q.coeffs[k];
        const Rational wq = p.coeffs[k];
        Row combined{std::vector<Rational>(k), wp * p.rhs + wq * q.rhs};
        for (std::size_t j = 0; j < k; ++j) {
          combined.coeffs[j] = wp * p.coeffs[j] + wq * q.coeffs[j];
        }
        next.push_back(std::move(combined));
      }
    }
    rows.clear();
    for (auto& r : next) {
      r.coeffs.resize(k);
      const bool constant =
          std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& c) { return c == 0; });
      if (constant) {
        if (r.rhs < 0) return false;
        continue;
      }
      normalize(r);
      const bool dup =
          std::any_of(rows.begin(), rows.end(), [&](const Row& s) { return same_row(r, s); });
      if (!dup) rows.push_back(std::move(r));
    }
  }
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.rhs >= 0; });
}

}  // namespace

RationalPoint RationalPoint::scaled(std::span<const Monomial::Exponent> a, std::uint64_t n) {
  if (n == 0) throw SpecError("cannot scale by zero");
  std::vector<Rational> coords;
  coords.reserve(a.size());
  for (auto e : a) coords.emplace_back(Rational(e) / Rational(n));
  return RationalPoint(std::move(coords));
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : dim_(ideal.nvars()), gens_(ideal.generators().begin(), ideal.generators().end()) {
  if (gens_.empty()) throw SpecError("the zero ideal has no Newton polyhedron");
}

bool NewtonPolyhedron::contains(const RationalPoint& p) const {
  if (p.dim() != dim_) throw DimensionError("point dimension does not match polyhedron");
  // Substitute mu_last = 1 - sum(other mu) to remove the equality.
  const std::size_t m = gens_.size();
  const std::size_t nv = m - 1;
  const Monomial& last = gens_.back();
  std::vector<Row> rows;
  rows.reserve(nv + 1 + dim_);
  for (std::size_t j = 0; j < nv; ++j) {
    Row r{std::vector<Rational>(nv), Rational(0)};
    r.coeffs[j] = -1;
    rows.push_back(std::move(r));
  }
  rows.push_back(Row{std::vector<Rational>(nv, Rational(1)), Rational(1)});
  for (std::size_t i = 0; i < dim_; ++i) {
    Row r{std::vector<Rational>(nv), p[i] - Rational(last[i])};
    for (std::size_t j = 0; j < nv; ++j) {
      r.coeffs[j] = Rational(gens_[j][i]) - Rational(last[i]);
    }
    rows.push_back(std::move(r));
  }
  std::vector<Row> kept;
  for (auto& r : rows) {
    const bool constant =
        std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& c) { return c == 0; });
    if (constant) {
      if (r.rhs < 0) return false;
      continue;
    }
    kept.push_back(std::move(r));
  }
  return feasible(std::move(kept), nv);
}

bool np_member(std::span<const Monomial::Exponent> a, const MonomialIdeal& ideal,
               std::uint64_t n) {
  if (ideal.is_zero()) throw SpecError("integral closure membership needs a nonzero ideal");
  if (n == 0) throw SpecError("integral closure membership needs n >= 1");
  if (a.size() != ideal.nvars()) throw DimensionError("exponent vector has wrong length");
  return NewtonPolyhedron(ideal).contains(RationalPoint::scaled(a, n));
}

MonomialIdeal closure_of_power(const MonomialIdeal& ideal, std::uint64_t n) {
  if (ideal.is_zero()) throw SpecError("integral closure of the zero ideal is not supported");
  const std::size_t v = ideal.nvars();
  if (n == 0) return MonomialIdeal::unit(v);
  if (ideal.is_unit()) return ideal;

  // Vertices of n*NP(I) are the lattice points n*g, so a minimal lattice point
  // never exceeds n * max_g g_i in coordinate i.
  const auto maxes = ideal.max_exponents();
  std::vector<Monomial::Exponent> bound(v);
  for (std::size_t i = 0; i < v; ++i) {
    const std::uint64_t b = static_cast<std::uint64_t>(maxes[i]) * n;
    if (b / n != maxes[i] || b > std::numeric_limits<Monomial::Exponent>::max()) {
      throw OverflowError("closure enumeration box exceeds the exponent range");
    }
    bound[i] = static_cast<Monomial::Exponent>(b);
  }

  const NewtonPolyhedron poly(ideal);
  const MonomialIdeal plain = power(ideal, n);
  std::vector<Monomial> members;
  // Odometer with coordinate 0 fastest: every divisor of a point is visited
  // before the point itself.
  std::vector<Monomial::Exponent> a(v, 0);
  for (;;) {
    Monomial m(a);
    const bool covered = std::any_of(members.begin(), members.end(),
                                     [&](const Monomial& g) { return g.divides(m); });
    if (!covered &&
        (plain.contains(m) || poly.contains(RationalPoint::scaled(m.exponents(), n)))) {
      members.push_back(std::move(m));
    }
    std::size_t i = 0;
    while (i < v && a[i] == bound[i]) a[i++] = 0;
    if (i == v) break;
    ++a[i];
  }
  return canonicalize(v, std::move(members));
}

}  // namespace asymprime
