#include "asymprime/asymptotics.hpp"

#include <algorithm>

namespace asymprime {

namespace {

std::vector<MultiIndex> minimal_points(const std::vector<MultiIndex>& points,
                                       const std::vector<bool>& valid) {
  std::vector<MultiIndex> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!valid[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < points.size() && minimal; ++j) {
      if (j != i && valid[j] && points[j].leq(points[i])) minimal = false;
    }
    if (minimal) out.push_back(points[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t position(const std::vector<MultiIndex>& points, const MultiIndex& n) {
  auto it = std::lower_bound(points.begin(), points.end(), n);
  if (it == points.end() || *it != n) throw InvariantError("multi-index " + to_string(n) + " is off the grid");
  return static_cast<std::size_t>(it - points.begin());
}

MultiIndex unit_step(const MultiIndex& n, std::size_t i) {
  auto e = n.entries();
  ++e[i];
  return MultiIndex(std::move(e));
}

}  // namespace

void ExperimentSpec::validate() const {
  const std::size_t v = ring.nvars();
  if (v > kMaxAssVariables) {
    throw SpecError("ring has " + std::to_string(v) + " variables; the associated-prime engine " +
                    "supports at most " + std::to_string(kMaxAssVariables));
  }
  if (family.nvars() != v || filtration.nvars() != v || base.nvars() != v) {
    throw DimensionError("experiment ideals do not all live in the declared ring");
  }
  if (filtration.dim() != family.dim()) {
    throw DimensionError("filtration has dimension " + std::to_string(filtration.dim()) +
                         " but the family has " + std::to_string(family.dim()) + " ideals");
  }
  if (grid.dim() != family.dim()) {
    throw DimensionError("grid has " + std::to_string(grid.dim()) + " entries for a family of " +
                         std::to_string(family.dim()));
  }
  if (!MultiIndex::diagonal(grid.dim(), 1).leq(grid)) {
    throw SpecError("grid bound must be at least 1 in every coordinate");
  }
  if (base.is_unit()) throw SpecError("base module A/N is zero: N must be proper");
  if (r_window == 0 || r_max == 0) throw SpecError("r_window and r_max must be positive");
}

IndexSet least_index_from(const std::vector<MultiIndex>& points, const std::vector<bool>& holds) {
  std::vector<bool> valid(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < points.size() && ok; ++j) {
      if (points[i].leq(points[j]) && !holds[j]) ok = false;
    }
    valid[i] = ok;
  }
  IndexSet out;
  out.minimal = minimal_points(points, valid);
  if (!out.minimal.empty()) out.least = out.minimal.front();
  return out;
}

const AssSet& StabilizationReport::at(const MultiIndex& n) const {
  return sequence.at(position(indices, n));
}

StabilizationReport summarize(const MultiIndex& grid, std::vector<MultiIndex> indices,
                              std::vector<AssSet> sequence) {
  if (indices.size() != sequence.size()) throw InvariantError("sequence length mismatch");
  StabilizationReport r;
  r.grid = grid;
  r.indices = std::move(indices);
  r.sequence = std::move(sequence);
  const auto& pts = r.indices;
  const auto& seq = r.sequence;

  for (const auto& s : seq) r.union_all.insert(s.begin(), s.end());

  std::vector<bool> constant_from(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < pts.size() && ok; ++j) {
      if (pts[i].leq(pts[j]) && seq[j] != seq[i]) ok = false;
    }
    constant_from[i] = ok;
  }
  r.k_minimal = minimal_points(pts, constant_from);
  for (const auto& k : r.k_minimal) {
    if (k.strictly_below(grid)) {
      r.stable = true;
      r.k = k;
      break;
    }
  }
  if (!r.stable && !r.k_minimal.empty()) r.k = r.k_minimal.front();
  if (r.stable) r.stable_set = seq[position(pts, *r.k)];

  std::vector<bool> step_monotone(pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t c = 0; c < grid.dim(); ++c) {
      if (pts[i][c] == grid[c]) continue;
      const auto& next = seq[position(pts, unit_step(pts[i], c))];
      if (!std::includes(next.begin(), next.end(), seq[i].begin(), seq[i].end())) {
        step_monotone[i] = false;
      }
    }
  }
  r.monotone_from = least_index_from(pts, step_monotone).least;
  return r;
}

Subquotient component(const ExperimentSpec& spec, const MultiIndex& n) {
  const MonomialIdeal jn = spec.family.power(n);
  const MonomialIdeal in = spec.filtration.eval(n);
  if (!is_subset(jn, in)) {
    throw SpecError("filtration violates J^n ⊆ I_n at n = " + to_string(n));
  }
  return Subquotient(sum(in, spec.base), sum(jn, spec.base));
}

StabilizationReport ass_sequence(const ExperimentSpec& spec) {
  spec.validate();
  auto points = grid_points(spec.grid);
  std::vector<AssSet> seq;
  seq.reserve(points.size());
  for (const auto& n : points) seq.push_back(assoc_primes(component(spec, n)));
  return summarize(spec.grid, std::move(points), std::move(seq));
}

MonomialIdeal compute_T(const ExperimentSpec& spec) {
  return saturate(spec.base, spec.family.product_ideal());
}

LComponent compute_L_n(const ExperimentSpec& spec, const MultiIndex& n) {
  const Subquotient m = component(spec, n);
  const std::size_t d = spec.family.dim();
  const MonomialIdeal& upper = m.numerator();

  auto value = [&](std::uint32_t t) {
    const MultiIndex shift = MultiIndex::diagonal(d, t);
    const MonomialIdeal top = sum(spec.family.power(n + shift), spec.base);
    return intersect(spec.family.colon_power(top, shift), upper);
  };

  MonomialIdeal current = value(0);
  std::uint32_t equal_run = 0;
  std::uint32_t t = 0;
  bool stabilized = false;
  // The chain is ascending and bounded by I_n + N; reaching the bound is final.
  if (current == upper) stabilized = true;
  while (!stabilized && t < spec.r_max) {
    ++t;
    MonomialIdeal next = value(t);
    equal_run = next == current ? equal_run + 1 : 0;
    current = std::move(next);
    if (equal_run >= spec.r_window || current == upper) stabilized = true;
  }
  return LComponent{Subquotient(current, m.denominator()), t, stabilized};
}

Subquotient compute_Lprime_n(const ExperimentSpec& spec, const MultiIndex& n) {
  const Subquotient m = component(spec, n);
  const std::size_t d = spec.family.dim();
  const MultiIndex ones = MultiIndex::diagonal(d, 1);
  const MonomialIdeal top = sum(spec.family.power(n + ones), spec.base);
  return Subquotient(intersect(spec.family.colon_power(top, ones), m.numerator()),
                     m.denominator());
}

Subquotient torsion_L_n(const ExperimentSpec& spec, const MultiIndex& n) {
  const Subquotient m = component(spec, n);
  const MonomialIdeal t = compute_T(spec);
  return Subquotient(sum(m.denominator(), intersect(t, m.numerator())), m.denominator());
}

bool grade_positive(const MonomialIdeal& ideal, const MonomialIdeal& base) {
  const std::size_t v = ideal.nvars();
  const AssSet primes = assoc_primes(Subquotient(MonomialIdeal::unit(v), base));
  return std::none_of(primes.begin(), primes.end(), [&](const MonomialPrime& p) {
    return is_subset(ideal, to_ideal(p, v));
  });
}

IndexSearch cancellation_index(const ExperimentSpec& spec) {
  IndexSearch out;
  for (const auto& j : spec.family.ideals()) {
    if (!grade_positive(j, spec.base)) {
      out.applicable = false;
      return out;
    }
  }
  const auto points = grid_points(spec.grid);
  std::vector<bool> holds(points.size(), true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const MonomialIdeal target = sum(spec.family.power(points[i]), spec.base);
    for (const auto& r : points) {
      const MonomialIdeal top = sum(spec.family.power(points[i] + r), spec.base);
      if (spec.family.colon_power(top, r) != target) {
        holds[i] = false;
        break;
      }
    }
  }
  const IndexSet s = least_index_from(points, holds);
  out.k = s.least;
  out.minimal = s.minimal;
  return out;
}

IndexSearch artin_rees_index(const ExperimentSpec& spec) {
  IndexSearch out;
  const MonomialIdeal t = compute_T(spec);
  const auto points = grid_points(spec.grid);
  std::vector<bool> holds(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const MonomialIdeal jn = sum(spec.family.power(points[i]), spec.base);
    holds[i] = is_subset(intersect(t, jn), spec.base);
  }
  const IndexSet s = least_index_from(points, holds);
  out.k = s.least;
  out.minimal = s.minimal;
  return out;
}

ChainReport check_chain(const ExperimentSpec& spec) {
  spec.validate();
  const auto points = grid_points(spec.grid);
  const std::size_t d = spec.family.dim();
  ChainReport report;

  std::vector<AssSet> ass_m, ass_l, ass_lp, ass_q;
  for (const auto& n : points) {
    const Subquotient m = component(spec, n);
    const LComponent l = compute_L_n(spec, n);
    const Subquotient lp = compute_Lprime_n(spec, n);
    if (!is_subset(lp.numerator(), l.module.numerator())) {
      report.containment_violations.push_back("L'_n ⊄ L_n at n = " + to_string(n));
    }
    ass_m.push_back(assoc_primes(m));
    ass_l.push_back(assoc_primes(l.module));
    ass_lp.push_back(assoc_primes(lp));
    ass_q.push_back(assoc_primes(Subquotient(m.numerator(), l.module.numerator())));
    report.l_chain_t.push_back(l.t);
    report.l_chain_capped.push_back(!l.stabilized);
  }
  report.m = summarize(spec.grid, points, ass_m);
  report.l = summarize(spec.grid, points, ass_l);
  report.lprime = summarize(spec.grid, points, ass_lp);

  if (report.lprime.stable && !report.l.stable) {
    report.implication_violations.push_back(
        "Ass(L'_n) stable from " + to_string(*report.lprime.k) + " but Ass(L_n) is not stable on the grid");
  }
  if (report.l.stable && !report.m.stable) {
    report.implication_violations.push_back(
        "Ass(L_n) stable from " + to_string(*report.l.k) + " but Ass(M_n) is not stable on the grid");
  }

  // Probe n + j*(1,...,1) for j = 0..last; refute only if the whole range
  // fits in the grid and no probe contains the prime.
  auto probe = [&](ShiftRecord::Kind kind, const MultiIndex& n, const MonomialPrime& p,
                   const std::vector<AssSet>& target, std::uint32_t last, bool trusted) {
    ShiftRecord rec{kind, n, p, ShiftOutcome::inconclusive, std::nullopt};
    bool fits = true;
    for (std::uint32_t j = 0; j <= last; ++j) {
      const MultiIndex at = n + MultiIndex::diagonal(d, j);
      if (!at.leq(spec.grid)) {
        fits = false;
        break;
      }
      if (target[position(points, at)].count(p)) {
        rec.outcome = ShiftOutcome::verified;
        rec.witness = at;
        break;
      }
    }
    if (rec.outcome != ShiftOutcome::verified && fits && trusted) {
      rec.outcome = ShiftOutcome::refuted;
    }
    switch (rec.outcome) {
      case ShiftOutcome::verified: ++report.verified; break;
      case ShiftOutcome::inconclusive: ++report.inconclusive; break;
      case ShiftOutcome::refuted: ++report.refuted; break;
    }
    report.shifts.push_back(std::move(rec));
  };

  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint32_t t = report.l_chain_t[i];
    const bool trusted = !report.l_chain_capped[i];
    for (const auto& p : ass_l[i]) {
      probe(ShiftRecord::Kind::lprime_from_l, points[i], p, ass_lp, t > 0 ? t - 1 : 0, trusted);
    }
    for (const auto& p : ass_q[i]) {
      probe(ShiftRecord::Kind::m_from_quotient, points[i], p, ass_m, t, trusted);
    }
  }
  return report;
}

TwoPathReport check_two_path_L(const ExperimentSpec& spec) {
  spec.validate();
  TwoPathReport out;
  ExperimentSpec modulo_torsion = spec;
  modulo_torsion.base = compute_T(spec);
  const IndexSearch cancel = cancellation_index(modulo_torsion);
  const IndexSearch ar = artin_rees_index(spec);
  if (!cancel.k || !ar.k) return out;

  std::vector<MultiIndex::Entry> from(spec.grid.dim());
  for (std::size_t i = 0; i < from.size(); ++i) from[i] = std::max((*cancel.k)[i], (*ar.k)[i]);
  out.from = MultiIndex(std::move(from));

  for (const auto& n : grid_points(spec.grid)) {
    if (!out.from->leq(n)) continue;
    ++out.compared;
    if (compute_L_n(spec, n).module != torsion_L_n(spec, n)) out.mismatches.push_back(n);
  }
  return out;
}

}  // namespace asymprime
