#include "asymprime/report.hpp"

#include <chrono>
#include <json.hpp>
#include <map>
#include <sstream>

namespace asymprime {

namespace {

using nlohmann::json;

struct Bindings {
  std::map<std::string, MonomialIdeal> ideals;
  std::map<std::string, dsl::Filt> filtrations;
  MonomialIdeal base;
};

MonomialIdeal to_ideal(const dsl::Gens& gens, const RingContext& ring) {
  if (gens.zero) return MonomialIdeal::zero(ring.nvars());
  std::vector<Monomial> monos;
  for (const auto& m : gens.monos) {
    Monomial acc(ring.nvars());
    for (const auto& f : m.factors) {
      acc = acc * pow(Monomial::variable(ring.nvars(), ring.index_of(f.variable)), f.exponent);
    }
    monos.push_back(std::move(acc));
  }
  return MonomialIdeal::from_generators(ring.nvars(), std::move(monos));
}

Bindings bind(const dsl::SourceProgram& program, const RingContext& ring) {
  Bindings b;
  b.base = MonomialIdeal::zero(ring.nvars());
  for (const auto& st : program.statements) {
    if (auto* s = std::get_if<dsl::IdealStmt>(&st)) {
      b.ideals.emplace(s->name, to_ideal(s->gens, ring));
    } else if (auto* s = std::get_if<dsl::ModuleStmt>(&st)) {
      b.base = to_ideal(s->gens, ring);
    } else if (auto* s = std::get_if<dsl::FiltrationStmt>(&st)) {
      b.filtrations.emplace(s->name, s->filt);
    }
  }
  return b;
}

Filtration build_filtration(const dsl::Filt& f, const Bindings& b, std::size_t nvars,
                            std::size_t context_dim) {
  auto ideal = [&](std::size_t i) { return b.ideals.at(f.args[i]); };
  switch (f.kind) {
    case dsl::Filt::Kind::trivial:
      return Filtration::trivial(nvars, context_dim);
    case dsl::Filt::Kind::powers:
      return Filtration::powers(IdealFamily({ideal(0)}));
    case dsl::Filt::Kind::saturation:
      return Filtration::saturation(IdealFamily({ideal(0)}), ideal(1), b.base);
    case dsl::Filt::Kind::closure:
      return Filtration::closure(ideal(0));
    case dsl::Filt::Kind::intersect_powers: {
      std::vector<MonomialIdeal> ideals;
      for (std::size_t i = 0; i < f.args.size(); ++i) ideals.push_back(ideal(i));
      return Filtration::intersection_powers(std::move(ideals));
    }
    case dsl::Filt::Kind::product: {
      std::vector<Filtration> factors;
      for (const auto& c : f.children) factors.push_back(build_filtration(c, b, nvars, 1));
      return Filtration::axis_product(std::move(factors));
    }
  }
  throw InvariantError("unhandled filtration kind");
}

MultiIndex grid_for(const dsl::AnalyzeStmt& a, const RunOptions& options) {
  const std::size_t d = a.family.size();
  if (!options.grid) return MultiIndex(a.grid);
  const auto& g = *options.grid;
  if (g.size() == 1) return MultiIndex::diagonal(d, g[0]);
  if (g.size() != d) {
    throw DimensionError("--grid has " + std::to_string(g.size()) + " bounds but analyze " +
                         a.filtration + " has a family of " + std::to_string(d) + " ideals");
  }
  return MultiIndex(g);
}

std::vector<const dsl::AnalyzeStmt*> analyses(const dsl::SourceProgram& program) {
  std::vector<const dsl::AnalyzeStmt*> out;
  for (const auto& st : program.statements) {
    if (auto* a = std::get_if<dsl::AnalyzeStmt>(&st)) out.push_back(a);
  }
  return out;
}

std::optional<InterpretedClaim> saturation_claim(const dsl::Filt& f, const Bindings& b,
                                                 const ExperimentSpec& spec,
                                                 const ChainReport& chain) {
  if (f.kind != dsl::Filt::Kind::saturation) return std::nullopt;
  const std::size_t v = spec.ring.nvars();
  const MonomialIdeal support = sum(sum(b.ideals.at(f.args[0]), b.ideals.at(f.args[1])), spec.base);
  InterpretedClaim claim;
  claim.statement = "Ass(L_n) = Ass(C) ∩ V(J + K + N) for large n";
  for (const auto& p : assoc_primes(Subquotient(MonomialIdeal::unit(v), spec.base))) {
    if (is_subset(support, to_ideal(p, v))) claim.predicted.insert(p);
  }
  if (chain.l.stable) claim.observed = chain.l.stable_set;
  claim.agrees = claim.observed && *claim.observed == claim.predicted;
  return claim;
}

void collect_warnings(AnalysisReport& r) {
  const auto& c = r.chain;
  for (std::size_t i = 0; i < c.m.indices.size(); ++i) {
    if (c.l_chain_capped[i]) {
      r.warnings.push_back("L chain reached r_max=" + std::to_string(r.spec.r_max) + " at n=" +
                           to_string(c.m.indices[i]) + " without stabilizing");
    }
  }
  if (c.inconclusive > 0) {
    r.warnings.push_back(std::to_string(c.inconclusive) +
                         " shifted-containment probes inconclusive at the grid edge");
  }
  for (const auto& s : c.shifts) {
    if (s.outcome != ShiftOutcome::refuted) continue;
    r.warnings.push_back(std::string("shifted containment refuted: ") +
                         (s.kind == ShiftRecord::Kind::lprime_from_l ? "Ass(L)" : "Ass(M/L)") +
                         " at n=" + to_string(s.n) + " prime " + to_string(s.prime, r.spec.ring));
  }
  for (const auto& v : c.implication_violations) r.warnings.push_back("implication violated: " + v);
  for (const auto& v : c.containment_violations) r.warnings.push_back("containment violated: " + v);
  for (const auto& n : r.two_path.mismatches) {
    r.warnings.push_back("L computation paths disagree at n=" + to_string(n));
  }
  if (r.claim && !r.claim->agrees) r.warnings.push_back("interpreted claim not observed on the grid");
}

// ---- serialization ----

json primes_json(const AssSet& s, const RingContext& ring) {
  json out = json::array();
  for (const auto& p : s) out.push_back(to_string(p, ring));
  return out;
}

json index_json(const MultiIndex& n) { return json(n.entries()); }

json optional_index(const std::optional<MultiIndex>& n) {
  return n ? index_json(*n) : json(nullptr);
}

json index_list(const std::vector<MultiIndex>& v) {
  json out = json::array();
  for (const auto& n : v) out.push_back(index_json(n));
  return out;
}

json summary_json(const StabilizationReport& s, const RingContext& ring) {
  return {
      {"stable", s.stable},
      {"k", optional_index(s.k)},
      {"k_minimal", index_list(s.k_minimal)},
      {"stable_set", s.stable_set ? primes_json(*s.stable_set, ring) : json(nullptr)},
      {"monotone_from", optional_index(s.monotone_from)},
      {"union", primes_json(s.union_all, ring)},
  };
}

json search_json(const IndexSearch& s) {
  return {{"applicable", s.applicable}, {"k", optional_index(s.k)}, {"minimal", index_list(s.minimal)}};
}

json analysis_json(const AnalysisReport& r, const RingContext& ring) {
  const auto& spec = r.spec;
  json family = json::array();
  for (std::size_t i = 0; i < spec.family.dim(); ++i) {
    family.push_back({{"name", r.family_names[i]}, {"ideal", to_string(spec.family[i], ring)}});
  }
  json experiment = {
      {"family", family},
      {"filtration", {{"name", r.filtration_name}, {"normalized", spec.filtration.describe(ring)}}},
      {"grid", index_json(spec.grid)},
      {"module", to_string(spec.base, ring)},
      {"r_max", spec.r_max},
      {"r_window", spec.r_window},
  };

  const auto& c = r.chain;
  json sequence = json::array();
  for (std::size_t i = 0; i < c.m.indices.size(); ++i) {
    sequence.push_back({
        {"index", index_json(c.m.indices[i])},
        {"M", primes_json(c.m.sequence[i], ring)},
        {"L", primes_json(c.l.sequence[i], ring)},
        {"Lprime", primes_json(c.lprime.sequence[i], ring)},
        {"L_chain_t", c.l_chain_t[i]},
        {"L_chain_capped", static_cast<bool>(c.l_chain_capped[i])},
    });
  }

  json refuted = json::array();
  for (const auto& s : c.shifts) {
    if (s.outcome != ShiftOutcome::refuted) continue;
    refuted.push_back({{"kind", s.kind == ShiftRecord::Kind::lprime_from_l ? "L_to_Lprime" : "quotient_to_M"},
                       {"n", index_json(s.n)},
                       {"prime", to_string(s.prime, ring)}});
  }

  json violation = nullptr;
  if (r.validation.violation) {
    const auto& v = *r.validation.violation;
    violation = {{"axiom", v.axiom},
                 {"n", index_json(v.n)},
                 {"other", optional_index(v.other)},
                 {"detail", v.detail}};
  }

  json checks = {
      {"validation",
       {{"passed", r.validation.passed},
        {"scope", "verified on grid"},
        {"grid", index_json(r.validation.grid)},
        {"checks", r.validation.checks},
        {"violation", violation}}},
      {"chain",
       {{"implication_violations", c.implication_violations},
        {"containment_violations", c.containment_violations},
        {"shifts",
         {{"verified", c.verified}, {"inconclusive", c.inconclusive}, {"refuted", c.refuted},
          {"refuted_probes", refuted}}}}},
      {"torsion", to_string(r.torsion, ring)},
      {"grade_positive", {{"axes", r.grade_positive_axes}, {"product", r.grade_positive_product}}},
      {"cancellation_index", search_json(r.cancellation)},
      {"artin_rees_index", search_json(r.artin_rees)},
      {"two_path_L",
       {{"from", optional_index(r.two_path.from)},
        {"compared", r.two_path.compared},
        {"mismatches", index_list(r.two_path.mismatches)}}},
  };

  json out = {
      {"experiment", experiment},
      {"sequence", sequence},
      {"stabilization",
       {{"M", summary_json(c.m, ring)}, {"L", summary_json(c.l, ring)}, {"Lprime", summary_json(c.lprime, ring)}}},
      {"checks", checks},
      {"warnings", r.warnings},
  };
  if (r.claim) {
    out["interpreted_claim"] = {
        {"statement", r.claim->statement},
        {"predicted", primes_json(r.claim->predicted, ring)},
        {"observed", r.claim->observed ? primes_json(*r.claim->observed, ring) : json(nullptr)},
        {"agrees", r.claim->agrees},
    };
  }
  if (r.seconds) out["timing_seconds"] = *r.seconds;
  return out;
}

std::string emit_json(const Report& report) {
  json analyses = json::array();
  for (const auto& a : report.analyses) analyses.push_back(analysis_json(a, report.ring));
  json root = {
      {"version", kReportVersion},
      {"ring", report.ring.variable_names()},
      {"analyses", analyses},
  };
  return root.dump(2) + "\n";
}

std::string stable_line(const char* label, const StabilizationReport& s, const RingContext& ring) {
  std::string out = std::string("# ") + label;
  if (s.stable) {
    out += " stable on [" + to_string(*s.k) + ", " + to_string(s.grid) + "]: " + to_string(*s.stable_set, ring);
  } else {
    out += " not stable on the grid";
  }
  return out + "\n";
}

std::string emit_tsv(const Report& report) {
  std::ostringstream out;
  const auto& ring = report.ring;
  for (std::size_t a = 0; a < report.analyses.size(); ++a) {
    const auto& r = report.analyses[a];
    if (a > 0) out << '\n';
    out << "# " << r.filtration_name << " = " << r.spec.filtration.describe(ring) << " over (";
    for (std::size_t i = 0; i < r.family_names.size(); ++i) out << (i ? ", " : "") << r.family_names[i];
    out << ") grid " << to_string(r.spec.grid) << ", N = " << to_string(r.spec.base, ring) << '\n';
    out << "index\tM\tL\tLprime\n";
    const auto& c = r.chain;
    for (std::size_t i = 0; i < c.m.indices.size(); ++i) {
      out << to_string(c.m.indices[i]) << '\t' << to_string(c.m.sequence[i], ring) << '\t'
          << to_string(c.l.sequence[i], ring) << '\t' << to_string(c.lprime.sequence[i], ring) << '\n';
    }
    out << stable_line("M", c.m, ring) << stable_line("L", c.l, ring) << stable_line("Lprime", c.lprime, ring);
    for (const auto& w : r.warnings) out << "# warning: " << w << '\n';
    if (r.seconds) out << "# timing_seconds: " << *r.seconds << '\n';
  }
  return out.str();
}

}  // namespace

std::vector<ExperimentSpec> build_experiments(const dsl::SourceProgram& program, const RunOptions& options) {
  const RingContext ring(program.ring);
  const Bindings b = bind(program, ring);
  std::vector<ExperimentSpec> out;
  for (const auto* a : analyses(program)) {
    std::vector<MonomialIdeal> family;
    for (const auto& name : a->family) family.push_back(b.ideals.at(name));
    ExperimentSpec spec{ring,
                        IdealFamily(std::move(family)),
                        build_filtration(b.filtrations.at(a->filtration), b, ring.nvars(), a->family.size()),
                        b.base,
                        grid_for(*a, options)};
    if (options.r_max) spec.r_max = *options.r_max;
    if (options.r_window) spec.r_window = *options.r_window;
    spec.validate();
    out.push_back(std::move(spec));
  }
  return out;
}

Report run(const dsl::SourceProgram& program, const RunOptions& options) {
  const RingContext ring(program.ring);
  const Bindings b = bind(program, ring);
  const auto directives = analyses(program);
  auto specs = build_experiments(program, options);

  Report report{ring, {}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const auto& a = *directives[i];
    auto& spec = specs[i];

    ValidationReport validation = validate_multifiltration(spec.filtration, spec.family, spec.grid);
    if (!validation.passed) {
      const auto& v = *validation.violation;
      throw SpecError("filtration " + a.filtration + " fails axiom (" + std::to_string(v.axiom) +
                      ") at n=" + to_string(v.n) + ": " + v.detail);
    }

    ChainReport chain = check_chain(spec);
    std::vector<bool> axes;
    for (const auto& j : spec.family.ideals()) axes.push_back(grade_positive(j, spec.base));
    auto claim = saturation_claim(b.filtrations.at(a.filtration), b, spec, chain);
    AnalysisReport r{a.filtration,
                     a.family,
                     spec,
                     std::move(validation),
                     std::move(chain),
                     compute_T(spec),
                     std::move(axes),
                     grade_positive(spec.family.product_ideal(), spec.base),
                     cancellation_index(spec),
                     artin_rees_index(spec),
                     check_two_path_L(spec),
                     std::move(claim),
                     {},
                     std::nullopt};
    collect_warnings(r);
    if (options.timing) {
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report.analyses.push_back(std::move(r));
  }
  return report;
}

std::string emit(const Report& report, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(report) : emit_tsv(report);
}

}  // namespace asymprime
