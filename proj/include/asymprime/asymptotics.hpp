#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymprime/ass.hpp"
#include "asymprime/filtration.hpp"

namespace asymprime {

/// Data of one stabilization experiment: Ass_A(I_n C / J^n C) for C = A/N
/// over the grid 0 <= n <= grid.
struct ExperimentSpec {
  RingContext ring;
  IdealFamily family;
  Filtration filtration;
  MonomialIdeal base;  // N, with C = A/N
  MultiIndex grid;
  std::uint32_t r_window = 2;
  std::uint32_t r_max = 10;

  /// Throws SpecError or DimensionError on inconsistent data.
  void validate() const;
};

/// Minimal points of an up-set of the grid. `least` is the lexicographically
/// least minimal point; empty when the set is empty.
struct IndexSet {
  std::optional<MultiIndex> least;
  std::vector<MultiIndex> minimal;
};

/// Minimal grid points k such that `holds(n)` for every grid n >= k.
IndexSet least_index_from(const std::vector<MultiIndex>& points, const std::vector<bool>& holds);

/// Grid-relative stabilization of a sequence of Ass sets. `stable` is true
/// when some minimal k lies strictly below the grid bound in every
/// coordinate, i.e. the sequence is constant on a region with at least two
/// points per direction. Never a claim about n beyond the grid.
struct StabilizationReport {
  MultiIndex grid;
  std::vector<MultiIndex> indices;  // grid points in lexicographic order
  std::vector<AssSet> sequence;     // parallel to `indices`
  bool stable = false;
  std::optional<MultiIndex> k;
  std::vector<MultiIndex> k_minimal;
  std::optional<AssSet> stable_set;
  std::optional<MultiIndex> monotone_from;
  AssSet union_all;

  const AssSet& at(const MultiIndex& n) const;
};

StabilizationReport summarize(const MultiIndex& grid, std::vector<MultiIndex> indices,
                              std::vector<AssSet> sequence);

/// M_n = (I_n + N) / (J^n + N). Throws SpecError when J^n is not inside I_n.
Subquotient component(const ExperimentSpec& spec, const MultiIndex& n);

StabilizationReport ass_sequence(const ExperimentSpec& spec);

/// T' with T = H^0_J(C) = T'/N, J = J_1 ... J_d.
MonomialIdeal compute_T(const ExperimentSpec& spec);

/// L_n = H^0_{R_+}(M)_n with the ascending chain parameter that produced it.
struct LComponent {
  Subquotient module;
  std::uint32_t t = 0;     // chain index at which the value was taken
  bool stabilized = true;  // false when r_max was hit first
};

/// Numerator ((J^{n+t} + N) : (J_1...J_d)^t) ∩ (I_n + N), taken once r_window
/// consecutive chain steps leave it unchanged; denominator J^n + N.
LComponent compute_L_n(const ExperimentSpec& spec, const MultiIndex& n);

/// L'_n = (0 :_{M_n} R_+): numerator ((J^{n+1} + N) : J_1...J_d) ∩ (I_n + N).
Subquotient compute_Lprime_n(const ExperimentSpec& spec, const MultiIndex& n);

/// The closed form (J^n + N + T' ∩ (I_n + N)) / (J^n + N) that L_n takes for
/// large n.
Subquotient torsion_L_n(const ExperimentSpec& spec, const MultiIndex& n);

/// The ideal contains a nonzerodivisor on A/base.
bool grade_positive(const MonomialIdeal& ideal, const MonomialIdeal& base);

struct IndexSearch {
  bool applicable = true;
  std::optional<MultiIndex> k;
  std::vector<MultiIndex> minimal;
};

/// Least grid k with ((J^{n+r} + N) : J^r) = J^n + N for all grid n >= k and
/// grid r. Inapplicable unless every J_i has positive grade on C.
IndexSearch cancellation_index(const ExperimentSpec& spec);

/// Least grid k with T' ∩ (J^n + N) ⊆ N for all grid n >= k.
IndexSearch artin_rees_index(const ExperimentSpec& spec);

enum class ShiftOutcome { verified, inconclusive, refuted };

/// One shifted-containment probe: P in Ass(L_n) must reappear in some
/// Ass(L'_{n+s}), and P in Ass(M_n/L_n) in some Ass(M_{n+s}).
struct ShiftRecord {
  enum class Kind { lprime_from_l, m_from_quotient };
  Kind kind;
  MultiIndex n;
  MonomialPrime prime;
  ShiftOutcome outcome;
  std::optional<MultiIndex> witness;
};

struct ChainReport {
  StabilizationReport lprime;
  StabilizationReport l;
  StabilizationReport m;
  std::vector<std::uint32_t> l_chain_t;  // parallel to m.indices
  std::vector<bool> l_chain_capped;
  std::vector<std::string> implication_violations;
  std::vector<std::string> containment_violations;
  std::vector<ShiftRecord> shifts;  // every probe, in grid order
  std::size_t verified = 0;
  std::size_t inconclusive = 0;
  std::size_t refuted = 0;
};

/// Ass sequences of L', L and M with the implication pattern
/// (L' stable => L stable => M stable) and the shifted containments.
ChainReport check_chain(const ExperimentSpec& spec);

/// Agreement of compute_L_n with torsion_L_n on grid points past both the
/// cancellation index of C/T and the Artin-Rees index.
struct TwoPathReport {
  std::optional<MultiIndex> from;
  std::size_t compared = 0;
  std::vector<MultiIndex> mismatches;
};

TwoPathReport check_two_path_L(const ExperimentSpec& spec);

}  // namespace asymprime
