#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymprime/asymptotics.hpp"
#include "asymprime/dsl.hpp"

namespace asymprime {

inline constexpr const char* kReportVersion = "1.0";

/// Command-line overrides applied to every analyze directive.
struct RunOptions {
  std::optional<std::vector<std::uint32_t>> grid;  // one value broadcasts to all axes
  std::optional<std::uint32_t> r_max;
  std::optional<std::uint32_t> r_window;
  bool timing = false;
};

/// Saturation fixtures carry a closed-form prediction for the stable value of
/// Ass(L_n), read over C = A/N: the primes of Ass(C) containing J + K + N.
struct InterpretedClaim {
  std::string statement;
  AssSet predicted;
  std::optional<AssSet> observed;  // stable set of Ass(L_n) on the grid, if any
  bool agrees = false;
};

struct AnalysisReport {
  std::string filtration_name;
  std::vector<std::string> family_names;
  ExperimentSpec spec;
  ValidationReport validation;
  ChainReport chain;
  MonomialIdeal torsion;  // T'
  std::vector<bool> grade_positive_axes;
  bool grade_positive_product = false;
  IndexSearch cancellation;
  IndexSearch artin_rees;
  TwoPathReport two_path;
  std::optional<InterpretedClaim> claim;
  std::vector<std::string> warnings;
  std::optional<double> seconds;
};

struct Report {
  RingContext ring;
  std::vector<AnalysisReport> analyses;
};

/// One ExperimentSpec per analyze directive, in program order. The declared
/// module N applies to every analysis, and saturations are evaluated
/// modulo N.
std::vector<ExperimentSpec> build_experiments(const dsl::SourceProgram& program,
                                              const RunOptions& options = {});

/// Runs every analysis. Throws SpecError when a filtration fails axiom
/// validation on its grid.
Report run(const dsl::SourceProgram& program, const RunOptions& options = {});

enum class ReportFormat { json, tsv };

/// Byte-deterministic serialization (unless timing was requested).
std::string emit(const Report& report, ReportFormat format);

}  // namespace asymprime
