#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "asymprime/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kSpec = 2, kInternal = 3 };

int run_command(const std::string& path, const asymprime::RunOptions& options,
                asymprime::ReportFormat format, const std::string& out_path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "asymprime: cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream text;
  text << in.rdbuf();

  asymprime::dsl::SourceProgram program;
  try {
    program = asymprime::dsl::parse(text.str());
  } catch (const asymprime::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kUsage;
  }

  std::optional<asymprime::Report> report;
  try {
    report = asymprime::run(program, options);
  } catch (const asymprime::SpecError& e) {
    std::cerr << "asymprime: invalid experiment: " << e.what() << "\n";
    return kSpec;
  } catch (const asymprime::DimensionError& e) {
    std::cerr << "asymprime: invalid experiment: " << e.what() << "\n";
    return kSpec;
  } catch (const asymprime::OverflowError& e) {
    std::cerr << "asymprime: invalid experiment: " << e.what() << "\n";
    return kSpec;
  }

  const std::string bytes = asymprime::emit(*report, format);
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << bytes)) {
      std::cerr << "asymprime: cannot write " << out_path << "\n";
      return kUsage;
    }
  }

  // L' ⊆ L ⊆ M holds by construction; a breach means the engine is wrong.
  for (const auto& a : report->analyses) {
    if (!a.chain.containment_violations.empty()) {
      std::cerr << "asymprime: internal invariant breach: " << a.chain.containment_violations.front() << "\n";
      return kInternal;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic associated primes of monomial multi-filtrations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run every analyze directive of a program");
  std::string file;
  std::vector<std::uint32_t> grid;
  std::string format = "json";
  std::uint32_t r_max = 0;
  std::uint32_t r_window = 0;
  std::string out_path;
  bool timing = false;
  run->add_option("file", file, "Program file")->required();
  auto* grid_opt = run->add_option("--grid", grid, "Grid bound, one value or one per axis")->delimiter(',');
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  auto* r_max_opt = run->add_option("--r-max", r_max, "Cap on the L chain parameter")->check(CLI::PositiveNumber);
  auto* r_window_opt =
      run->add_option("--r-window", r_window, "Equal chain steps needed to stop")->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_flag("--timing", timing, "Include wall-clock seconds per analysis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  asymprime::RunOptions options;
  if (*grid_opt) options.grid = grid;
  if (*r_max_opt) options.r_max = r_max;
  if (*r_window_opt) options.r_window = r_window;
  options.timing = timing;
  const auto fmt = format == "tsv" ? asymprime::ReportFormat::tsv : asymprime::ReportFormat::json;

  try {
    return run_command(file, options, fmt, out_path);
  } catch (const asymprime::Error& e) {
    std::cerr << "asymprime: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "asymprime: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
