// invsub: common invariant subspaces of a finite set of rational matrices.

#include "invsub/errors.hpp"
#include "invsub/invariant_search.hpp"
#include "invsub/linalg.hpp"
#include "invsub/problem.hpp"
#include "invsub/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kParse = 3,
  kUnsupportedSpectrum = 4,
  kIo = 5,
};

bool read_input(const std::string& path, std::string& out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

// INVSUB_COLOR=always|never|auto (default auto); NO_COLOR disables auto.
bool use_color() {
  const char* mode = std::getenv("INVSUB_COLOR");
  const std::string m = mode ? mode : "auto";
  if (m == "always") return true;
  if (m == "never") return false;
  return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common invariant subspaces of a finite set of rational matrices"};
  std::string input = "-";
  int dim = -1;
  bool all = false;
  std::string shift_text;
  std::string format = "text";
  int max_params = invsub::SolverOptions{}.max_params;
  bool timings = false;
  bool from_report = false;

  app.add_option("input", input, "Problem file, or '-' for standard input")->capture_default_str();
  auto* dim_opt = app.add_option("--dim", dim, "Report a single dimension d (0 <= d <= n)");
  app.add_flag("--all", all, "Report every dimension 0..n (default)")->excludes(dim_opt);
  app.add_option("--shift", shift_text, "Override the shift s (integer or p/q)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  app.add_option("--max-params", max_params, "Parameter budget of the constraint solver")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");
  app.add_flag("--from-report", from_report, "Read a machine-format report and render it again");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? kOk : kUsage;
  }

  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "invsub: cannot read " << input << "\n";
    return kIo;
  }

  try {
    if (from_report) {
      const auto report = invsub::parse_report(text);
      std::cout << (format == "machine" ? invsub::render_machine(report) : invsub::render_text(report, use_color()));
      return kOk;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto problem = invsub::parse_problem(text);
    invsub::MatrixSet ms{problem.matrices, 0};
    ms.validate();
    if (!shift_text.empty()) {
      if (!invsub::parse_rational(shift_text, ms.shift)) {
        std::cerr << "invsub: --shift: malformed value '" << shift_text << "'\n";
        return kUsage;
      }
    } else if (problem.shift) {
      ms.shift = *problem.shift;
    } else {
      ms.shift = invsub::choose_shift(ms.matrices);
    }
    if (dim_opt->count() > 0 && (dim < 0 || dim > problem.n)) {
      std::cerr << "invsub: --dim " << dim << " outside 0.." << problem.n << "\n";
      return kUsage;
    }
    for (std::size_t i = 0; i < ms.matrices.size(); ++i)
      if (invsub::determinant(ms.matrices[i].shifted(ms.shift)) == 0) {
        std::cerr << "invsub: shift " << invsub::to_string(ms.shift) << " leaves matrix " << i + 1 << " singular\n";
        return kUsage;
      }

    invsub::SearchOptions options;
    options.solver.max_params = max_params;
    std::map<int, std::vector<invsub::InvariantFamily>> families;
    const auto parsed = std::chrono::steady_clock::now();
    if (dim >= 0) {
      families[dim] = invsub::families_of_dimension(ms, dim, options);
    } else {
      families = invsub::full_lattice_scan(ms, options).by_dimension;
    }
    const auto done = std::chrono::steady_clock::now();

    auto report = invsub::make_report(ms, families);
    if (timings) {
      report.timings["parse"] = std::chrono::duration<double>(parsed - start).count();
      report.timings["search"] = std::chrono::duration<double>(done - parsed).count();
    }
    std::cout << (format == "machine" ? invsub::render_machine(report) : invsub::render_text(report, use_color()));
    if (!report.complete) std::cerr << "invsub: warning: some families were left unsolved; raise --max-params or inspect the residual constraints\n";
    return kOk;
  } catch (const invsub::ParseError& e) {
    std::cerr << "invsub: " << input << ": " << e.what() << "\n";
    return kParse;
  } catch (const invsub::DimensionError& e) {
    std::cerr << "invsub: " << input << ": " << e.what() << "\n";
    return kParse;
  } catch (const invsub::UnsupportedSpectrumError& e) {
    std::cerr << "invsub: " << e.what() << "\n";
    return kUnsupportedSpectrum;
  } catch (const std::exception& e) {
    std::cerr << "invsub: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
