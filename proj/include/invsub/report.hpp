#ifndef INVSUB_REPORT_HPP
#define INVSUB_REPORT_HPP

#include "invsub/invariant_search.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invsub {

struct ReportFamily {
  EigenTuple eigen;
  int parameters = 0;  // chart parameters t1..tk, including eliminated ones
  std::vector<std::optional<ParamPoly>> substitution;
  /// Chart multivector after substitution, lexicographic ⋀^d coordinates.
  std::vector<ParamPoly> multivector;
  std::vector<std::vector<ParamPoly>> generators;
  std::vector<ParamPoly> residual;
  bool solved = true;

  std::vector<int> free_parameters() const;
  bool operator==(const ReportFamily&) const = default;
};

struct ReportSection {
  int dimension = 0;
  std::vector<ReportFamily> families;

  bool operator==(const ReportSection&) const = default;
};

struct Report {
  static constexpr int kVersion = 1;

  int n = 0;
  int matrix_count = 0;
  Rational shift;
  bool complete = true;
  std::vector<ReportSection> sections;
  /// Wall-clock seconds per phase; only filled on request so that default
  /// output stays byte-identical across runs.
  std::map<std::string, double> timings;

  bool operator==(const Report&) const = default;
};

ReportFamily to_report_family(const InvariantFamily& family, int n);

/// Sections for the given dimensions, in ascending order.
Report make_report(const MatrixSet& ms, const std::map<int, std::vector<InvariantFamily>>& families);

/// Tabular layout: one section per dimension, one row per eigen tuple, free parameters named α, β, γ, ...
std::string render_text(const Report& report, bool color = false);

/// Versioned JSON document (schema in README); numbers are exact strings,
/// parameters are named t1, t2, ...
std::string render_machine(const Report& report);

/// Inverse of render_machine. Throws ParseError.
Report parse_report(std::string_view text);

/// Text form of one generator vector, e.g. "e₉+α(e₁+e₅)".
std::string render_vector(const std::vector<ParamPoly>& v, const std::vector<std::string>& names);

/// Greek names for the free parameters of a family; eliminated parameters
/// keep their t-name.
std::vector<std::string> text_parameter_names(const ReportFamily& family);

}  // namespace invsub

#endif  // INVSUB_REPORT_HPP
