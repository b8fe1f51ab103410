#ifndef INVSUB_PROBLEM_HPP
#define INVSUB_PROBLEM_HPP

#include "invsub/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invsub {

struct ProblemFile {
  int n = 0;
  std::vector<RatMatrix> matrices;
  std::optional<Rational> shift;
};

/// Parses either input layout (see README): text starting with '{' is read
/// as JSON, anything else as the line-oriented block format. Errors carry
/// 1-based line and column numbers.
ProblemFile parse_problem(std::string_view text);

/// Line-oriented layout with the same content as the input.
std::string format_problem(const ProblemFile& problem);

}  // namespace invsub

#endif  // INVSUB_PROBLEM_HPP
