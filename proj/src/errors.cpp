#include "invsub/errors.hpp"

namespace invsub {

UnsupportedSpectrumError::UnsupportedSpectrumError(std::size_t matrix_index, std::string residual_factor)
    : std::runtime_error("matrix " + std::to_string(matrix_index + 1) +
                         " has eigenvalues outside the rationals; unresolved factor " + residual_factor),
      matrix_index_(matrix_index),
      residual_(std::move(residual_factor)) {}

namespace {

std::string with_position(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  std::string out = "line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  return out + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(with_position(what, line, column)), line_(line), column_(column) {}

}  // namespace invsub
