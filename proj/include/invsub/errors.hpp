#ifndef INVSUB_ERRORS_HPP
#define INVSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invsub {

/// Operand shapes do not fit together (non-square input, size mismatch).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix has eigenvalues outside the rationals.
class UnsupportedSpectrumError : public std::runtime_error {
 public:
  UnsupportedSpectrumError(std::size_t matrix_index, std::string residual_factor);

  std::size_t matrix_index() const noexcept { return matrix_index_; }
  const std::string& residual_factor() const noexcept { return residual_; }

 private:
  std::size_t matrix_index_;
  std::string residual_;
};

/// Raised when input text cannot be turned into a problem. Line and column
/// are 1-based; zero means "not tied to a position".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace invsub

#endif  // INVSUB_ERRORS_HPP
