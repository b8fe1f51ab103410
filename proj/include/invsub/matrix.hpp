#ifndef INVSUB_MATRIX_HPP
#define INVSUB_MATRIX_HPP

#include "invsub/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace invsub {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t height);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  RatVector column(std::size_t c) const;

  bool operator==(const RatMatrix& other) const = default;

  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatVector operator*(std::span<const Rational> v) const;

  /// m + s·I
  RatMatrix shifted(const Rational& s) const;
  RatMatrix transpose() const;

  /// Stacks matrices with equal column counts on top of each other.
  static RatMatrix vstack(std::span<const RatMatrix> blocks);

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace invsub

#endif  // INVSUB_MATRIX_HPP
