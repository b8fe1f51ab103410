#ifndef INVSUB_LINALG_HPP
#define INVSUB_LINALG_HPP

#include "invsub/matrix.hpp"
#include "invsub/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invsub {

/// Univariate polynomial with rational coefficients, ascending degree.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients at all.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly monomial(const Rational& c, std::size_t degree);

  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  /// Evaluates the polynomial at a square matrix (Horner in matrix form).
  RatMatrix operator()(const RatMatrix& m) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;

  /// Exact division by (x - r); the remainder is returned through `rem`.
  UniPoly divide_linear(const Rational& r, Rational& rem) const;

  bool operator==(const UniPoly& o) const = default;

  /// Human-readable form in the variable `var`, descending powers.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// det(x·I - m), computed through exact Hessenberg reduction.
UniPoly char_poly(const RatMatrix& m);

/// Rational part of the spectrum. `residual` is the monic factor of the
/// characteristic polynomial left after every rational linear factor is
/// divided out (the constant 1 when the spectrum is fully rational).
struct RationalSpectrum {
  std::vector<Rational> values;  // ascending, each listed once
  std::map<Rational, int> multiplicity;
  UniPoly residual;

  bool complete() const { return residual.degree() == 0; }
};

RationalSpectrum rational_eigenvalues(const RatMatrix& m);

/// Rational roots of p via the rational root theorem, ascending, with
/// multiplicities; `residual` receives the quotient left over.
RationalSpectrum rational_roots(const UniPoly& p);

/// Basis of ker(m). Fraction-free Gauss-Jordan elimination; one basis
/// vector per free column in ascending order, scaled to integer entries
/// with content 1 and a positive entry at its free column.
std::vector<RatVector> null_space(const RatMatrix& m);

/// null_space together with the free column of each basis vector: vector i
/// is non-zero at free_columns[i] and zero at every other free column.
struct Kernel {
  std::vector<RatVector> basis;
  std::vector<std::size_t> free_columns;
};
Kernel kernel(const RatMatrix& m);

/// Plain rational Gauss-Jordan null space, used to cross-check the
/// fraction-free path. Same normalization as null_space.
std::vector<RatVector> null_space_naive(const RatMatrix& m);

struct LinearSolution {
  bool consistent = false;
  RatVector particular;
  std::vector<RatVector> kernel;
};

LinearSolution solve_linear(const RatMatrix& m, const RatVector& rhs);

std::size_t rank(const RatMatrix& m);

/// Determinant by Bareiss elimination.
Rational determinant(const RatMatrix& m);

/// Canonical basis of the row span of `rows`: reduced row-echelon rows,
/// each scaled to integer entries with content 1 and a positive pivot.
/// Zero rows are dropped.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& rows, std::size_t width);

/// Whether two lists of vectors span the same subspace.
bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t width);

/// Whether v lies in the span of `basis`.
bool in_span(const RatVector& v, const std::vector<RatVector>& basis);

}  // namespace invsub

#endif  // INVSUB_LINALG_HPP
