#ifndef INVSUB_EXTERIOR_HPP
#define INVSUB_EXTERIOR_HPP

#include "invsub/index_set.hpp"
#include "invsub/matrix.hpp"
#include "invsub/param_poly.hpp"

#include <optional>
#include <vector>

namespace invsub {

/// Element of the d-th exterior power of an n-dimensional space. Coordinates
/// follow the lexicographic basis e_I, |I| = d, and are polynomials in k
/// parameters (k = 0 for plain rational multivectors).
class Multivector {
 public:
  Multivector() = default;
  Multivector(int n, int d, int k = 0);

  static Multivector basis(const IndexSet& s, int k = 0);
  static Multivector from_rational(int n, int d, const RatVector& coords);
  /// Degree-1 multivector with polynomial entries.
  static Multivector from_vector(const std::vector<ParamPoly>& v);
  static Multivector from_vector(const RatVector& v);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return coords_.size(); }

  const ParamPoly& operator[](std::size_t rank) const { return coords_[rank]; }
  ParamPoly& operator[](std::size_t rank) { return coords_[rank]; }
  const ParamPoly& at(const IndexSet& s) const { return coords_[s.rank()]; }
  ParamPoly& at(const IndexSet& s) { return coords_[s.rank()]; }
  const std::vector<ParamPoly>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// True when no coordinate depends on a parameter.
  bool is_constant() const;
  /// Constant coordinates; throws DomainError if a parameter occurs.
  RatVector to_rational() const;

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Rational& c) const;
  Multivector operator*(const ParamPoly& c) const;
  bool operator==(const Multivector& o) const = default;

  Multivector substitute(const std::vector<std::optional<ParamPoly>>& values) const;
  Multivector remap(int new_k, const std::vector<int>& mapping) const;

 private:
  int n_ = 0;
  int d_ = 0;
  int k_ = 0;
  std::vector<ParamPoly> coords_;
};

/// (a ∧ b)_M = Σ_{M = I ⊔ J} sgn(I, J) a_I b_J.
Multivector wedge(const Multivector& a, const Multivector& b);

/// w_1 ∧ ... ∧ w_d for vectors of length n.
Multivector wedge_all(const std::vector<RatVector>& vectors, int n);
Multivector wedge_all(const std::vector<std::vector<ParamPoly>>& vectors, int n, int k);

/// d-th compound matrix: entry (R, C) is the minor of m on rows R, columns C,
/// both ranked lexicographically. Rows are distributed over OpenMP threads.
RatMatrix exterior_power(const RatMatrix& m, int d);
/// Single-threaded reference for exterior_power.
RatMatrix exterior_power_serial(const RatMatrix& m, int d);

/// Hodge-type dual with respect to e_1 ∧ ... ∧ e_n:
/// y_J = sgn(J', J) x_{J'} for |J| = n - d. Stored as a multivector of
/// degree n - d whose basis is read as ω_J.
struct DualMultivector {
  Multivector form;
};

DualMultivector dual(const Multivector& v);

/// Compound (C(n,d) × C(n,d)) times multivector.
Multivector apply_compound(const RatMatrix& compound, const Multivector& v);

/// Matrix of the linear map u ↦ u ∧ v, size C(n, d+1) × n.
RatMatrix wedge_map(const Multivector& v);

}  // namespace invsub

#endif  // INVSUB_EXTERIOR_HPP
