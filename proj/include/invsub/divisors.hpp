#ifndef INVSUB_DIVISORS_HPP
#define INVSUB_DIVISORS_HPP

#include "invsub/errors.hpp"
#include "invsub/exterior.hpp"
#include "invsub/pluecker.hpp"

#include <optional>
#include <vector>

namespace invsub {

/// Vectors u_1..u_d with u_1 ∧ ... ∧ u_d = scale · Λ.
struct DivisorBasis {
  std::vector<RatVector> vectors;  // reduced row-echelon, integer, content 1
  Rational scale;
};

/// Kernel of u ↦ u ∧ v had the wrong dimension: v is not decomposable.
class NotDecomposableError : public DomainError {
 public:
  NotDecomposableError(int degree, std::size_t kernel_dimension);
  std::size_t kernel_dimension() const noexcept { return kernel_dim_; }

 private:
  std::size_t kernel_dim_;
};

/// Solves u ∧ v = 0 for a constant, non-zero, decomposable v. The kernel
/// of the C(n,d+1) × n wedge map must have dimension exactly d.
DivisorBasis divisor_space(const Multivector& v);

/// Divisors of one parameter case of a decomposable family.
struct FamilyDivisors {
  /// Parameters fixed while choosing a pivot (beyond the caller's case).
  std::vector<std::optional<ParamPoly>> substitution;
  /// Polynomials assumed non-zero on this case (non-constant pivots).
  std::vector<ParamPoly> nonvanishing;
  /// d vectors of length n with polynomial entries.
  std::vector<std::vector<ParamPoly>> generators;
  bool solved = true;
  /// Multivector left when the split budget ran out.
  std::optional<Multivector> partial;
};

/// Divisors of a family whose Plücker relations vanish identically. The
/// pivot is the lexicographically first coordinate x_I that is a non-zero
/// constant; generator a ∈ I is x_I e_a + Σ_{j∉I} ± x_{(I∖a)∪j} e_j, scaled
/// so the I-block is the identity. Without a constant pivot the first
/// non-zero coordinate p splits the family into p ≠ 0 and p = 0, the latter
/// solved with solve_constraints, up to options.max_params nested splits.
/// For k = 0 this is divisor_space.
std::vector<FamilyDivisors> divisor_space_family(const Multivector& v, const SolverOptions& options = {});

/// Generators read off the Plücker coordinates of v using pivot I, without
/// normalization: u_a = x_I e_a + Σ_{j∉I} ± x_{(I∖a)∪j} e_j. Their wedge is
/// x_I^(d-1) · v whenever v is decomposable.
std::vector<std::vector<ParamPoly>> pivot_generators(const Multivector& v, const IndexSet& pivot);

/// Same subspace test for two divisor bases.
bool same_subspace(const DivisorBasis& a, const DivisorBasis& b);

}  // namespace invsub

#endif  // INVSUB_DIVISORS_HPP
