#ifndef INVSUB_INVARIANT_SEARCH_HPP
#define INVSUB_INVARIANT_SEARCH_HPP

#include "invsub/divisors.hpp"
#include "invsub/linalg.hpp"
#include "invsub/matrix.hpp"
#include "invsub/pluecker.hpp"

#include <map>
#include <optional>
#include <vector>

namespace invsub {

/// N square matrices of equal size plus the common shift s (Ā = A + sI).
struct MatrixSet {
  std::vector<RatMatrix> matrices;
  Rational shift;

  int n() const;
  std::vector<RatMatrix> shifted() const;
  /// Throws DimensionError unless the set is non-empty and uniformly square.
  void validate() const;
};

/// Smallest non-negative integer s with det(A + sI) ≠ 0 for every A.
Rational choose_shift(const std::vector<RatMatrix>& matrices);

using EigenTuple = std::vector<Rational>;

struct EigenSpace {
  EigenTuple eigen;
  Kernel space;
};

/// Common eigenspaces of `matrices` (used as given, no shift applied): for
/// every tuple of eigenvalues, the kernel of the stacked A_i - λ_i I.
/// Tuples with a trivial kernel are dropped; the result is sorted by tuple.
/// Throws UnsupportedSpectrumError if some spectrum is not fully rational.
std::vector<EigenSpace> algorithm_a(const std::vector<RatMatrix>& matrices);
/// Same with candidate eigenvalues supplied per matrix.
std::vector<EigenSpace> algorithm_a(const std::vector<RatMatrix>& matrices, const std::vector<std::vector<Rational>>& spectra);
/// Runs on the shifted matrices of `ms`.
std::vector<EigenSpace> algorithm_a(const MatrixSet& ms);

/// One chart family of d-dimensional common invariant subspaces.
///
/// The eigenspace basis w_1..w_m (in ⋀^d coordinates) yields chart c with
/// multivector w_c + Σ_{j<c} t_j w_j. `substitution` records parameters
/// eliminated by the Plücker constraints, and `generators` span the
/// subspace for every value of the remaining free parameters. Unsolved
/// families carry the leftover constraints in `residual` and no generators.
struct InvariantFamily {
  int dimension = 0;
  EigenTuple eigen;
  std::vector<RatVector> eigenbasis;
  std::vector<std::size_t> pivots;  // free column of each eigenbasis vector
  int chart = 0;
  std::vector<std::optional<ParamPoly>> substitution;
  std::vector<std::vector<ParamPoly>> generators;
  std::vector<ParamPoly> residual;
  bool solved = true;

  int parameter_count() const { return chart; }
  std::vector<int> free_parameters() const;
  /// w_chart + Σ t_j w_j after substitution.
  Multivector multivector(int n) const;
};

struct SearchOptions {
  SolverOptions solver;
};

/// d-dimensional families for 1 < d < n.
std::vector<InvariantFamily> algorithm_b(const MatrixSet& ms, int d, const SearchOptions& options = {});

/// Families of one dimension, 0 ≤ d ≤ n.
std::vector<InvariantFamily> families_of_dimension(const MatrixSet& ms, int d, const SearchOptions& options = {});

/// Whether every matrix (unshifted) maps span(basis) into itself; the basis
/// must be independent.
bool verify_invariant(const std::vector<RatVector>& basis, const MatrixSet& ms);
/// Parametric version: invariance must hold identically in the k parameters.
bool verify_invariant(const std::vector<std::vector<ParamPoly>>& generators, int k, const MatrixSet& ms);

struct LatticeScan {
  std::map<int, std::vector<InvariantFamily>> by_dimension;
  /// False when some family was left unsolved.
  bool complete = true;
};

LatticeScan full_lattice_scan(const MatrixSet& ms, const SearchOptions& options = {});

/// Whether the subspace spanned by `basis` is a member of the family
/// (some admissible parameter value produces it).
bool family_contains(const InvariantFamily& family, const std::vector<RatVector>& basis);

}  // namespace invsub

#endif  // INVSUB_INVARIANT_SEARCH_HPP
