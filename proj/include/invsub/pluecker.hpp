#ifndef INVSUB_PLUECKER_HPP
#define INVSUB_PLUECKER_HPP

#include "invsub/exterior.hpp"
#include "invsub/index_set.hpp"
#include "invsub/param_poly.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace invsub {

/// Polynomial conditions on the parameters of a multivector family.
struct ConstraintSet {
  int k = 0;
  std::vector<ParamPoly> polys;
  /// (K, L) labels of the relations, parallel to `polys`; left empty once
  /// the set has been deduplicated.
  std::vector<std::pair<IndexSet, IndexSet>> labels;

  bool all_zero() const;
};

/// Plücker relation E_KL for one (K, L) pair, |K| = d+1, |L| = n-d+1:
///   Σ_{s ∈ K∩L} sgn(s, K∖s) sgn(s, L∖s) sgn((L∖s)', L∖s) x_{K∖s} x_{(L∖s)'}
ParamPoly pluecker_relation(const Multivector& v, const IndexSet& K, const IndexSet& L);

/// Every E_KL with K∩L non-empty, ordered by (rank K, rank L). The outer
/// loop over K runs under OpenMP; output order is independent of threads.
ConstraintSet pluecker_relations(const Multivector& v);
/// Single-threaded reference for pluecker_relations.
ConstraintSet pluecker_relations_serial(const Multivector& v);

/// True iff every Plücker relation vanishes on v. Requires constant
/// coordinates; throws DomainError for the zero multivector.
bool is_totally_decomposable(const Multivector& v);

/// Non-zero relations of a parametrized family, deduplicated up to sign.
/// An empty result means the whole family is decomposable.
ConstraintSet constrain_family(const Multivector& v);

struct SolverOptions {
  int max_params = 2;  // K_MAX: most parameters in a constraint that is split
  int max_cases = 64;
};

/// One branch of the parameter case analysis. Engaged entries of
/// `substitution` express an eliminated parameter through the free ones;
/// every constraint vanishes identically after substitution when `solved`.
/// Otherwise `residual` holds the polynomials left for manual follow-up.
struct ConstraintCase {
  std::vector<std::optional<ParamPoly>> substitution;
  bool solved = true;
  std::vector<ParamPoly> residual;

  std::vector<int> free_parameters() const;
  /// Whether every point of this case also belongs to `other`.
  bool contained_in(const ConstraintCase& other) const;
};

/// Raised when a constraint set involves more parameters than the solver
/// budget allows; carries the raw constraints.
class CapabilityError : public std::runtime_error {
 public:
  CapabilityError(const std::string& what, ConstraintSet constraints)
      : std::runtime_error(what), constraints_(std::move(constraints)) {}
  const ConstraintSet& constraints() const noexcept { return constraints_; }

 private:
  ConstraintSet constraints_;
};

/// Finite case decomposition of the common zero set of `c`.
///
/// Identically vanishing sets give a single all-free case. Otherwise the
/// solver repeatedly (a) eliminates a parameter that occurs linearly with a
/// constant coefficient, (b) splits on the rational factors of a constraint
/// (monomial content, rational roots, products of two linear forms), and
/// (c) reports the branch as unsolved when neither applies. Branches whose
/// constraints reduce to a non-zero constant are dropped, as are univariate
/// quadratics without real roots.
///
/// Step (a) and c·t^m = 0 ⇒ t = 0 need no case split and are applied
/// first. Only constraints in at most `max_params` parameters are split;
/// CapabilityError is thrown when, after the forced steps, every remaining
/// constraint exceeds that budget.
std::vector<ConstraintCase> solve_constraints(const ConstraintSet& c, const SolverOptions& options = {});

/// Splits p into non-constant factors over the rationals as far as the
/// solver understands (see solve_constraints). Repeated factors appear once.
std::vector<ParamPoly> rational_factors(const ParamPoly& p);

}  // namespace invsub

#endif  // INVSUB_PLUECKER_HPP
