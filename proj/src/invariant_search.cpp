#include "invsub/invariant_search.hpp"

#include "invsub/errors.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace invsub {

int MatrixSet::n() const { return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows()); }

std::vector<RatMatrix> MatrixSet::shifted() const {
  std::vector<RatMatrix> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(m.shifted(shift));
  return out;
}

void MatrixSet::validate() const {
  if (matrices.empty()) throw DimensionError("matrix set is empty");
  const std::size_t n = matrices.front().rows();
  if (n == 0) throw DimensionError("matrices must be at least 1x1");
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].rows() != n || matrices[i].cols() != n)
      throw DimensionError("matrix " + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
  }
}

Rational choose_shift(const std::vector<RatMatrix>& matrices) {
  MatrixSet{matrices, 0}.validate();
  for (long s = 0;; ++s) {
    const bool ok = std::all_of(matrices.begin(), matrices.end(),
                                [&](const RatMatrix& m) { return determinant(m.shifted(Rational(s))) != 0; });
    if (ok) return Rational(s);
  }
}

// Algorithm A

namespace {

void eigen_tuples(const std::vector<RatMatrix>& mats, const std::vector<std::vector<Rational>>& spectra, std::vector<RatMatrix>& prefix,
                  EigenTuple& tuple, std::vector<EigenSpace>& out) {
  const std::size_t i = tuple.size();
  if (i == mats.size()) {
    auto ker = kernel(RatMatrix::vstack(prefix));
    if (!ker.basis.empty()) out.push_back({tuple, std::move(ker)});
    return;
  }
  for (const auto& lambda : spectra[i]) {
    prefix.push_back(mats[i].shifted(-lambda));
    // Prune tuples whose prefix already has a trivial common kernel.
    if (i + 1 == mats.size() || rank(RatMatrix::vstack(prefix)) < mats[i].cols()) {
      tuple.push_back(lambda);
      eigen_tuples(mats, spectra, prefix, tuple, out);
      tuple.pop_back();
    }
    prefix.pop_back();
  }
}

std::vector<Rational> checked_spectrum(const RatMatrix& m, std::size_t index) {
  auto spec = rational_eigenvalues(m);
  if (!spec.complete()) throw UnsupportedSpectrumError(index, spec.residual.to_string());
  return spec.values;
}

}  // namespace

std::vector<EigenSpace> algorithm_a(const std::vector<RatMatrix>& matrices, const std::vector<std::vector<Rational>>& spectra) {
  if (spectra.size() != matrices.size()) throw DimensionError("one spectrum per matrix is required");
  std::vector<std::vector<Rational>> sorted = spectra;
  for (auto& s : sorted) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::vector<EigenSpace> out;
  std::vector<RatMatrix> prefix;
  EigenTuple tuple;
  eigen_tuples(matrices, sorted, prefix, tuple, out);
  return out;
}

std::vector<EigenSpace> algorithm_a(const std::vector<RatMatrix>& matrices) {
  MatrixSet{matrices, 0}.validate();
  std::vector<std::vector<Rational>> spectra;
  for (std::size_t i = 0; i < matrices.size(); ++i) spectra.push_back(checked_spectrum(matrices[i], i));
  return algorithm_a(matrices, spectra);
}

std::vector<EigenSpace> algorithm_a(const MatrixSet& ms) { return algorithm_a(ms.shifted()); }

// Families

std::vector<int> InvariantFamily::free_parameters() const {
  std::vector<int> out;
  for (int j = 0; j < chart; ++j)
    if (!substitution[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

Multivector InvariantFamily::multivector(int n) const {
  if (dimension == 0 || eigenbasis.empty()) return Multivector(n, dimension, chart);
  Multivector v(n, dimension, chart);
  const auto& w = eigenbasis[static_cast<std::size_t>(chart)];
  for (std::size_t r = 0; r < w.size(); ++r) v[r] = ParamPoly(chart, w[r]);
  for (int j = 0; j < chart; ++j) {
    const ParamPoly t = ParamPoly::variable(chart, j);
    const auto& wj = eigenbasis[static_cast<std::size_t>(j)];
    for (std::size_t r = 0; r < wj.size(); ++r)
      if (wj[r] != 0) v[r] += t * wj[r];
  }
  return v.substitute(substitution);
}

namespace {

// Eigenvalues of ⋀^d A from those of A (with multiplicity): products over
// d-element sub-multisets.
std::vector<Rational> compound_spectrum(const RationalSpectrum& spec, int d) {
  std::set<Rational> out;
  std::vector<std::pair<Rational, int>> vals(spec.multiplicity.begin(), spec.multiplicity.end());
  auto rec = [&](auto&& self, std::size_t i, int left, Rational prod) -> void {
    if (left == 0) {
      out.insert(prod);
      return;
    }
    if (i == vals.size()) return;
    Rational p = prod;
    for (int c = 0; c <= std::min(left, vals[i].second); ++c) {
      self(self, i + 1, left - c, p);
      p *= vals[i].first;
    }
  };
  rec(rec, 0, d, Rational(1));
  return {out.begin(), out.end()};
}

std::vector<std::vector<ParamPoly>> constant_generators(const std::vector<RatVector>& basis) {
  std::vector<std::vector<ParamPoly>> out;
  for (const auto& v : basis) {
    std::vector<ParamPoly> g;
    for (const auto& x : v) g.emplace_back(0, x);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<InvariantFamily> chart_families(const MatrixSet& ms, int d, const EigenSpace& es, const SearchOptions& options) {
  const int n = ms.n();
  std::vector<InvariantFamily> out;
  const int m = static_cast<int>(es.space.basis.size());
  for (int c = 0; c < m; ++c) {
    InvariantFamily base;
    base.dimension = d;
    base.eigen = es.eigen;
    base.eigenbasis = es.space.basis;
    base.pivots = es.space.free_columns;
    base.chart = c;
    base.substitution.assign(static_cast<std::size_t>(c), std::nullopt);
    const Multivector lambda = base.multivector(n);

    std::vector<ConstraintCase> cases;
    if (d >= 2 && d <= n - 2) {
      const ConstraintSet cs = constrain_family(lambda);
      try {
        cases = solve_constraints(cs, options.solver);
      } catch (const CapabilityError& e) {
        ConstraintCase unsolved;
        unsolved.substitution = base.substitution;
        unsolved.solved = false;
        unsolved.residual = e.constraints().polys;
        cases.push_back(std::move(unsolved));
      }
    } else {
      cases.push_back(ConstraintCase{base.substitution, true, {}});
    }

    for (const auto& cc : cases) {
      InvariantFamily f = base;
      f.substitution = cc.substitution;
      if (!cc.solved) {
        f.solved = false;
        f.residual = cc.residual;
        out.push_back(std::move(f));
        continue;
      }
      const Multivector v = f.multivector(n);
      // The chart pivot is a non-zero constant, so no pivot split happens.
      auto div = divisor_space_family(v, options.solver);
      if (div.size() != 1 || !div.front().solved || !div.front().nonvanishing.empty())
        throw std::logic_error("chart family without a constant pivot");
      f.generators = std::move(div.front().generators);
      if (c == 0) f.generators = constant_generators(canonical_basis(divisor_space(v).vectors, static_cast<std::size_t>(n)));
      if (!verify_invariant(f.generators, c, ms)) throw std::logic_error("emitted family failed the invariance check");
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

std::vector<InvariantFamily> families_of_dimension(const MatrixSet& ms, int d, const SearchOptions& options) {
  ms.validate();
  const int n = ms.n();
  if (d < 0 || d > n) throw DimensionError("dimension " + std::to_string(d) + " outside 0.." + std::to_string(n));
  const auto shifted = ms.shifted();
  std::vector<RationalSpectrum> spectra;
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (determinant(shifted[i]) == 0)
      throw DomainError("shift " + to_string(ms.shift) + " leaves matrix " + std::to_string(i + 1) + " singular");
    spectra.push_back(rational_eigenvalues(shifted[i]));
    if (!spectra.back().complete()) throw UnsupportedSpectrumError(i, spectra.back().residual.to_string());
  }

  if (d == 0) {
    InvariantFamily f;
    return {f};
  }
  if (d == n) {
    InvariantFamily f;
    f.dimension = n;
    for (const auto& a : shifted) f.eigen.push_back(determinant(a));
    f.eigenbasis = {RatVector{Rational(1)}};
    f.pivots = {0};
    std::vector<RatVector> id;
    for (int i = 0; i < n; ++i) {
      RatVector e(static_cast<std::size_t>(n));
      e[static_cast<std::size_t>(i)] = 1;
      id.push_back(std::move(e));
    }
    f.generators = constant_generators(id);
    return {f};
  }

  std::vector<RatMatrix> compounds;
  std::vector<std::vector<Rational>> candidate;
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    compounds.push_back(d == 1 ? shifted[i] : exterior_power(shifted[i], d));
    candidate.push_back(compound_spectrum(spectra[i], d));
  }
  const auto spaces = algorithm_a(compounds, candidate);

  std::vector<std::vector<InvariantFamily>> per_space(spaces.size());
  std::vector<std::exception_ptr> errors(spaces.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    try {
      per_space[i] = chart_families(ms, d, spaces[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<InvariantFamily> out;
  for (auto& fs : per_space)
    for (auto& f : fs) out.push_back(std::move(f));
  return out;
}

std::vector<InvariantFamily> algorithm_b(const MatrixSet& ms, int d, const SearchOptions& options) {
  ms.validate();
  if (d <= 1 || d >= ms.n()) throw DimensionError("algorithm B needs 1 < d < n");
  return families_of_dimension(ms, d, options);
}

// Verification

bool verify_invariant(const std::vector<RatVector>& basis, const MatrixSet& ms) {
  if (basis.empty()) return true;
  const std::size_t r = rank(RatMatrix::from_rows(basis));
  for (const auto& a : ms.matrices) {
    std::vector<RatVector> rows = basis;
    for (const auto& w : basis) rows.push_back(a * w);
    if (rank(RatMatrix::from_rows(rows)) != r) return false;
  }
  return true;
}

bool verify_invariant(const std::vector<std::vector<ParamPoly>>& generators, int k, const MatrixSet& ms) {
  if (generators.empty()) return true;
  const int n = static_cast<int>(generators.front().size());
  const Multivector w = wedge_all(generators, n, k);
  if (w.is_zero()) return false;
  if (static_cast<int>(generators.size()) == n) return true;
  for (const auto& a : ms.matrices) {
    for (const auto& g : generators) {
      std::vector<ParamPoly> ag(static_cast<std::size_t>(n), ParamPoly(k));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Rational& x = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          if (x != 0) ag[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(j)] * x;
        }
      if (!wedge(Multivector::from_vector(ag), w).is_zero()) return false;
    }
  }
  return true;
}

LatticeScan full_lattice_scan(const MatrixSet& ms, const SearchOptions& options) {
  ms.validate();
  LatticeScan scan;
  for (int d = 0; d <= ms.n(); ++d) {
    auto fs = families_of_dimension(ms, d, options);
    for (const auto& f : fs)
      if (!f.solved) scan.complete = false;
    scan.by_dimension[d] = std::move(fs);
  }
  return scan;
}

bool family_contains(const InvariantFamily& family, const std::vector<RatVector>& basis) {
  if (static_cast<int>(basis.size()) != family.dimension) return false;
  if (basis.empty()) return true;
  const int n = static_cast<int>(basis.front().size());
  if (rank(RatMatrix::from_rows(basis)) != basis.size()) return false;
  if (family.dimension == n) return true;

  const RatVector p = wedge_all(basis, n).to_rational();
  const auto& w = family.eigenbasis;
  std::vector<Rational> coef(w.size());
  RatVector combo(p.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    coef[j] = p[family.pivots[j]] / w[j][family.pivots[j]];
    for (std::size_t r = 0; r < p.size(); ++r) combo[r] += coef[j] * w[j][r];
  }
  if (combo != p) return false;
  int last = -1;
  for (std::size_t j = 0; j < coef.size(); ++j)
    if (coef[j] != 0) last = static_cast<int>(j);
  if (last != family.chart) return false;

  std::vector<Rational> t;
  for (int j = 0; j < family.chart; ++j) t.push_back(coef[static_cast<std::size_t>(j)] / coef[static_cast<std::size_t>(last)]);
  for (std::size_t j = 0; j < family.substitution.size(); ++j)
    if (family.substitution[j] && family.substitution[j]->evaluate(t) != t[j]) return false;
  for (const auto& q : family.residual)
    if (q.evaluate(t) != 0) return false;
  return true;
}

}  // namespace invsub
