#include "invsub/divisors.hpp"

#include "invsub/errors.hpp"
#include "invsub/linalg.hpp"

namespace invsub {

NotDecomposableError::NotDecomposableError(int degree, std::size_t kernel_dimension)
    : DomainError("multivector of degree " + std::to_string(degree) + " is not totally decomposable: divisor space has dimension " +
                  std::to_string(kernel_dimension)),
      kernel_dim_(kernel_dimension) {}

namespace {

Rational proportionality(const Multivector& w, const Multivector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Rational c = w[i].constant() / v[i].constant();
    if (w != v * c) break;
    return c;
  }
  throw std::logic_error("divisor wedge is not proportional to the input");
}

}  // namespace

DivisorBasis divisor_space(const Multivector& v) {
  if (!v.is_constant()) throw DomainError("divisor_space needs constant coordinates");
  if (v.is_zero()) throw DomainError("divisors of the zero multivector are undefined");
  const int n = v.n();
  const int d = v.degree();
  std::vector<RatVector> kernel;
  if (d == n) {
    for (int i = 0; i < n; ++i) {
      RatVector e(static_cast<std::size_t>(n));
      e[static_cast<std::size_t>(i)] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = null_space(wedge_map(v));
  }
  if (static_cast<int>(kernel.size()) != d) throw NotDecomposableError(d, kernel.size());
  DivisorBasis out;
  out.vectors = canonical_basis(kernel, static_cast<std::size_t>(n));
  const Multivector w = wedge_all(out.vectors, n);
  out.scale = proportionality(w, v.remap(0, std::vector<int>{}));
  return out;
}

std::vector<std::vector<ParamPoly>> pivot_generators(const Multivector& v, const IndexSet& I) {
  const int n = v.n();
  const int k = v.k();
  const ParamPoly& xI = v.at(I);
  std::vector<std::vector<ParamPoly>> gens;
  gens.reserve(static_cast<std::size_t>(I.size()));
  for (int r = 0; r < I.size(); ++r) {
    const int a = I.elems()[static_cast<std::size_t>(r)];
    std::vector<ParamPoly> u(static_cast<std::size_t>(n), ParamPoly(k));
    u[static_cast<std::size_t>(a - 1)] = xI;
    const IndexSet rest = I.without(a);
    for (int j = 1; j <= n; ++j) {
      if (I.contains(j)) continue;
      const IndexSet J = rest.with(j);
      const ParamPoly& x = v.at(J);
      if (x.is_zero()) continue;
      const int c = J.position(j);
      u[static_cast<std::size_t>(j - 1)] = ((r + c) % 2 == 0) ? x : -x;
    }
    gens.push_back(std::move(u));
  }
  return gens;
}

namespace {

void family_cases(const Multivector& v, std::vector<std::optional<ParamPoly>> subst, std::vector<ParamPoly> nonvanishing,
                  int depth, const SolverOptions& options, std::vector<FamilyDivisors>& out) {
  if (v.is_zero()) return;
  const int n = v.n();
  const int d = v.degree();

  for (std::size_t r = 0; r < v.size(); ++r) {
    const ParamPoly& x = v[r];
    if (x.is_zero() || !x.is_constant()) continue;
    FamilyDivisors fd;
    fd.substitution = subst;
    fd.nonvanishing = nonvanishing;
    fd.generators = pivot_generators(v, IndexSet::unrank(n, d, r));
    const Rational inv = Rational(1) / x.constant();
    for (auto& g : fd.generators)
      for (auto& e : g) e = e * inv;
    out.push_back(std::move(fd));
    return;
  }

  std::size_t r = 0;
  while (v[r].is_zero()) ++r;
  const ParamPoly p = v[r];

  // p ≠ 0: the pivot may be used as is.
  FamilyDivisors generic;
  generic.substitution = subst;
  generic.nonvanishing = nonvanishing;
  generic.nonvanishing.push_back(p);
  generic.generators = pivot_generators(v, IndexSet::unrank(n, d, r));
  out.push_back(std::move(generic));

  // p = 0.
  auto unsolved = [&](const Multivector& rest) {
    FamilyDivisors fd;
    fd.substitution = subst;
    fd.nonvanishing = nonvanishing;
    fd.solved = false;
    fd.partial = rest;
    out.push_back(std::move(fd));
  };
  if (depth >= options.max_params) {
    unsolved(v);
    return;
  }
  std::vector<ConstraintCase> cases;
  try {
    cases = solve_constraints(ConstraintSet{v.k(), {p}, {}}, options);
  } catch (const CapabilityError&) {
    unsolved(v);
    return;
  }
  for (const auto& c : cases) {
    if (!c.solved) {
      unsolved(v.substitute(c.substitution));
      continue;
    }
    auto composed = subst;
    for (std::size_t i = 0; i < composed.size(); ++i) {
      if (composed[i]) composed[i] = composed[i]->substitute(c.substitution);
      if (c.substitution[i]) composed[i] = c.substitution[i];
    }
    std::vector<ParamPoly> nv;
    for (const auto& q : nonvanishing) nv.push_back(q.substitute(c.substitution));
    family_cases(v.substitute(c.substitution), composed, nv, depth + 1, options, out);
  }
}

}  // namespace

std::vector<FamilyDivisors> divisor_space_family(const Multivector& v, const SolverOptions& options) {
  if (v.is_zero()) throw DomainError("divisors of the zero multivector are undefined");
  std::vector<FamilyDivisors> out;
  if (v.k() == 0) {
    const auto basis = divisor_space(v);
    FamilyDivisors fd;
    for (const auto& vec : basis.vectors) {
      std::vector<ParamPoly> g;
      for (const auto& x : vec) g.emplace_back(0, x);
      fd.generators.push_back(std::move(g));
    }
    out.push_back(std::move(fd));
    return out;
  }
  family_cases(v, std::vector<std::optional<ParamPoly>>(static_cast<std::size_t>(v.k())), {}, 0, options, out);
  return out;
}

bool same_subspace(const DivisorBasis& a, const DivisorBasis& b) {
  if (a.vectors.empty() || b.vectors.empty()) return a.vectors.empty() && b.vectors.empty();
  return same_span(a.vectors, b.vectors, a.vectors.front().size());
}

}  // namespace invsub
