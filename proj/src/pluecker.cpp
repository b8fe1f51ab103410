#include "invsub/pluecker.hpp"

#include "invsub/errors.hpp"
#include "invsub/linalg.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace invsub {

bool ConstraintSet::all_zero() const {
  return std::all_of(polys.begin(), polys.end(), [](const ParamPoly& p) { return p.is_zero(); });
}

// ---------------------------------------------------------------------------
// Relations

ParamPoly pluecker_relation(const Multivector& v, const IndexSet& K, const IndexSet& L) {
  ParamPoly e(v.k());
  for (int s : K.elems()) {
    if (!L.contains(s)) continue;
    const IndexSet Ks = K.without(s);
    const ParamPoly& xk = v.at(Ks);
    if (xk.is_zero()) continue;
    const IndexSet Ls = L.without(s);
    const IndexSet Lc = Ls.complement();
    const ParamPoly& xl = v.at(Lc);
    if (xl.is_zero()) continue;
    const int sign = sign_insert(s, Ks) * sign_insert(s, Ls) * sign_shuffle(Lc, Ls);
    e.add_product(xk, xl, sign);
  }
  return e;
}

namespace {

bool intersects(const IndexSet& a, const IndexSet& b) {
  for (int x : a.elems())
    if (b.contains(x)) return true;
  return false;
}

struct RelationRow {
  std::vector<ParamPoly> polys;
  std::vector<std::pair<IndexSet, IndexSet>> labels;
};

RelationRow relations_for(const Multivector& v, const IndexSet& K, const std::vector<IndexSet>& Ls) {
  RelationRow row;
  for (const auto& L : Ls) {
    if (!intersects(K, L)) continue;
    row.polys.push_back(pluecker_relation(v, K, L));
    row.labels.emplace_back(K, L);
  }
  return row;
}

void check_degree(const Multivector& v) {
  if (v.degree() < 1 || v.degree() > v.n()) throw DomainError("Plücker relations need 1 <= d <= n");
}

}  // namespace

ConstraintSet pluecker_relations_serial(const Multivector& v) {
  check_degree(v);
  const int n = v.n();
  const int d = v.degree();
  ConstraintSet out{v.k(), {}, {}};
  if (d + 1 > n) return out;
  const auto Ks = IndexSet::all(n, d + 1);
  const auto Ls = IndexSet::all(n, n - d + 1);
  for (const auto& K : Ks) {
    auto row = relations_for(v, K, Ls);
    std::move(row.polys.begin(), row.polys.end(), std::back_inserter(out.polys));
    std::move(row.labels.begin(), row.labels.end(), std::back_inserter(out.labels));
  }
  return out;
}

ConstraintSet pluecker_relations(const Multivector& v) {
  check_degree(v);
  const int n = v.n();
  const int d = v.degree();
  ConstraintSet out{v.k(), {}, {}};
  if (d + 1 > n) return out;
  const auto Ks = IndexSet::all(n, d + 1);
  const auto Ls = IndexSet::all(n, n - d + 1);
  std::vector<RelationRow> rows(Ks.size());
  const auto count = static_cast<long>(Ks.size());
#pragma omp parallel for schedule(dynamic, 2)
  for (long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = relations_for(v, Ks[static_cast<std::size_t>(i)], Ls);
  for (auto& row : rows) {
    std::move(row.polys.begin(), row.polys.end(), std::back_inserter(out.polys));
    std::move(row.labels.begin(), row.labels.end(), std::back_inserter(out.labels));
  }
  return out;
}

bool is_totally_decomposable(const Multivector& v) {
  check_degree(v);
  if (!v.is_constant()) throw DomainError("is_totally_decomposable needs constant coordinates");
  if (v.is_zero()) throw DomainError("decomposability of the zero multivector is undefined");
  const int n = v.n();
  const int d = v.degree();
  if (d == 1 || d >= n - 1) return true;
  const auto Ls = IndexSet::all(n, n - d + 1);
  for (const auto& K : IndexSet::all(n, d + 1)) {
    for (const auto& L : Ls) {
      if (!intersects(K, L)) continue;
      if (!pluecker_relation(v, K, L).is_zero()) return false;
    }
  }
  return true;
}

ConstraintSet constrain_family(const Multivector& v) {
  const ConstraintSet raw = pluecker_relations(v);
  ConstraintSet out{v.k(), {}, {}};
  std::set<ParamPoly> seen;
  for (const auto& p : raw.polys) {
    if (p.is_zero()) continue;
    ParamPoly q = p.sign_normalized();
    if (seen.insert(q).second) out.polys.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factoring

namespace {

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer a;
  Integer b;
  mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
  out = Rational(a, b);
  out.canonicalize();
  return true;
}

Monomial unit_monomial(int k, int var, int power = 1) {
  Monomial m(static_cast<std::size_t>(k), 0);
  if (var >= 0) m[static_cast<std::size_t>(var)] = power;
  return m;
}

Rational coeff(const ParamPoly& p, const Monomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? Rational(0) : it->second;
}

// Linear S with S^2 == delta, if one exists over the rationals.
std::optional<ParamPoly> linear_square_root(const ParamPoly& delta) {
  const int k = delta.k();
  if (delta.is_zero()) return ParamPoly(k);
  if (delta.total_degree() > 2) return std::nullopt;
  std::map<Monomial, Rational> s;
  int anchor = -1;
  Rational s_anchor;
  for (int j = 0; j < k; ++j) {
    const Rational sq = coeff(delta, unit_monomial(k, j, 2));
    if (!is_zero(sq)) {
      if (!rational_sqrt(sq, s_anchor)) return std::nullopt;
      anchor = j;
      break;
    }
  }
  if (anchor < 0) {
    if (!delta.is_constant()) return std::nullopt;
    Rational r;
    if (!rational_sqrt(delta.constant(), r)) return std::nullopt;
    return ParamPoly(k, r);
  }
  s[unit_monomial(k, anchor)] = s_anchor;
  for (int i = 0; i < k; ++i) {
    if (i == anchor) continue;
    Monomial m = unit_monomial(k, i);
    m[static_cast<std::size_t>(anchor)] += 1;
    s[unit_monomial(k, i)] = coeff(delta, m) / (2 * s_anchor);
  }
  s[unit_monomial(k, -1)] = coeff(delta, unit_monomial(k, anchor)) / (2 * s_anchor);
  ParamPoly root = ParamPoly::from_terms(k, s);
  if (root * root != delta) return std::nullopt;
  return root;
}

// Factors a total-degree-2 polynomial into two linear forms when possible.
std::optional<std::pair<ParamPoly, ParamPoly>> split_quadratic(const ParamPoly& q) {
  const int k = q.k();
  for (int v = 0; v < k; ++v) {
    if (q.degree_in(v) != 2) continue;
    const Rational a = q.coefficient_of(v, 2).constant();
    const ParamPoly B = q.coefficient_of(v, 1);
    const ParamPoly C = q.coefficient_of(v, 0);
    const ParamPoly delta = B * B - C * (4 * a);
    const auto S = linear_square_root(delta);
    if (!S) return std::nullopt;
    const ParamPoly lead = ParamPoly::variable(k, v) * (2 * a);
    return std::make_pair(lead + B - *S, lead + B + *S);
  }
  // Only mixed terms: q = L·v + R with L linear.
  for (int v = 0; v < k; ++v) {
    if (q.degree_in(v) != 1) continue;
    const ParamPoly L = q.coefficient_of(v, 1);
    if (L.is_constant()) return std::nullopt;
    const ParamPoly R = q.coefficient_of(v, 0);
    const auto g = R.exact_divide(L);
    if (!g) return std::nullopt;
    return std::make_pair(L, ParamPoly::variable(k, v) + *g);
  }
  return std::nullopt;
}

ParamPoly to_param(const UniPoly& u, int k, int var) {
  ParamPoly p(k);
  const ParamPoly t = ParamPoly::variable(k, var);
  ParamPoly pw(k, Rational(1));
  for (const auto& c : u.coefficients()) {
    p += pw * c;
    pw = pw * t;
  }
  return p;
}

UniPoly to_uni(const ParamPoly& p, int var) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(var)) + 1);
  for (const auto& [m, x] : p.terms()) c[static_cast<std::size_t>(m[static_cast<std::size_t>(var)])] += x;
  return UniPoly(std::move(c));
}

void factor_into(const ParamPoly& p, std::vector<ParamPoly>& out) {
  if (p.is_constant()) return;
  const int k = p.k();
  // Monomial content.
  Monomial content(static_cast<std::size_t>(k), 0);
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < k; ++i) content[i] = first ? m[i] : std::min(content[i], m[i]);
    first = false;
  }
  ParamPoly rest = p;
  for (int i = 0; i < k; ++i) {
    if (content[i] == 0) continue;
    out.push_back(ParamPoly::variable(k, i));
    ParamPoly divisor(k);
    divisor += ParamPoly::from_terms(k, {{unit_monomial(k, i, content[i]), Rational(1)}});
    rest = *rest.exact_divide(divisor);
  }
  if (rest.is_constant()) return;

  const auto vars = rest.variables();
  if (vars.size() == 1 && rest.total_degree() >= 2) {
    const auto spec = rational_roots(to_uni(rest, vars[0]));
    for (const auto& r : spec.values)
      out.push_back(ParamPoly::variable(k, vars[0]) - ParamPoly(k, r));
    if (spec.residual.degree() > 0) out.push_back(to_param(spec.residual, k, vars[0]));
    return;
  }
  if (rest.total_degree() == 2) {
    if (auto split = split_quadratic(rest)) {
      factor_into(split->first, out);
      factor_into(split->second, out);
      return;
    }
  }
  out.push_back(rest);
}

}  // namespace

std::vector<ParamPoly> rational_factors(const ParamPoly& p) {
  std::vector<ParamPoly> raw;
  factor_into(p, raw);
  std::vector<ParamPoly> out;
  std::set<ParamPoly> seen;
  for (auto& f : raw) {
    ParamPoly m = f.monic();
    if (seen.insert(m).second) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Case analysis

std::vector<int> ConstraintCase::free_parameters() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < substitution.size(); ++i)
    if (!substitution[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool ConstraintCase::contained_in(const ConstraintCase& other) const {
  if (!solved || !other.solved) return false;
  const int k = static_cast<int>(substitution.size());
  for (int v = 0; v < k; ++v) {
    const auto& rhs = other.substitution[static_cast<std::size_t>(v)];
    if (!rhs) continue;
    const ParamPoly eq = ParamPoly::variable(k, v) - *rhs;
    if (!eq.substitute(substitution).is_zero()) return false;
  }
  return true;
}

namespace {

// Variable occurring with degree 1 and a non-zero constant coefficient.
int linear_pivot(const ParamPoly& p) {
  for (int v = 0; v < p.k(); ++v) {
    if (p.degree_in(v) != 1) continue;
    if (p.coefficient_of(v, 1).is_constant()) return v;
  }
  return -1;
}

// Whether a univariate polynomial is known to have no real roots.
bool has_no_real_roots(const ParamPoly& p) {
  const auto vars = p.variables();
  if (vars.size() != 1) return false;
  const UniPoly u = to_uni(p, vars[0]);
  if (u.degree() != 2) return false;
  const Rational disc = u.coefficient(1) * u.coefficient(1) - 4 * u.coefficient(2) * u.coefficient(0);
  return sgn(disc) < 0;
}

bool poly_order(const ParamPoly& a, const ParamPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  return a < b;
}

class CaseSolver {
 public:
  CaseSolver(int k, const SolverOptions& options) : k_(k), options_(options) {}

  std::vector<ConstraintCase> run(const std::vector<std::optional<ParamPoly>>& subst, const std::vector<ParamPoly>& polys) {
    explore(subst, polys);
    return std::move(cases_);
  }

  // Applies deductions that need no case split, (a) and powers c·t^m = 0,
  // until none is left. Returns false if the constraints are inconsistent;
  // otherwise `polys` holds the reduced remainder.
  bool force(std::vector<std::optional<ParamPoly>>& subst, std::vector<ParamPoly>& polys) const {
    while (true) {
      std::vector<ParamPoly> R;
      if (!reduce(subst, polys, R)) return false;
      polys = std::move(R);
      bool progressed = false;
      for (const auto& p : polys) {
        if (const int v = power_variable(p); v >= 0) {
          subst = eliminate(std::move(subst), v, ParamPoly(k_));
        } else if (const int w = linear_pivot(p); w >= 0) {
          subst = eliminate(std::move(subst), w, solve_for(p, w));
        } else {
          continue;
        }
        progressed = true;
        break;
      }
      if (!progressed) return true;
    }
  }

 private:
  // Variable t when p = c·t^m, otherwise -1.
  static int power_variable(const ParamPoly& p) {
    if (p.term_count() != 1) return -1;
    const auto vars = p.variables();
    return vars.size() == 1 ? vars.front() : -1;
  }

  // Substitutes, drops zeros, deduplicates. Returns false on a non-zero
  // constant (empty branch).
  bool reduce(const std::vector<std::optional<ParamPoly>>& subst, const std::vector<ParamPoly>& polys,
              std::vector<ParamPoly>& out) const {
    std::set<ParamPoly> seen;
    for (const auto& p : polys) {
      ParamPoly q = p.substitute(subst);
      if (q.is_zero()) continue;
      if (q.is_constant()) return false;
      q = q.monic();
      if (seen.insert(q).second) out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(), poly_order);
    return true;
  }

  void emit_unsolved(const std::vector<std::optional<ParamPoly>>& subst, std::vector<ParamPoly> residual) {
    ConstraintCase c;
    c.substitution = subst;
    c.solved = false;
    c.residual = std::move(residual);
    cases_.push_back(std::move(c));
  }

  static std::vector<std::optional<ParamPoly>> eliminate(std::vector<std::optional<ParamPoly>> subst, int v,
                                                         const ParamPoly& value) {
    for (auto& e : subst)
      if (e) *e = e->substitute(v, value);
    subst[static_cast<std::size_t>(v)] = value;
    return subst;
  }

  static ParamPoly solve_for(const ParamPoly& p, int v) {
    const Rational c = p.coefficient_of(v, 1).constant();
    return p.coefficient_of(v, 0) * (Rational(-1) / c);
  }

  void explore(const std::vector<std::optional<ParamPoly>>& subst, const std::vector<ParamPoly>& polys) {
    std::vector<ParamPoly> R;
    if (!reduce(subst, polys, R)) return;
    if (R.empty()) {
      ConstraintCase c;
      c.substitution = subst;
      cases_.push_back(std::move(c));
      return;
    }
    if (++nodes_ > options_.max_cases) {
      emit_unsolved(subst, std::move(R));
      return;
    }
    for (const auto& p : R) {
      if (has_no_real_roots(p)) return;
    }
    // (a) linear elimination
    for (const auto& p : R) {
      const int v = linear_pivot(p);
      if (v >= 0) {
        explore(eliminate(subst, v, solve_for(p, v)), R);
        return;
      }
    }
    // (b) split on factors, only for constraints within the budget
    for (std::size_t i = 0; i < R.size(); ++i) {
      if (static_cast<int>(R[i].variables().size()) > options_.max_params) continue;
      const auto factors = rational_factors(R[i]);
      if (factors.size() == 1 && factors.front() == R[i]) continue;
      std::vector<ParamPoly> others;
      for (std::size_t j = 0; j < R.size(); ++j)
        if (j != i) others.push_back(R[j]);
      for (const auto& f : factors) {
        if (has_no_real_roots(f)) continue;
        const int v = linear_pivot(f);
        if (v >= 0) {
          explore(eliminate(subst, v, solve_for(f, v)), others);
        } else {
          auto residual = others;
          residual.insert(residual.begin(), f);
          emit_unsolved(subst, std::move(residual));
        }
      }
      return;
    }
    // (c) give up on this branch
    emit_unsolved(subst, std::move(R));
  }

  int k_;
  SolverOptions options_;
  int nodes_ = 0;
  std::vector<ConstraintCase> cases_;
};

}  // namespace

std::vector<ConstraintCase> solve_constraints(const ConstraintSet& c, const SolverOptions& options) {
  std::vector<ParamPoly> nonzero;
  for (const auto& p : c.polys) {
    if (p.k() != c.k) throw DimensionError("constraint with a different parameter count");
    if (p.is_zero()) continue;
    if (p.is_constant()) return {};  // a non-zero constant can never vanish
    nonzero.push_back(p);
  }
  if (nonzero.empty()) {
    ConstraintCase all_free;
    all_free.substitution.resize(static_cast<std::size_t>(c.k));
    return {all_free};
  }
  // The budget bounds case splitting, so it is checked after the
  // deductions that need no split.
  CaseSolver solver(c.k, options);
  std::vector<std::optional<ParamPoly>> forced(static_cast<std::size_t>(c.k));
  if (!solver.force(forced, nonzero)) return {};
  std::size_t fewest = nonzero.empty() ? 0 : std::numeric_limits<std::size_t>::max();
  for (const auto& p : nonzero) fewest = std::min(fewest, p.variables().size());
  if (static_cast<int>(fewest) > options.max_params) {
    throw CapabilityError("every remaining constraint involves at least " + std::to_string(fewest) +
                              " parameters; the solver budget is " + std::to_string(options.max_params),
                          c);
  }
  auto cases = solver.run(forced, nonzero);

  // Drop duplicates and solved cases covered by another solved case.
  std::vector<bool> keep(cases.size(), true);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (std::size_t j = 0; j < cases.size() && keep[i]; ++j) {
      if (i == j || !cases[i].contained_in(cases[j])) continue;
      // Equal cases: keep the first occurrence only.
      keep[i] = cases[j].contained_in(cases[i]) && i < j;
    }
  }
  std::vector<ConstraintCase> out;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (keep[i]) out.push_back(std::move(cases[i]));
  return out;
}

}  // namespace invsub
