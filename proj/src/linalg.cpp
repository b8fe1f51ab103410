#include "invsub/linalg.hpp"

#include "invsub/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace invsub {

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && invsub::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatMatrix UniPoly::operator()(const RatMatrix& m) const {
  if (!m.square()) throw DimensionError("polynomial evaluated at a non-square matrix");
  RatMatrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * m).shifted(*it);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coefficient(i) + o.coefficient(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coefficient(i) - o.coefficient(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::divide_linear(const Rational& r, Rational& rem) const {
  if (coeffs_.empty()) {
    rem = 0;
    return {};
  }
  // Synthetic division, highest degree first.
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * r + coeffs_[i];
    if (i > 0) q[i - 1] = carry;
  }
  rem = carry;
  return UniPoly(std::move(q));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (invsub::is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << invsub::to_string(mag);
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

UniPoly char_poly(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix h = m;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && is_zero(h(piv, c))) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    const Rational t = h(c + 1, c);
    for (std::size_t r = c + 2; r < n; ++r) {
      if (is_zero(h(r, c))) continue;
      const Rational u = h(r, c) / t;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(c + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) += u * h(i, r);
    }
  }

  // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}(x)
  std::vector<UniPoly> p;
  p.reserve(n + 1);
  p.emplace_back(std::vector<Rational>{Rational(1)});
  const UniPoly x = UniPoly::monomial(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    UniPoly next = (x - UniPoly({h(k, k)})) * p[k];
    Rational prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      if (is_zero(prod)) break;
      if (is_zero(h(i, k))) continue;
      next = next - UniPoly({Rational(h(i, k) * prod)}) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

// ---------------------------------------------------------------------------
// Rational roots

namespace {

std::vector<Integer> positive_divisors(Integer v) {
  v = abs(v);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer d = 2; d * d <= v; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
      v /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = divs.size();
    Integer pw = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c = p.coefficients();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UniPoly(std::move(c));
}

}  // namespace

RationalSpectrum rational_roots(const UniPoly& poly) {
  if (poly.is_zero()) throw DomainError("rational roots of the zero polynomial");
  RationalSpectrum out;
  UniPoly p = poly;

  int zero_mult = 0;
  while (p.degree() > 0 && is_zero(p.coefficient(0))) {
    Rational rem;
    p = p.divide_linear(0, rem);
    ++zero_mult;
  }
  if (zero_mult) out.multiplicity[Rational(0)] = zero_mult;

  if (p.degree() > 0) {
    Integer lcm_den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    const Integer lead = p.leading().get_num() * (lcm_den / p.leading().get_den());
    const Integer trail = p.coefficient(0).get_num() * (lcm_den / p.coefficient(0).get_den());
    const auto num_divs = positive_divisors(trail);
    const auto den_divs = positive_divisors(lead);
    std::set<Rational> candidates;
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        Rational q(a, b);
        q.canonicalize();
        candidates.insert(q);
        candidates.insert(-q);
      }
    }
    for (const auto& r : candidates) {
      if (p.degree() <= 0) break;
      int mult = 0;
      for (;;) {
        Rational rem;
        UniPoly q = p.divide_linear(r, rem);
        if (!is_zero(rem)) break;
        p = std::move(q);
        ++mult;
      }
      if (mult) out.multiplicity[r] = mult;
    }
  }
  for (const auto& [value, mult] : out.multiplicity) out.values.push_back(value);
  out.residual = make_monic(p);
  return out;
}

RationalSpectrum rational_eigenvalues(const RatMatrix& m) { return rational_roots(char_poly(m)); }

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan elimination

namespace {

struct Echelon {
  // Rows [0, rank) are reduced with pivot entries all equal to `det`; the
  // remaining rows are zero inside the pivot block.
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of row i < rank
  Integer det = 1;

  std::size_t rank() const { return pivot_cols.size(); }
};

std::vector<Integer> integer_row(std::span<const Rational> row) {
  Integer lcm_den = 1;
  for (const auto& x : row) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.get_num() * (lcm_den / x.get_den()));
  return out;
}

// Pivots are only taken in columns [0, pivot_limit); the remaining columns
// ride along (used for augmented systems).
Echelon fraction_free_reduce(const RatMatrix& m, std::size_t pivot_limit) {
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) e.rows.push_back(integer_row(m.row(i)));
  const std::size_t ncols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < pivot_limit && r < e.rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < e.rows.size() && e.rows[piv][c] == 0) ++piv;
    if (piv == e.rows.size()) continue;
    std::swap(e.rows[piv], e.rows[r]);
    const Integer p = e.rows[r][c];
    const auto& prow = e.rows[r];
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (i == r) continue;
      auto& row = e.rows[i];
      const Integer a = row[c];
      for (std::size_t j = 0; j < ncols; ++j) {
        // row_j = (p*row_j - a*prow_j) / prev, exact
        tmp = p * row[j];
        if (a != 0) tmp -= a * prow[j];
        if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        row[j] = tmp;
      }
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.det = prev;
  return e;
}

Kernel kernel_from_echelon(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  Kernel out;
  auto& basis = out.basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    out.free_columns.push_back(f);
    RatVector v(ncols);
    v[f] = Rational(e.det);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_cols[r]] = Rational(Integer(-e.rows[r][f]));
    v = primitive_integer(v);
    if (sgn(v[f]) < 0)
      for (auto& x : v) x = -x;
    basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Kernel kernel(const RatMatrix& m) { return kernel_from_echelon(fraction_free_reduce(m, m.cols()), m.cols()); }

std::vector<RatVector> null_space(const RatMatrix& m) { return kernel(m).basis; }

std::vector<RatVector> null_space_naive(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t ncols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < ncols; ++j) std::swap(a(piv, j), a(r, j));
    const Rational p = a(r, c);
    for (std::size_t j = 0; j < ncols; ++j) a(r, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < ncols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    v = primitive_integer(v);
    if (sgn(v[f]) < 0)
      for (auto& x : v) x = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const RatMatrix& m, const RatVector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length differs from row count");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const auto e = fraction_free_reduce(aug, n);
  LinearSolution sol;
  for (std::size_t i = e.rank(); i < e.rows.size(); ++i) {
    if (e.rows[i][n] != 0) return sol;
  }
  sol.consistent = true;
  sol.particular.assign(n, Rational(0));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    Rational x(e.rows[r][n], e.det);
    x.canonicalize();
    sol.particular[e.pivot_cols[r]] = x;
  }
  // Kernel of the coefficient block only.
  Echelon coeff = e;
  for (auto& row : coeff.rows) row.pop_back();
  sol.kernel = kernel_from_echelon(coeff, n).basis;
  return sol;
}

std::size_t rank(const RatMatrix& m) { return fraction_free_reduce(m, m.cols()).rank(); }

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss over the rationals: every division below is exact.
  RatMatrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(a(piv, k))) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& rows, std::size_t width) {
  if (rows.empty()) return {};
  const auto e = fraction_free_reduce(RatMatrix::from_rows(rows), width);
  std::vector<RatVector> out;
  out.reserve(e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const auto& row = e.rows[r];
    RatVector v;
    v.reserve(width);
    for (const auto& z : row) v.emplace_back(z);
    v = primitive_integer(v);
    if (sgn(v[e.pivot_cols[r]]) < 0)
      for (auto& x : v) x = -x;
    out.push_back(std::move(v));
  }
  return out;
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t width) {
  return canonical_basis(a, width) == canonical_basis(b, width);
}

bool in_span(const RatVector& v, const std::vector<RatVector>& basis) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<RatVector> ext = basis;
  ext.push_back(v);
  const RatMatrix a = RatMatrix::from_rows(basis);
  const RatMatrix b = RatMatrix::from_rows(ext);
  return rank(a) == rank(b);
}

}  // namespace invsub
