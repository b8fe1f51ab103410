#include "invsub/exterior.hpp"

#include "invsub/errors.hpp"
#include "invsub/linalg.hpp"

#include <algorithm>
#include <iterator>

namespace invsub {

Multivector::Multivector(int n, int d, int k) : n_(n), d_(d), k_(k) {
  if (n < 0 || d < 0 || d > n) throw DomainError("multivector degree outside 0..n");
  coords_.assign(binomial(n, d), ParamPoly(k));
}

Multivector Multivector::basis(const IndexSet& s, int k) {
  Multivector v(s.n(), s.size(), k);
  v.coords_[s.rank()] = ParamPoly(k, Rational(1));
  return v;
}

Multivector Multivector::from_rational(int n, int d, const RatVector& coords) {
  Multivector v(n, d, 0);
  if (coords.size() != v.size()) throw DimensionError("coordinate count differs from C(n,d)");
  for (std::size_t i = 0; i < coords.size(); ++i) v.coords_[i] = ParamPoly(0, coords[i]);
  return v;
}

Multivector Multivector::from_vector(const std::vector<ParamPoly>& vec) {
  const int n = static_cast<int>(vec.size());
  const int k = vec.empty() ? 0 : vec.front().k();
  Multivector v(n, 1, k);
  for (int i = 0; i < n; ++i) v.coords_[static_cast<std::size_t>(i)] = vec[static_cast<std::size_t>(i)];
  return v;
}

Multivector Multivector::from_vector(const RatVector& vec) {
  return from_rational(static_cast<int>(vec.size()), 1, vec);
}

bool Multivector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool Multivector::is_constant() const {
  for (const auto& c : coords_)
    if (!c.is_constant()) return false;
  return true;
}

RatVector Multivector::to_rational() const {
  RatVector out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!c.is_constant()) throw DomainError("multivector coordinate depends on a parameter");
    out.push_back(c.constant());
  }
  return out;
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (o.n_ != n_ || o.d_ != d_ || o.k_ != k_) throw DimensionError("multivector sum of mismatched shapes");
  Multivector r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  if (o.n_ != n_ || o.d_ != d_ || o.k_ != k_) throw DimensionError("multivector difference of mismatched shapes");
  Multivector r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

Multivector Multivector::operator*(const Rational& c) const {
  Multivector r = *this;
  for (auto& x : r.coords_) x = x * c;
  return r;
}

Multivector Multivector::operator*(const ParamPoly& c) const {
  Multivector r = *this;
  for (auto& x : r.coords_) x = x * c;
  return r;
}

Multivector Multivector::substitute(const std::vector<std::optional<ParamPoly>>& values) const {
  Multivector r = *this;
  for (auto& x : r.coords_) x = x.substitute(values);
  return r;
}

Multivector Multivector::remap(int new_k, const std::vector<int>& mapping) const {
  Multivector r(n_, d_, new_k);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i].remap(new_k, mapping);
  return r;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.n() != b.n()) throw DimensionError("wedge of multivectors over different spaces");
  if (a.k() != b.k()) throw DimensionError("wedge of multivectors with different parameter counts");
  const int n = a.n();
  if (a.degree() + b.degree() > n) throw DomainError("wedge degree exceeds the ambient dimension");
  Multivector out(n, a.degree() + b.degree(), a.k());
  std::vector<IndexSet> as;
  std::vector<IndexSet> bs;
  for (std::size_t i = 0; i < a.size(); ++i)
    as.push_back(a[i].is_zero() ? IndexSet() : IndexSet::unrank(n, a.degree(), i));
  for (std::size_t j = 0; j < b.size(); ++j)
    bs.push_back(b[j].is_zero() ? IndexSet() : IndexSet::unrank(n, b.degree(), j));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const auto& I = as[i].elems();
      const auto& J = bs[j].elems();
      bool disjoint = true;
      for (int x : I) {
        if (bs[j].contains(x)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      std::vector<int> merged;
      merged.reserve(I.size() + J.size());
      std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(merged));
      const IndexSet M(n, std::move(merged));
      out[M.rank()].add_product(a[i], b[j], sign_shuffle(as[i], bs[j]));
    }
  }
  return out;
}

Multivector wedge_all(const std::vector<RatVector>& vectors, int n) {
  Multivector acc = Multivector::from_rational(n, 0, RatVector{Rational(1)});
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw DimensionError("vector length differs from n");
    acc = wedge(acc, Multivector::from_vector(v));
  }
  return acc;
}

Multivector wedge_all(const std::vector<std::vector<ParamPoly>>& vectors, int n, int k) {
  Multivector acc(n, 0, k);
  acc[0] = ParamPoly(k, Rational(1));
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw DimensionError("vector length differs from n");
    acc = wedge(acc, Multivector::from_vector(v));
  }
  return acc;
}

namespace {

void check_compound_args(const RatMatrix& m, int d) {
  if (!m.square()) throw DimensionError("exterior power of a non-square matrix");
  if (d < 1 || d > static_cast<int>(m.rows())) throw DomainError("exterior power degree outside 1..n");
}

Rational minor(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  const std::size_t d = static_cast<std::size_t>(rows.size());
  RatMatrix sub(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      sub(i, j) = m(static_cast<std::size_t>(rows.elems()[i] - 1), static_cast<std::size_t>(cols.elems()[j] - 1));
  return determinant(sub);
}

}  // namespace

RatMatrix exterior_power_serial(const RatMatrix& m, int d) {
  check_compound_args(m, d);
  const int n = static_cast<int>(m.rows());
  const auto sets = IndexSet::all(n, d);
  RatMatrix out(sets.size(), sets.size());
  for (std::size_t r = 0; r < sets.size(); ++r)
    for (std::size_t c = 0; c < sets.size(); ++c) out(r, c) = minor(m, sets[r], sets[c]);
  return out;
}

RatMatrix exterior_power(const RatMatrix& m, int d) {
  check_compound_args(m, d);
  const int n = static_cast<int>(m.rows());
  const auto sets = IndexSet::all(n, d);
  const auto count = static_cast<long>(sets.size());
  RatMatrix out(sets.size(), sets.size());
  // Each thread writes disjoint rows of `out`.
#pragma omp parallel for schedule(dynamic, 4)
  for (long r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < sets.size(); ++c)
      out(static_cast<std::size_t>(r), c) = minor(m, sets[static_cast<std::size_t>(r)], sets[c]);
  }
  return out;
}

DualMultivector dual(const Multivector& v) {
  const int n = v.n();
  const int d = v.degree();
  Multivector y(n, n - d, v.k());
  for (const auto& J : IndexSet::all(n, n - d)) {
    const IndexSet Jc = J.complement();
    const ParamPoly& x = v.at(Jc);
    if (x.is_zero()) continue;
    y.at(J) = sign_shuffle(Jc, J) > 0 ? x : -x;
  }
  return DualMultivector{std::move(y)};
}

Multivector apply_compound(const RatMatrix& compound, const Multivector& v) {
  if (!compound.square() || compound.rows() != v.size())
    throw DimensionError("compound size differs from the multivector's coordinate count");
  Multivector out(v.n(), v.degree(), v.k());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Rational& a = compound(i, j);
      if (is_zero(a) || v[j].is_zero()) continue;
      out[i] += v[j] * a;
    }
  }
  return out;
}

RatMatrix wedge_map(const Multivector& v) {
  if (!v.is_constant()) throw DomainError("wedge_map needs constant coordinates");
  const int n = v.n();
  if (v.degree() >= n) throw DomainError("wedge_map needs degree below n");
  RatMatrix out(binomial(n, v.degree() + 1), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const Multivector img = wedge(Multivector::basis(IndexSet(n, {j}), v.k()), v);
    for (std::size_t r = 0; r < img.size(); ++r) out(r, static_cast<std::size_t>(j - 1)) = img[r].constant();
  }
  return out;
}

}  // namespace invsub
