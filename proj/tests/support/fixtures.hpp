// Shared fixtures and independent oracles for the test suites.
#ifndef INVSUB_TESTS_FIXTURES_HPP
#define INVSUB_TESTS_FIXTURES_HPP

#include "invsub/divisors.hpp"
#include "invsub/exterior.hpp"
#include "invsub/invariant_search.hpp"
#include "invsub/linalg.hpp"
#include "invsub/problem.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixtures {

using namespace invsub;

inline std::string data_path(const std::string& name) { return std::string(INVSUB_DATA_DIR) + "/" + name; }

inline ProblemFile load_problem(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

inline MatrixSet load_set(const std::string& name) {
  const auto p = load_problem(name);
  return MatrixSet{p.matrices, p.shift ? *p.shift : choose_shift(p.matrices)};
}

inline RatVector unit(int n, int i) {
  RatVector e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

// Random data

inline Rational random_int(std::mt19937_64& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_int(rng, lo, hi);
  return m;
}

inline RatVector random_vector(std::mt19937_64& rng, int n, int lo, int hi) {
  RatVector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = random_int(rng, lo, hi);
  return v;
}

// d independent random integer vectors.
inline std::vector<RatVector> random_independent(std::mt19937_64& rng, int n, int d, int lo, int hi) {
  while (true) {
    std::vector<RatVector> ws;
    for (int i = 0; i < d; ++i) ws.push_back(random_vector(rng, n, lo, hi));
    if (rank(RatMatrix::from_rows(ws)) == static_cast<std::size_t>(d)) return ws;
  }
}

// Product of random elementary integer row operations: determinant ±1, so
// the inverse is integral as well.
inline RatMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8) {
  RatMatrix u = RatMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (j + 1) % n;
    Rational f = random_int(rng, -2, 2);
    if (f == 0) f = 1;
    for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  }
  return u;
}

// Plain Gauss-Jordan inverse; only used on well-conditioned fixtures.
inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a(p, c) == 0) ++p;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Upper triangular with diagonal drawn from {1,2,3}, conjugated by u.
inline RatMatrix conjugated_triangular(std::mt19937_64& rng, const RatMatrix& u, const RatMatrix& u_inv) {
  const std::size_t n = u.rows();
  RatMatrix t(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    t(r, r) = random_int(rng, 1, 3);
    for (std::size_t c = r + 1; c < n; ++c) t(r, c) = random_int(rng, -1, 1);
  }
  return u * t * u_inv;
}

// Oracles

// Determinant by permutation expansion (Leibniz), independent of Bareiss.
inline Rational leibniz_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Compound matrix entry by entry through Leibniz minors.
inline RatMatrix compound_oracle(const RatMatrix& m, int d) {
  const int n = static_cast<int>(m.rows());
  const auto sets = IndexSet::all(n, d);
  RatMatrix out(sets.size(), sets.size());
  for (std::size_t r = 0; r < sets.size(); ++r)
    for (std::size_t c = 0; c < sets.size(); ++c) {
      RatMatrix minor(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          minor(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              m(static_cast<std::size_t>(sets[r].elems()[static_cast<std::size_t>(i)] - 1),
                static_cast<std::size_t>(sets[c].elems()[static_cast<std::size_t>(j)] - 1));
      out(r, c) = leibniz_det(minor);
    }
  return out;
}

// dim ker(u ↦ u ∧ v), the matrix assembled column by column from wedge()
// and reduced with the plain rational null space.
inline std::size_t wedge_kernel_dimension(const Multivector& v) {
  const int n = v.n();
  if (v.degree() >= n) return static_cast<std::size_t>(n);
  std::vector<RatVector> cols;
  for (int j = 1; j <= n; ++j) cols.push_back(wedge(Multivector::from_vector(unit(n, j)), v).to_rational());
  const auto m = RatMatrix::from_columns(cols, binomial(n, v.degree() + 1));
  return null_space_naive(m).size();
}

// Invariance checked by definition: A w ∈ span(basis) for every A and w.
inline bool invariant_by_definition(const std::vector<RatVector>& basis, const std::vector<RatMatrix>& ms) {
  for (const auto& a : ms)
    for (const auto& w : basis)
      if (!in_span(a * w, basis)) return false;
  return true;
}

// Every d-dimensional subspace whose reduced echelon basis has free entries
// in `grid`, tested for invariance by definition.
inline std::vector<std::vector<RatVector>> echelon_grid_invariants(const std::vector<RatMatrix>& ms, int d,
                                                                   const std::vector<Rational>& grid) {
  const int n = static_cast<int>(ms.front().rows());
  std::vector<std::vector<RatVector>> hits;
  for (const auto& pivots : IndexSet::all(n, d)) {
    // Free slots: row i, column c > pivot_i, c not a pivot.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < d; ++i) {
      const int p = pivots.elems()[static_cast<std::size_t>(i)];
      for (int c = p + 1; c <= n; ++c)
        if (!pivots.contains(c)) slots.emplace_back(i, c);
    }
    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
      std::vector<RatVector> basis;
      for (int i = 0; i < d; ++i) basis.push_back(unit(n, pivots.elems()[static_cast<std::size_t>(i)]));
      for (std::size_t s = 0; s < slots.size(); ++s)
        basis[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second - 1)] = grid[idx[s]];
      if (invariant_by_definition(basis, ms)) hits.push_back(basis);
      std::size_t s = 0;
      while (s < idx.size() && ++idx[s] == grid.size()) idx[s++] = 0;
      if (s == idx.size()) break;
    }
  }
  return hits;
}

// Table rows such as "e3, e6, e9+a(e1+e5)" or "e7+ae6, e8-ae3";
// 'a' and 'b' stand for the table's α and β (two parameters).
class RowParser {
 public:
  RowParser(std::string text, int n) : s_(std::move(text)), n_(n) {}

  std::vector<std::vector<ParamPoly>> parse() {
    std::vector<std::vector<ParamPoly>> out;
    while (true) {
      out.push_back(vector());
      skip();
      if (i_ == s_.size()) break;
      expect(',');
    }
    return out;
  }

 private:
  void skip() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) throw std::invalid_argument("row '" + s_ + "': expected '" + c + "'");
    ++i_;
  }
  std::vector<ParamPoly> vector() {
    std::vector<ParamPoly> v(static_cast<std::size_t>(n_), ParamPoly(2));
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        break;
      }
      first = false;
      skip();
      ParamPoly coef(2, Rational(sign));
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        coef = coef * Rational(std::stoi(s_.substr(i_, j - i_)));
        i_ = j;
      }
      if (i_ < s_.size() && (s_[i_] == 'a' || s_[i_] == 'b')) {
        coef = coef * ParamPoly::variable(2, s_[i_] == 'a' ? 0 : 1);
        ++i_;
      }
      if (i_ < s_.size() && s_[i_] == '(') {
        ++i_;
        const auto inner = vector();
        expect(')');
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += inner[k] * coef;
      } else {
        if (i_ >= s_.size() || s_[i_] != 'e') throw std::invalid_argument("row '" + s_ + "': expected e<k>");
        ++i_;
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        const int k = std::stoi(s_.substr(i_, j - i_));
        i_ = j;
        v[static_cast<std::size_t>(k - 1)] += coef;
      }
      skip();
      if (i_ < s_.size() && (s_[i_] == ',' || s_[i_] == ')')) break;
    }
    return v;
  }

  std::string s_;
  int n_;
  std::size_t i_ = 0;
};

inline std::vector<std::vector<ParamPoly>> parse_row(const std::string& text, int n) { return RowParser(text, n).parse(); }

inline std::vector<RatVector> instantiate(const std::vector<std::vector<ParamPoly>>& gens, const std::vector<Rational>& point) {
  std::vector<RatVector> out;
  for (const auto& g : gens) {
    RatVector v;
    for (const auto& x : g) v.push_back(x.evaluate(point));
    out.push_back(std::move(v));
  }
  return out;
}

// Members of a family at every combination of `values` for its free
// parameters.
inline std::vector<std::vector<RatVector>> family_members(const InvariantFamily& f, const std::vector<Rational>& values) {
  std::vector<std::vector<RatVector>> out;
  const auto free = f.free_parameters();
  std::vector<std::size_t> idx(free.size(), 0);
  while (true) {
    std::vector<Rational> point(static_cast<std::size_t>(f.chart));
    for (std::size_t i = 0; i < free.size(); ++i) point[static_cast<std::size_t>(free[i])] = values[idx[i]];
    for (std::size_t j = 0; j < point.size(); ++j)
      if (f.substitution[j]) point[j] = f.substitution[j]->evaluate(point);
    out.push_back(instantiate(f.generators, point));
    std::size_t s = 0;
    while (s < idx.size() && ++idx[s] == values.size()) idx[s++] = 0;
    if (s == idx.size()) break;
  }
  return out;
}

}  // namespace fixtures

#endif  // INVSUB_TESTS_FIXTURES_HPP
