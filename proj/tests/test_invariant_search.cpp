#include "support/fixtures.hpp"

#include "invsub/errors.hpp"

#include <doctest.h>

#include <set>

using namespace invsub;
using namespace fixtures;

namespace {

std::vector<RatMatrix> problem_matrices(const std::string& name) { return load_problem(name).matrices; }

// Constant members of every family, as canonical bases.
std::set<std::vector<RatVector>> constant_members(const std::vector<InvariantFamily>& fams, int n) {
  std::set<std::vector<RatVector>> out;
  for (const auto& f : fams)
    if (f.free_parameters().empty())
      for (const auto& m : family_members(f, {0})) out.insert(canonical_basis(m, static_cast<std::size_t>(n)));
  return out;
}

std::vector<RatVector> intersection(const std::vector<RatVector>& u, const std::vector<RatVector>& w, std::size_t n) {
  std::vector<RatVector> cols = u;
  for (const auto& x : w) {
    RatVector neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    cols.push_back(std::move(neg));
  }
  std::vector<RatVector> out;
  for (const auto& a : null_space(RatMatrix::from_columns(cols, n))) {
    RatVector v(n);
    for (std::size_t j = 0; j < u.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += a[j] * u[j][i];
    out.push_back(std::move(v));
  }
  return canonical_basis(out, n);
}

// Compare families of two scans by membership of sampled members.
bool scans_agree(const LatticeScan& a, const LatticeScan& b) {
  for (const auto& [d, fams] : a.by_dimension)
    for (const auto& f : fams)
      for (const auto& m : family_members(f, {0, 1, -2, Rational(1, 3)})) {
        const auto& other = b.by_dimension.at(d);
        if (d > 0 && std::none_of(other.begin(), other.end(), [&](const InvariantFamily& g) { return family_contains(g, m); }))
          return false;
      }
  return true;
}

}  // namespace

TEST_CASE("choose_shift") {
  CHECK(choose_shift(problem_matrices("nilpotent4.txt")) == 1);
  CHECK(choose_shift(problem_matrices("example3.txt")) == 3);
  CHECK(choose_shift({RatMatrix{{2, 1}, {0, 3}}, RatMatrix::identity(2)}) == 0);
  CHECK(choose_shift({RatMatrix{{-1, 0}, {0, -2}}}) == 0);
  CHECK(choose_shift({RatMatrix{{0, 0}, {0, -1}}}) == 2);
}

TEST_CASE("matrix set validation") {
  CHECK_THROWS_AS((MatrixSet{{}, 0}.validate()), DimensionError);
  CHECK_THROWS_AS((MatrixSet{{RatMatrix::identity(2), RatMatrix::identity(3)}, 0}.validate()), DimensionError);
  CHECK_THROWS_AS((MatrixSet{{RatMatrix(2, 3)}, 0}.validate()), DimensionError);
  CHECK(MatrixSet{{RatMatrix::identity(3)}, 2}.n() == 3);
}

TEST_CASE("algorithm A examples") {
  const auto s3 = algorithm_a(load_set("nilpotent4.txt"));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].eigen == EigenTuple{1, 1, 1});
  CHECK(s3[0].space.basis == std::vector<RatVector>{unit(4, 1)});

  const auto ex1 = algorithm_a(load_set("example1.txt"));
  const auto it = std::find_if(ex1.begin(), ex1.end(), [](const EigenSpace& s) { return s.eigen == EigenTuple{2, 1}; });
  REQUIRE(it != ex1.end());
  CHECK(it->space.basis == std::vector<RatVector>{unit(7, 5), unit(7, 6)});
  CHECK(it->space.free_columns == std::vector<std::size_t>{4, 5});
  for (std::size_t i = 1; i < ex1.size(); ++i) CHECK(ex1[i - 1].eigen < ex1[i].eigen);

  const auto id = algorithm_a(std::vector<RatMatrix>{RatMatrix::identity(3)});
  REQUIRE(id.size() == 1);
  CHECK(id[0].eigen == EigenTuple{1});
  CHECK(id[0].space.basis.size() == 3);
}

TEST_CASE("irrational spectra are rejected") {
  const std::vector<RatMatrix> ms = {RatMatrix::identity(2), RatMatrix{{0, 2}, {1, 0}}};
  try {
    algorithm_a(ms);
    FAIL("expected UnsupportedSpectrumError");
  } catch (const UnsupportedSpectrumError& err) {
    CHECK(err.matrix_index() == 1);
    CHECK(err.residual_factor().find("x^2") != std::string::npos);
  }
  CHECK_THROWS_AS(full_lattice_scan(MatrixSet{ms, 1}), UnsupportedSpectrumError);
  CHECK_THROWS_AS(families_of_dimension(MatrixSet{{RatMatrix{{0, -1}, {1, 0}}}, 0}, 1), UnsupportedSpectrumError);
}

TEST_CASE("a shift leaving a matrix singular is rejected") {
  CHECK_THROWS_AS(families_of_dimension(MatrixSet{{RatMatrix{{1, 0}, {0, 0}}}, 0}, 1), DomainError);
}

TEST_CASE("algorithm B on the four-dimensional example") {
  const auto ms = load_set("nilpotent4.txt");
  const auto two = algorithm_b(ms, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].free_parameters().empty());
  CHECK(family_members(two[0], {0}).front() == std::vector<RatVector>{unit(4, 1), unit(4, 2)});

  const auto three = algorithm_b(ms, 3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].free_parameters().empty());
  CHECK(three[1].free_parameters().size() == 1);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      RatVector w(4);
      w[2] = a;
      w[3] = b;
      const std::vector<RatVector> member = {unit(4, 1), unit(4, 2), w};
      const int hits = family_contains(three[0], member) + family_contains(three[1], member);
      CHECK(hits == 1);
    }
  CHECK_THROWS_AS(algorithm_b(ms, 1), DimensionError);
  CHECK_THROWS_AS(algorithm_b(ms, 4), DimensionError);
}

TEST_CASE("two-parameter row of the seven-dimensional example") {
  const auto fams = algorithm_b(load_set("example2.json"), 4);
  const EigenTuple tuple = {36, 2};
  for (const auto* text : {"e2, e3, e4, e5+e6", "e2, e3, e5+ae4, e6-ae4"}) {
    const auto gens = parse_row(text, 7);
    for (const auto& a : {Rational(0), Rational(1), Rational(-3), Rational(2, 5)}) {
      const auto member = instantiate(gens, {a, 0});
      CHECK(std::any_of(fams.begin(), fams.end(), [&](const InvariantFamily& f) { return f.eigen == tuple && family_contains(f, member); }));
    }
  }
}

TEST_CASE("verify_invariant") {
  const auto ms = load_set("nilpotent4.txt");
  CHECK(verify_invariant({unit(4, 1)}, ms));
  CHECK_FALSE(verify_invariant({unit(4, 2)}, ms));
  CHECK(verify_invariant({unit(4, 1), unit(4, 2), unit(4, 3), unit(4, 4)}, ms));
  CHECK(verify_invariant({unit(4, 1), unit(4, 2), {0, 0, 3, -7}}, ms));

  // ⟨e1, e2, e3 + t e4⟩ is invariant for every t.
  const int k = 1;
  std::vector<std::vector<ParamPoly>> gens(3, std::vector<ParamPoly>(4, ParamPoly(k)));
  gens[0][0] = ParamPoly(k, 1);
  gens[1][1] = ParamPoly(k, 1);
  gens[2][2] = ParamPoly(k, 1);
  gens[2][3] = ParamPoly::variable(k, 0);
  CHECK(verify_invariant(gens, k, ms));
  // ⟨e2 + t e1⟩ is not, even though t never vanishes identically.
  std::vector<std::vector<ParamPoly>> bad(1, std::vector<ParamPoly>(4, ParamPoly(k)));
  bad[0][1] = ParamPoly(k, 1);
  bad[0][0] = ParamPoly::variable(k, 0);
  CHECK_FALSE(verify_invariant(bad, k, ms));
}

TEST_CASE("lattice conventions") {
  const auto scan = full_lattice_scan(load_set("nilpotent4.txt"));
  CHECK(scan.complete);
  REQUIRE(scan.by_dimension.size() == 5);
  REQUIRE(scan.by_dimension.at(0).size() == 1);
  CHECK(scan.by_dimension.at(0)[0].generators.empty());
  REQUIRE(scan.by_dimension.at(4).size() == 1);
  CHECK(family_members(scan.by_dimension.at(4)[0], {0}).front().size() == 4);
  CHECK(scan.by_dimension.at(1).size() == 1);
}

TEST_CASE("commuting diagonal matrices give the coordinate subspaces") {
  RatMatrix a(4, 4), b(4, 4);
  const long da[] = {1, 2, 3, 4}, db[] = {5, -1, 0, 2};
  for (std::size_t i = 0; i < 4; ++i) {
    a(i, i) = da[i];
    b(i, i) = db[i];
  }
  const MatrixSet ms{{a, b}, choose_shift({a, b})};
  const auto scan = full_lattice_scan(ms);
  for (int d = 1; d < 4; ++d) {
    const auto& fams = scan.by_dimension.at(d);
    CHECK(fams.size() == binomial(4, d));
    std::set<std::vector<RatVector>> expected;
    for (const auto& s : IndexSet::all(4, d)) {
      std::vector<RatVector> basis;
      for (int i : s.elems()) basis.push_back(unit(4, i));
      expected.insert(basis);
    }
    CHECK(constant_members(fams, 4) == expected);
  }
}

TEST_CASE("identity gives every chart of every Grassmannian") {
  const int n = 4;
  const auto scan = full_lattice_scan(MatrixSet{{RatMatrix::identity(n)}, 0});
  for (int d = 1; d < n; ++d) {
    const auto& fams = scan.by_dimension.at(d);
    REQUIRE(fams.size() == binomial(n, d));
    std::size_t params = 0;
    for (const auto& f : fams) params = std::max(params, f.free_parameters().size());
    CHECK(params == static_cast<std::size_t>(d * (n - d)));
  }
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % (n - 1);
    const auto basis = random_independent(rng, n, d, -3, 3);
    const auto& fams = scan.by_dimension.at(d);
    const auto hits = std::count_if(fams.begin(), fams.end(), [&](const InvariantFamily& f) { return family_contains(f, basis); });
    CHECK(hits == 1);
  }
}

TEST_CASE("identity with --dim 1 gives n chart families") {
  const auto fams = families_of_dimension(MatrixSet{{RatMatrix::identity(5)}, 0}, 1);
  REQUIRE(fams.size() == 5);
  for (std::size_t c = 0; c < fams.size(); ++c) CHECK(fams[c].chart == static_cast<int>(c));
}

TEST_CASE("shift does not change the subspaces") {
  for (const char* name : {"nilpotent4.txt", "example1.txt"}) {
    auto ms = load_set(name);
    const auto a = full_lattice_scan(ms);
    ms.shift += 1;
    const auto b = full_lattice_scan(ms);
    CHECK(scans_agree(a, b));
    CHECK(scans_agree(b, a));
  }
}

TEST_CASE("eigen tuples are products of base eigenvalues") {
  const auto ms = load_set("example2.json");
  const auto shifted = ms.shifted();
  const int n = ms.n();
  std::vector<std::vector<Rational>> base;
  for (const auto& m : shifted) {
    const auto s = rational_eigenvalues(m);
    std::vector<Rational> with_mult;
    for (const auto& x : s.values) with_mult.insert(with_mult.end(), static_cast<std::size_t>(s.multiplicity.at(x)), x);
    base.push_back(with_mult);
  }
  for (int d = 1; d <= n; ++d) {
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      std::set<Rational> products;
      for (const auto& s : IndexSet::all(n, d)) {
        Rational p = 1;
        for (int j : s.elems()) p *= base[i][static_cast<std::size_t>(j - 1)];
        products.insert(p);
      }
      for (const auto& f : families_of_dimension(ms, d)) CHECK(products.count(f.eigen[i]) == 1);
    }
  }
}

TEST_CASE("emitted families are invariant, ordered and closed under meet and join") {
  const auto ms = load_set("example1.txt");
  const int n = ms.n();
  const auto scan = full_lattice_scan(ms);
  std::vector<std::vector<RatVector>> constants;
  for (const auto& [d, fams] : scan.by_dimension) {
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const auto& f = fams[i];
      CHECK(f.dimension == d);
      CHECK(f.solved);
      if (d > 0) CHECK(verify_invariant(f.generators, f.chart, ms));
      for (const auto& m : family_members(f, {0, 2, Rational(-1, 2)})) CHECK(invariant_by_definition(m, ms.matrices));
      if (i > 0) {
        const auto& g = fams[i - 1];
        CHECK(std::pair(g.eigen, g.chart) <= std::pair(f.eigen, f.chart));
      }
      if (d > 0 && d < n && f.free_parameters().empty()) constants.push_back(family_members(f, {0}).front());
    }
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < constants.size(); i += 3)
    for (std::size_t j = i + 1; j < constants.size(); j += 5) {
      const auto meet = intersection(constants[i], constants[j], static_cast<std::size_t>(n));
      auto all = constants[i];
      all.insert(all.end(), constants[j].begin(), constants[j].end());
      const auto join = canonical_basis(all, static_cast<std::size_t>(n));
      if (!meet.empty()) CHECK(invariant_by_definition(meet, ms.matrices));
      CHECK(invariant_by_definition(join, ms.matrices));
      ++pairs;
    }
  CHECK(pairs > 20);
}

TEST_CASE("brute-force completeness at toy scale") {
  std::mt19937_64 rng(52);
  const std::vector<Rational> grid = {0, 1, -1, 2, Rational(1, 2)};
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const auto u = random_unimodular(rng, n);
    const auto u_inv = inverse(u);
    const std::vector<RatMatrix> ms = {conjugated_triangular(rng, u, u_inv), conjugated_triangular(rng, u, u_inv)};
    const auto scan = full_lattice_scan(MatrixSet{ms, choose_shift(ms)});
    REQUIRE(scan.complete);
    for (int d = 1; d < static_cast<int>(n); ++d)
      for (const auto& hit : echelon_grid_invariants(ms, d, grid)) {
        const auto& fams = scan.by_dimension.at(d);
        CHECK(std::any_of(fams.begin(), fams.end(), [&](const InvariantFamily& f) { return family_contains(f, hit); }));
      }
  }
}

TEST_CASE("family_contains") {
  const auto fams = families_of_dimension(load_set("example1.txt"), 1);
  const auto it = std::find_if(fams.begin(), fams.end(), [](const InvariantFamily& f) { return f.eigen == EigenTuple{2, 1} && f.chart == 1; });
  REQUIRE(it != fams.end());
  CHECK(family_contains(*it, {{0, 0, 0, 0, 3, 1, 0}}));
  CHECK(family_contains(*it, {unit(7, 6)}));
  CHECK_FALSE(family_contains(*it, {unit(7, 5)}));
  CHECK_FALSE(family_contains(*it, {unit(7, 1)}));
  CHECK_FALSE(family_contains(*it, {unit(7, 5), unit(7, 6)}));
}
