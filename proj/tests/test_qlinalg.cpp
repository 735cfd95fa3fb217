#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "scl/qlinalg.hpp"

using namespace scl;

namespace {

QMatrix make(int r, int c, std::initializer_list<long> xs) {
  QMatrix m(r, c);
  auto it = xs.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

IMatrix imake(int r, int c, std::initializer_list<long> xs) {
  IMatrix m(r, c);
  auto it = xs.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

Rational rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-8, 8), den(1, 8);
  return rational_of(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational parse and format round trip") {
  CHECK(format_rational(parse_rational("3/6")) == "1/2");
  CHECK(format_rational(parse_rational("-4/2")) == "-2");
  CHECK(format_rational(parse_rational("0/7")) == "0");
  CHECK(format_rational(parse_rational("17")) == "17");
  CHECK(parse_rational("2/4") == parse_rational("1/2"));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rref of a rank one matrix") {
  QMatrix m = make(2, 2, {1, 2, 2, 4});
  std::vector<int> pivots;
  int rank = rref(m, &pivots);
  CHECK(rank == 1);
  CHECK(pivots == std::vector<int>{0});
  CHECK(m == make(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref canonicality: row space determines the form") {
  // Same row space presented two ways.
  QMatrix a = make(2, 3, {1, 2, 3, 0, 1, 1});
  QMatrix b = make(3, 3, {2, 4, 6, 1, 3, 4, 3, 7, 10});
  CHECK(rref_of(a) == rref_of(make(2, 3, {1, 0, 1, 0, 1, 1})));
  QMatrix rb = rref_of(b);
  QMatrix expect = make(3, 3, {1, 0, 1, 0, 1, 1, 0, 0, 0});
  CHECK(rb == expect);
}

TEST_CASE("solve and kernel agree with hand checks") {
  QMatrix m = make(2, 3, {1, 1, 0, 0, 1, 1});
  auto x = solve(m, {Rational(3), Rational(2)});
  REQUIRE(x.has_value());
  CHECK(mul(m, *x) == QVector{Rational(3), Rational(2)});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(mul(m, ker[0]) == QVector{Rational(0), Rational(0)});

  QMatrix bad = make(2, 1, {1, 1});
  CHECK_FALSE(solve(bad, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("determinant and inverse") {
  QMatrix m = make(2, 2, {1, 2, 3, 4});
  CHECK(determinant(m) == Rational(-2));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv) * m == QMatrix::identity(2));
  CHECK_FALSE(inverse(make(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("smith normal form of diag(2,3)") {
  SmithForm f = smith_normal_form(imake(2, 2, {2, 0, 0, 3}));
  REQUIRE(f.rank == 2);
  CHECK(f.d.at(0, 0) == 1);
  CHECK(f.d.at(1, 1) == 6);
  CHECK(f.reconstruct() == imake(2, 2, {2, 0, 0, 3}));
}

TEST_CASE("smith normal form basics") {
  // Zero matrix: rank 0.
  SmithForm z = smith_normal_form(IMatrix(2, 3));
  CHECK(z.rank == 0);
  // Divisibility chain on a matrix with mixed content.
  SmithForm f = smith_normal_form(imake(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16}));
  auto ds = f.divisors();
  REQUIRE(ds.size() == 3);
  for (size_t i = 0; i + 1 < ds.size(); ++i) {
    CHECK(ds[i] > 0);
    CHECK(ds[i + 1] % ds[i] == 0);
  }
  CHECK(f.reconstruct() == imake(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16}));
}

TEST_CASE("smith reconstruction on random matrices") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<int> dim(1, 12), entry(-9, 9);
  std::uniform_int_distribution<int> sparse(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int r = dim(rng), c = dim(rng);
    IMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (sparse(rng) == 0) m.at(i, j) = entry(rng);
    SmithForm f = smith_normal_form(m);
    CHECK(f.reconstruct() == m);
    // Unimodularity of the transforms.
    CHECK(abs(determinant(to_qmatrix(f.u))) == Rational(1));
    CHECK(abs(determinant(to_qmatrix(f.v))) == Rational(1));
    // d really is diagonal with the divisibility chain.
    for (int i = 0; i < f.d.rows; ++i)
      for (int j = 0; j < f.d.cols; ++j)
        if (i != j) CHECK(f.d.at(i, j) == 0);
    auto ds = f.divisors();
    for (size_t i = 0; i + 1 < ds.size(); ++i) CHECK(ds[i + 1] % ds[i] == 0);
    // Divisors-only path agrees.
    std::vector<Int> fast = elementary_divisors(m);
    CHECK(fast == ds);
  }
}

TEST_CASE("sparse elementary divisors match dense on larger incidence-like input") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coin(0, 9), sgn(0, 1);
  SparseIntMatrix sm(60, 80);
  for (int i = 0; i < 60; ++i)
    for (int j = 0; j < 80; ++j)
      if (coin(rng) == 0) sm.add(i, j, Int(sgn(rng) ? 1 : -1));
  // A few non-unit entries so the dense core is exercised.
  sm.add(3, 5, Int(4));
  sm.add(17, 40, Int(6));
  IMatrix dense = sm.dense();
  SmithForm f = smith_normal_form(dense);
  CHECK(elementary_divisors_sparse(sm) == f.divisors());
}

TEST_CASE("hermite form reduces lattice cosets canonically") {
  IMatrix gens = imake(2, 3, {2, 0, 1, 0, 3, 1});
  IMatrix h = hnf_rows(gens);
  // Reduction is idempotent and a lattice member reduces to zero.
  std::vector<Int> member{Int(2), Int(3), Int(2)};  // sum of the generators
  auto r = reduce_mod_hnf(member, h);
  for (const auto& x : r) CHECK(x == 0);
  std::vector<Int> v{Int(5), Int(4), Int(0)};
  auto r1 = reduce_mod_hnf(v, h);
  auto r2 = reduce_mod_hnf(r1, h);
  CHECK(r1 == r2);
}

TEST_CASE("subspace canonical form and membership") {
  Subspace s = Subspace::span_of({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, 2);
  CHECK(s.dim() == 1);
  Subspace t = Subspace::span_of({{Rational(3), Rational(3)}}, 2);
  CHECK(s == t);
  CHECK(s.contains({Rational(-5), Rational(-5)}));
  CHECK_FALSE(s.contains({Rational(1), Rational(0)}));
}

TEST_CASE("orthogonal complement of span{(1,1)} is span{(1,-1)}") {
  Subspace s = Subspace::span_of({{Rational(1), Rational(1)}}, 2);
  Subspace c = orthogonal_complement(s);
  Subspace expect = Subspace::span_of({{Rational(1), Rational(-1)}}, 2);
  CHECK(c == expect);
}

TEST_CASE("subspace operations: dimension formula and double complement") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> nd(2, 5), kd(0, 5);
  for (int trial = 0; trial < 120; ++trial) {
    int n = nd(rng);
    auto random_subspace = [&](int maxdim) {
      std::vector<QVector> vs;
      int k = kd(rng) % (maxdim + 1);
      for (int i = 0; i < k; ++i) {
        QVector v(n);
        for (int j = 0; j < n; ++j) v[j] = rnd_rational(rng);
        vs.push_back(v);
      }
      return Subspace::span_of(vs, n);
    };
    Subspace a = random_subspace(n), b = random_subspace(n);
    Subspace i = intersect(a, b), s = sum(a, b);
    CHECK(i.dim() + s.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    // Double complement and De Morgan under the standard inner product.
    CHECK(orthogonal_complement(orthogonal_complement(a)) == a);
    CHECK(a.dim() + orthogonal_complement(a).dim() == n);
    CHECK(orthogonal_complement(sum(a, b)) ==
          intersect(orthogonal_complement(a), orthogonal_complement(b)));
  }
}

TEST_CASE("orthogonal complement with a non-standard gram matrix") {
  // gram = [[2,1],[1,2]] is positive definite; complement of span{e1} under it
  // is {v : 2 v0 + v1 = 0}.
  QMatrix gram = make(2, 2, {2, 1, 1, 2});
  REQUIRE(is_positive_definite(gram));
  Subspace s = Subspace::span_of({{Rational(1), Rational(0)}}, 2);
  Subspace c = orthogonal_complement(s, &gram);
  CHECK(c == Subspace::span_of({{Rational(1), Rational(-2)}}, 2));
  // Complement is still complementary in dimension and double complement holds.
  CHECK(c.dim() == 1);
  CHECK(orthogonal_complement(c, &gram) == s);

  QMatrix bad = make(2, 2, {1, 3, 3, 1});
  CHECK_FALSE(is_positive_definite(bad));
  CHECK_THROWS_AS(orthogonal_complement(s, &bad), std::invalid_argument);
}
