#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "scl/flagcx.hpp"

using namespace scl;

namespace {

FinitePoset poset_from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  FinitePoset p;
  p.n = n;
  p.rel.assign(size_t(n), std::vector<char>(size_t(n), 0));
  for (int i = 0; i < n; ++i) p.rel[size_t(i)][size_t(i)] = 1;
  for (auto [i, j] : pairs) p.rel[size_t(i)][size_t(j)] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(i, k) && p.leq(k, j)) p.rel[size_t(i)][size_t(j)] = 1;
  return p;
}

FinitePoset random_poset(std::mt19937& rng, int n, int percent) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (int(rng() % 100) < percent) pairs.push_back({i, j});
  return poset_from_pairs(n, pairs);
}

Subspace span2(long x, long y) {
  return Subspace::span_of({{Rational(x), Rational(y)}}, 2);
}

Subspace span3(std::vector<std::vector<long>> rows) {
  std::vector<QVector> vs;
  for (const auto& r : rows) vs.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2])});
  return Subspace::span_of(vs, 3);
}

QVector ray2(long x, long y) { return {Rational(x), Rational(y)}; }

ChainComplex interval_complex() {
  ChainComplex c;
  c.dims = {2, 1};
  c.boundary.resize(2);
  c.boundary[0] = SparseIntMatrix(0, 2);
  SparseIntMatrix e(2, 1);
  e.add(0, 0, Int(-1));
  e.add(1, 0, Int(1));
  c.boundary[1] = e;
  return c;
}

ChainMap collapse_interval() {
  ChainMap f;
  SparseIntMatrix m0(1, 2);
  m0.add(0, 0, Int(1));
  m0.add(0, 1, Int(1));
  f.maps = {m0, SparseIntMatrix(0, 1)};
  return f;
}

void check_free_only(const HomologyResult& h, std::vector<int> want) {
  size_t n = std::max(h.free_rank.size(), want.size());
  for (size_t k = 0; k < n; ++k) {
    int got = k < h.free_rank.size() ? h.free_rank[k] : 0;
    int expect = k < want.size() ? want[k] : 0;
    CHECK(got == expect);
  }
  for (const auto& t : h.torsion) CHECK(t.empty());
}

// Values are points except at minimal elements, which carry an interval that
// collapses upward; strictly functorial by construction.
PosetDiagram interval_diagram(const FinitePoset& p) {
  PosetDiagram d;
  d.poset = p;
  std::vector<char> minimal(size_t(p.n), 1);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.leq(j, i)) minimal[size_t(i)] = 0;
  for (int i = 0; i < p.n; ++i)
    d.value.push_back(minimal[size_t(i)] ? interval_complex() : ChainComplex::point());
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      d.maps[{i, j}] =
          minimal[size_t(i)] ? collapse_interval() : ChainMap::identity(ChainComplex::point());
    }
  return d;
}

}  // namespace

TEST_CASE("complex and map validation rejects malformed data") {
  ChainComplex c;
  c.dims = {1, 1, 1};
  c.boundary.resize(3);
  c.boundary[0] = SparseIntMatrix(0, 1);
  SparseIntMatrix one(1, 1);
  one.add(0, 0, Int(1));
  c.boundary[1] = one;
  c.boundary[2] = one;
  CHECK_THROWS_WITH(c.validate(), "boundary does not square to zero");

  ChainComplex bad;
  bad.dims = {2, 1};
  bad.boundary.resize(2);
  bad.boundary[0] = SparseIntMatrix(0, 2);
  bad.boundary[1] = SparseIntMatrix(1, 1);
  CHECK_THROWS_WITH(bad.validate(), "boundary shape mismatch");

  ChainComplex iv = interval_complex();
  iv.validate();
  ChainComplex pt = ChainComplex::point();
  ChainMap skew;
  SparseIntMatrix m0(1, 2);
  m0.add(0, 0, Int(1));
  skew.maps = {m0, SparseIntMatrix(0, 1)};
  CHECK_THROWS_WITH(skew.validate(iv, pt), "chain map does not commute");
  collapse_interval().validate(iv, pt);
}

TEST_CASE("homology of frozen complexes") {
  // Boundary of the tetrahedron: all proper faces of a 3-simplex.
  OrderComplex sphere;
  sphere.vertices = 4;
  sphere.simplices.resize(3);
  for (int i = 0; i < 4; ++i) sphere.simplices[0].push_back({i});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sphere.simplices[1].push_back({i, j});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) sphere.simplices[2].push_back({i, j, k});
  check_free_only(homology(sphere.chains()), {1, 0, 1});

  ChainComplex pt = ChainComplex::point();
  ChainMap doubling;
  SparseIntMatrix two(1, 1);
  two.add(0, 0, Int(2));
  doubling.maps = {two};
  HomologyResult cone = homology(mapping_cone(doubling, pt, pt));
  CHECK(cone.free_rank == std::vector<int>{0, 0});
  REQUIRE(cone.torsion.size() == 2);
  CHECK(cone.torsion[0] == std::vector<Int>{Int(2)});
  CHECK(cone.torsion[1].empty());
  CHECK(cone.rational_rank == std::vector<int>{0, 0});
}

TEST_CASE("reduced homology conventions") {
  check_free_only(reduced_homology(ChainComplex::point()), {});

  ChainComplex two;
  two.dims = {2};
  two.boundary = {SparseIntMatrix(0, 2)};
  check_free_only(reduced_homology(two), {1});

  OrderComplex triangle;
  triangle.vertices = 3;
  triangle.simplices.resize(2);
  for (int i = 0; i < 3; ++i) triangle.simplices[0].push_back({i});
  triangle.simplices[1] = {{0, 1}, {0, 2}, {1, 2}};
  check_free_only(reduced_homology(triangle.chains()), {0, 1});

  CHECK(reduced_homology(ChainComplex::zero()).free_rank.empty());
}

TEST_CASE("poset chains and order complexes") {
  FinitePoset p = poset_from_pairs(3, {{0, 2}, {1, 2}});
  p.validate();
  CHECK(p.maximal() == std::vector<int>{2});
  std::vector<std::vector<int>> want = {{0}, {1}, {2}, {0, 2}, {1, 2}};
  CHECK(poset_chains(p) == want);

  OrderComplex oc = order_complex(p);
  CHECK(oc.vertices == 3);
  REQUIRE(oc.simplices.size() == 2);
  CHECK(oc.simplices[0].size() == 3);
  CHECK(oc.simplices[1] == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
  check_free_only(homology(oc.chains()), {1});

  FinitePoset loop;
  loop.n = 2;
  loop.rel = {{1, 1}, {1, 1}};
  CHECK_THROWS_WITH(loop.validate(), "poset relation not antisymmetric");
  FinitePoset skip;
  skip.n = 3;
  skip.rel = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK_THROWS_WITH(skip.validate(), "poset relation not transitive");
}

TEST_CASE("unreduced suspension") {
  OrderComplex empty;
  OrderComplex s = unreduced_suspension(empty);
  REQUIRE(s.simplices.size() == 1);
  CHECK(s.simplices[0].size() == 2);
  check_free_only(reduced_homology(s.chains()), {1});

  // Suspending two points gives a circle.
  OrderComplex two;
  two.vertices = 2;
  two.simplices = {{{0}, {1}}};
  OrderComplex circle = unreduced_suspension(two);
  CHECK(circle.simplices[0].size() == 4);
  CHECK(circle.simplices[1].size() == 4);
  check_free_only(reduced_homology(circle.chains()), {0, 1});
}

TEST_CASE("subspace poset generation") {
  Subspace full2 = Subspace::full(2);
  SubspacePoset three =
      generate_poset({span2(1, 0), span2(0, 1), span2(1, 1)}, full2);
  CHECK(three.size() == 4);
  CHECK(three.top_index() == 3);
  CHECK(three.elements[3] == full2);
  CHECK(three.geometric_dims() == std::vector<int>{0, 0, 0, 1});
  for (int i = 0; i < 3; ++i) {
    CHECK(three.leq(i, 3));
    for (int j = 0; j < 3; ++j) CHECK(three.leq(i, j) == (i == j));
  }

  SubspacePoset lonely = generate_poset({}, full2);
  CHECK(lonely.size() == 1);

  Subspace full3 = Subspace::full(3);
  Subspace p1 = span3({{1, 0, 0}, {0, 1, 0}});
  Subspace p2 = span3({{0, 1, 0}, {0, 0, 1}});
  SubspacePoset planes = generate_poset({p1, p2}, full3);
  CHECK(planes.size() == 4);
  CHECK(planes.elements[0] == span3({{0, 1, 0}}));
  CHECK(planes.leq(0, 1));
  CHECK(planes.leq(0, 2));
  CHECK(!planes.leq(1, 2));

  CHECK_THROWS_WITH(generate_poset({span2(1, 0)}, full3),
                    "generator ambient dimension mismatch");
  CHECK_THROWS_WITH(generate_poset({span3({{0, 0, 1}})}, p1),
                    "generator not contained in the ambient subspace");
  CHECK_THROWS_WITH(generate_poset({full2}, full2), "generator is not a proper subspace");
  CHECK_THROWS_WITH(generate_poset({Subspace::zero(2)}, full2),
                    "generator is an empty geometric subspace");
  CHECK_THROWS_WITH(generate_poset({}, Subspace::zero(2)),
                    "ambient is an empty geometric subspace");
}

TEST_CASE("subspace poset generation in the affine chart") {
  // Homogeneous models of affine points a on the line: span{(1, a)}.
  Subspace full2 = Subspace::full(2);
  SubspacePoset pts =
      generate_poset({Subspace::span_of({ray2(1, 0)}, 2), Subspace::span_of({ray2(1, 2)}, 2),
                      Subspace::span_of({ray2(1, -1)}, 2)},
                     full2, true);
  CHECK(pts.size() == 4);
  CHECK(pts.euclidean_chart);

  // The direction span{(0,1)} sits at infinity and is rejected as a generator.
  CHECK_THROWS_WITH(generate_poset({Subspace::span_of({ray2(0, 1)}, 2)}, full2, true),
                    "generator is an empty geometric subspace");

  // Two parallel affine lines in the plane: their intersection is a point at
  // infinity, kept without the chart flag and dropped with it.
  Subspace full3 = Subspace::full(3);
  Subspace l0 = span3({{1, 0, 0}, {0, 1, 0}});
  Subspace l1 = span3({{1, 0, 1}, {0, 1, 0}});
  CHECK(generate_poset({l0, l1}, full3).size() == 4);
  CHECK(generate_poset({l0, l1}, full3, true).size() == 3);
}

TEST_CASE("tits complex and its suspension") {
  Subspace full2 = Subspace::full(2);
  SubspacePoset four =
      generate_poset({span2(1, 0), span2(0, 1), span2(1, 1), span2(1, -1)}, full2);
  auto [t, st] = tits_and_st(four);
  CHECK(t.vertices == 4);
  REQUIRE(t.simplices.size() == 1);
  CHECK(t.simplices[0].size() == 4);
  check_free_only(reduced_homology(st.chains()), {0, 3});

  SubspacePoset single = generate_poset({span3({{1, 0, 0}, {0, 1, 0}})}, Subspace::full(3));
  auto [t1, st1] = tits_and_st(single);
  CHECK(t1.simplices.size() == 1);
  check_free_only(reduced_homology(st1.chains()), {});

  // A line inside two planes: the proper part is a path, so the suspension
  // stays contractible.
  SubspacePoset wedge = generate_poset(
      {span3({{1, 0, 0}, {0, 1, 0}}), span3({{0, 1, 0}, {0, 0, 1}})}, Subspace::full(3));
  auto [t2, st2] = tits_and_st(wedge);
  CHECK(t2.simplices.size() == 2);
  check_free_only(reduced_homology(st2.chains()), {});
}

TEST_CASE("hocolim of a point diagram is the order complex") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    FinitePoset p = random_poset(rng, 6, 30);
    HomologyResult nerve = homology(order_complex(p).chains());
    HomologyResult hc = homology(hocolim_complex(point_diagram(p)));
    CHECK(nerve.same_as(hc));
  }
}

TEST_CASE("diagram validation") {
  FinitePoset p = poset_from_pairs(2, {{0, 1}});
  PosetDiagram d = point_diagram(p);
  d.validate();

  PosetDiagram missing = d;
  missing.maps.clear();
  CHECK_THROWS_WITH(missing.validate(), "diagram map missing");

  PosetDiagram extra = d;
  extra.maps[{1, 0}] = ChainMap::identity(ChainComplex::point());
  CHECK_THROWS_WITH(extra.validate(), "diagram has maps off the relation");

  // A composite that disagrees with the direct map breaks strictness.
  FinitePoset q = poset_from_pairs(3, {{0, 1}, {1, 2}});
  PosetDiagram loose = point_diagram(q);
  ChainMap twice;
  SparseIntMatrix two(1, 1);
  two.add(0, 0, Int(2));
  twice.maps = {two};
  loose.maps[{0, 2}] = twice;
  CHECK_THROWS_WITH(loose.validate(), "diagram does not compose strictly");
}

TEST_CASE("barycentric model matches the diagram") {
  PosetDiagram seg = point_diagram(poset_from_pairs(2, {{0, 1}}));
  CompareReport r = barycentric_compare(seg);
  CHECK(r.equal);
  check_free_only(r.left, {1});

  SubspacePoset three = generate_poset({span2(1, 0), span2(0, 1), span2(1, 1)},
                                       Subspace::full(2));
  CompareReport r3 = barycentric_compare(point_diagram(three.relation()));
  CHECK(r3.equal);
  check_free_only(r3.left, {1});

  std::mt19937 rng(911);
  for (int trial = 0; trial < 4; ++trial) {
    FinitePoset p = random_poset(rng, 5, 25);
    CHECK(barycentric_compare(point_diagram(p)).equal);
    CHECK(barycentric_compare(interval_diagram(p)).equal);
  }
}

TEST_CASE("cube model matches the poset total cofiber") {
  // Marked points on the affine line, modelled as single points.
  Subspace full2 = Subspace::full(2);
  std::vector<Subspace> gens;
  for (long a = 0; a < 4; ++a) gens.push_back(Subspace::span_of({ray2(1, a)}, 2));
  SubspacePoset pts = generate_poset(gens, full2, true);
  PosetDiagram d = desk_diagram(pts, GeomKind::Euclidean);
  CompareReport r = cube_model_compare(d, pts.geometric_dims());
  CHECK(r.equal);
  check_free_only(r.left, {0, 3});

  SubspacePoset lonely = generate_poset({}, full2, true);
  CompareReport r1 = cube_model_compare(desk_diagram(lonely, GeomKind::Euclidean),
                                        lonely.geometric_dims());
  CHECK(r1.equal);
  check_free_only(r1.left, {1});

  // Two planes through a line: every desk value is a point and the total
  // cofiber is acyclic.
  SubspacePoset wedge = generate_poset(
      {span3({{1, 0, 0}, {0, 1, 0}}), span3({{0, 1, 0}, {0, 0, 1}})}, Subspace::full(3));
  PosetDiagram wd = desk_diagram(wedge, GeomKind::Euclidean);
  CompareReport rw = cube_model_compare(wd, wedge.geometric_dims());
  CHECK(rw.equal);
  check_free_only(rw.left, {});

  CHECK_THROWS_WITH(cube_of(wd, {1, 1, 1, 2}), "invalid dimension map");
  CHECK_THROWS_WITH(cube_of(wd, {0, 1, 2, 2}), "invalid dimension map");
}

TEST_CASE("total cofiber is independent of the direction order") {
  SubspacePoset wedge = generate_poset(
      {span3({{1, 0, 0}, {0, 1, 0}}), span3({{0, 1, 0}, {0, 0, 1}})}, Subspace::full(3));
  PosetDiagram wd = desk_diagram(wedge, GeomKind::Euclidean);
  CubeDiagram cube = cube_of(wd, wedge.geometric_dims());
  HomologyResult a = homology(total_cofiber(cube, {0, 1}));
  HomologyResult b = homology(total_cofiber(cube, {1, 0}));
  CHECK(a.same_as(b));
  CHECK_THROWS_WITH(total_cofiber(cube, {0, 0}), "direction order is not a permutation");
}

TEST_CASE("euler characteristic of the total cofiber") {
  Subspace full2 = Subspace::full(2);
  SubspacePoset lines = generate_poset({span2(1, 0), span2(0, 1), span2(1, 1)}, full2);
  std::vector<QVector> rays = {ray2(1, 0), ray2(-1, 0), ray2(0, 1),
                               ray2(0, -1), ray2(1, 1), ray2(-1, -1)};
  PtDesk desk = pt_complex_desk(lines, GeomKind::Spherical, rays);
  Int direct = euler_characteristic(desk.tcofib);
  Int alternating = 0;
  for (int mask = 0; mask < (1 << desk.cube.n); ++mask) {
    int bits = 0;
    for (int i = 0; i < desk.cube.n; ++i)
      if (mask & (1 << i)) ++bits;
    Int term = euler_characteristic(desk.cube.vertex[size_t(mask)]);
    alternating += bits % 2 == 0 ? term : -term;
  }
  CHECK(direct == alternating);
  CHECK(direct == Int(-6));
}

TEST_CASE("polytope complex desks") {
  // Affine line with four marked points.
  Subspace full2 = Subspace::full(2);
  std::vector<Subspace> gens;
  for (long a = 0; a < 4; ++a) gens.push_back(Subspace::span_of({ray2(1, a)}, 2));
  SubspacePoset pts = generate_poset(gens, full2, true);
  PtDesk line = pt_complex_desk(pts, GeomKind::Euclidean);
  check_free_only(line.reduced, {0, 3});

  // Circle with three declared great-circle point pairs.
  SubspacePoset three = generate_poset({span2(1, 0), span2(0, 1), span2(1, 1)}, full2);
  std::vector<QVector> rays = {ray2(1, 0), ray2(-1, 0), ray2(0, 1),
                               ray2(0, -1), ray2(1, 1), ray2(-1, -1)};
  PtDesk circle = pt_complex_desk(three, GeomKind::Spherical, rays);
  CHECK(circle.cube.n == 1);
  CHECK(circle.cube.vertex[0].dims == std::vector<int>{6, 6});
  CHECK(circle.cube.vertex[1].dims == std::vector<int>{6});
  check_free_only(circle.reduced, {0, 6});

  // Zero sphere.
  SubspacePoset s0 = generate_poset({}, Subspace::full(1));
  PtDesk points = pt_complex_desk(s0, GeomKind::Spherical);
  check_free_only(points.reduced, {2});

  CHECK_THROWS_WITH(pt_complex_desk(three, GeomKind::Spherical,
                                    {ray2(1, 0), ray2(-1, 0), ray2(0, 1), ray2(0, -1),
                                     ray2(1, 1)}),
                    "ray set not antipode-closed");
  CHECK_THROWS_WITH(pt_complex_desk(three, GeomKind::Spherical,
                                    {ray2(1, 0), ray2(-1, 0), ray2(0, 1), ray2(0, -1)}),
                    "a line of the poset has no declared ray pair");
  CHECK_THROWS_WITH(pt_complex_desk(three, GeomKind::Spherical, {}),
                    "spherical desk needs declared rays");
  CHECK_THROWS_WITH(
      pt_complex_desk(generate_poset({}, Subspace::full(3)), GeomKind::Spherical,
                      {QVector{Rational(1), Rational(0), Rational(0)},
                       QVector{Rational(-1), Rational(0), Rational(0)}}),
      "spherical desk models cover S0 and S1 only");
  CHECK_THROWS_WITH(pt_complex_desk(s0, GeomKind::Spherical, {QVector{Rational(1)}}),
                    "ray set not antipode-closed");
}

TEST_CASE("euclidean desk homology matches the suspended flag complex") {
  Subspace full2 = Subspace::full(2);
  std::vector<Subspace> gens;
  for (long a = 0; a < 5; ++a) gens.push_back(Subspace::span_of({ray2(1, 2 * a + 1)}, 2));
  for (const int count : {2, 3, 5}) {
    std::vector<Subspace> some(gens.begin(), gens.begin() + count);
    SubspacePoset pts = generate_poset(some, full2, true);
    PtDesk desk = pt_complex_desk(pts, GeomKind::Euclidean);
    auto [t, st] = tits_and_st(pts);
    (void)t;
    CHECK(desk.reduced.same_as(reduced_homology(st.chains())));
  }

  SubspacePoset wedge = generate_poset(
      {span3({{1, 0, 0}, {0, 1, 0}}), span3({{0, 1, 0}, {0, 0, 1}})}, Subspace::full(3));
  PtDesk desk = pt_complex_desk(wedge, GeomKind::Euclidean);
  auto [t, st] = tits_and_st(wedge);
  (void)t;
  CHECK(desk.reduced.same_as(reduced_homology(st.chains())));
}

TEST_CASE("concentration of suspended flag homology") {
  Subspace full2 = Subspace::full(2);
  std::vector<Subspace> lines = {span2(1, 0), span2(0, 1), span2(1, 1), span2(1, -1),
                                 span2(2, 1)};
  for (int k = 2; k <= 5; ++k) {
    std::vector<Subspace> some(lines.begin(), lines.begin() + k);
    SolomonTitsReport rep = solomon_tits_check(generate_poset(some, full2), 1);
    CHECK(rep.concentrated);
    CHECK(rep.rank == k - 1);
  }

  SolomonTitsReport s0 = solomon_tits_check(generate_poset({}, Subspace::full(1)), 0);
  CHECK(s0.concentrated);
  CHECK(s0.rank == 1);

  // Three coordinate planes in dimension three: the proper part is a hexagon.
  Subspace p12 = span3({{1, 0, 0}, {0, 1, 0}});
  Subspace p13 = span3({{1, 0, 0}, {0, 0, 1}});
  Subspace p23 = span3({{0, 1, 0}, {0, 0, 1}});
  SubspacePoset hexagon = generate_poset({p12, p13, p23}, Subspace::full(3));
  CHECK(hexagon.size() == 7);
  SolomonTitsReport hex = solomon_tits_check(hexagon, 2);
  CHECK(hex.concentrated);
  CHECK(hex.rank == 1);

  // A plane with its line plus a disjoint line: the proper part is
  // disconnected, so the homology spreads out.
  SubspacePoset spread = generate_poset(
      {p12, span3({{1, 0, 0}}), span3({{0, 0, 1}})}, Subspace::full(3));
  SolomonTitsReport bad = solomon_tits_check(spread, 2);
  CHECK(!bad.concentrated);
  CHECK(bad.rank == 0);
  check_free_only(bad.st_homology, {0, 1});
}
