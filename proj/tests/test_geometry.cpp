#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "scl/geometry.hpp"
#include "scl/planar.hpp"

using namespace scl;

namespace {

Point pt(long x) { return Point{Rational(x)}; }
Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }
Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

Polytope tri_poly(std::initializer_list<Point> pts) {
  Polytope p;
  p.geom = GeometryId::euclidean(2);
  Simplex s;
  for (const auto& v : pts) s.v.push_back(v);
  p.simplices.push_back(s);
  return p;
}

Polytope rect_poly(const Rational& x0, const Rational& y0, const Rational& x1,
                   const Rational& y1) {
  Polytope p;
  p.geom = GeometryId::euclidean(2);
  p.simplices.push_back(Simplex{{pt(x0, y0), pt(x1, y0), pt(x1, y1)}});
  p.simplices.push_back(Simplex{{pt(x0, y0), pt(x1, y1), pt(x0, y1)}});
  return p;
}

Polytope seg_poly(std::vector<std::pair<Rational, Rational>> segs) {
  Polytope p;
  p.geom = GeometryId::euclidean(1);
  for (auto& [a, b] : segs) p.simplices.push_back(Simplex{{Point{a}, Point{b}}});
  return p;
}

Polytope arc_poly(std::vector<std::pair<Point, Point>> arcs) {
  Polytope p;
  p.geom = GeometryId::spherical(1);
  for (auto& [a, b] : arcs)
    p.simplices.push_back(Simplex{{canonical_ray(a), canonical_ray(b)}});
  return p;
}

// Union area by inclusion-exclusion with convex clipping; independent of the
// arrangement engine. DFS over subsets prunes once an intersection is empty.
void ie_walk(const std::vector<ConvexPoly>& tris, size_t idx, const ConvexPoly& cur, int bits,
             Rational& total) {
  for (size_t i = idx; i < tris.size(); ++i) {
    ConvexPoly inter = bits == 0 ? tris[i] : clip_to_poly(cur, tris[i]);
    if (inter.empty_area() || poly_area(inter) == 0) continue;
    total += (bits % 2 == 0) ? poly_area(inter) : -poly_area(inter);
    ie_walk(tris, i + 1, inter, bits + 1, total);
  }
}

Rational union_area_ie(const std::vector<Polytope>& ps) {
  std::vector<ConvexPoly> tris;
  for (const auto& p : ps)
    for (const auto& s : p.simplices)
      tris.push_back(make_ccw_triangle(P2{s.v[0][0], s.v[0][1]}, P2{s.v[1][0], s.v[1][1]},
                                       P2{s.v[2][0], s.v[2][1]}));
  Rational total(0);
  ie_walk(tris, 0, ConvexPoly{}, 0, total);
  return total;
}

// Random star-shaped polygon as a centroid fan; returns the fan triangles.
std::vector<Simplex> random_fan(std::mt19937_64& rng, int want) {
  std::uniform_int_distribution<long> coord(-8, 8), den(1, 8);
  for (;;) {
    std::set<QVector> dirs;
    while (int(dirs.size()) < want) {
      long dx = coord(rng), dy = coord(rng);
      if (dx == 0 && dy == 0) continue;
      dirs.insert(canonical_ray(QVector{Rational(dx), Rational(dy)}));
    }
    std::vector<QVector> sorted(dirs.begin(), dirs.end());
    std::sort(sorted.begin(), sorted.end(), [](const QVector& a, const QVector& b) {
      auto half = [](const QVector& r) {
        if (sgn(r[1]) > 0) return 0;
        if (sgn(r[1]) < 0) return 1;
        return sgn(r[0]) > 0 ? 0 : 1;
      };
      if (half(a) != half(b)) return half(a) < half(b);
      return sgn(a[0] * b[1] - a[1] * b[0]) > 0;
    });
    // every consecutive angular gap must be under a half turn, or the fan
    // triangle spanning the reflex wedge flips to the short side and overlaps
    bool ok = true;
    int n = int(sorted.size());
    for (int i = 0; i < n && ok; ++i) {
      const QVector &u = sorted[i], &v = sorted[(i + 1) % n];
      if (sgn(u[0] * v[1] - u[1] * v[0]) <= 0) ok = false;
    }
    if (!ok) continue;
    std::vector<Point> verts;
    for (const auto& d : sorted) {
      Rational r = rational_of(den(rng), den(rng));
      verts.push_back(pt(d[0] * r, d[1] * r));
    }
    std::vector<Simplex> fans;
    for (int i = 0; i < n; ++i)
      fans.push_back(Simplex{{pt(0, 0), verts[i], verts[(i + 1) % n]}});
    return fans;
  }
}

Cover group_into_cover(const std::vector<Simplex>& fans, std::mt19937_64& rng,
                       GeometryId geom) {
  Cover c;
  c.target.geom = geom;
  c.target.simplices = fans;
  std::uniform_int_distribution<int> chunk(1, 3);
  size_t i = 0;
  while (i < fans.size()) {
    size_t take = std::min(size_t(chunk(rng)), fans.size() - i);
    Polytope piece;
    piece.geom = geom;
    for (size_t k = 0; k < take; ++k) piece.simplices.push_back(fans[i + k]);
    c.pieces.push_back(std::move(piece));
    i += take;
  }
  return c;
}

// Weak subdivision of one triangle into three at its vertex centroid.
std::vector<Simplex> centroid_split(const Simplex& s) {
  Point c = pt((s.v[0][0] + s.v[1][0] + s.v[2][0]) / 3, (s.v[0][1] + s.v[1][1] + s.v[2][1]) / 3);
  return {Simplex{{s.v[0], s.v[1], c}}, Simplex{{s.v[1], s.v[2], c}},
          Simplex{{s.v[2], s.v[0], c}}};
}

}  // namespace

TEST_CASE("geometry ids") {
  CHECK(GeometryId::euclidean(2).str() == "E2");
  CHECK(GeometryId::spherical(1).str() == "S1");
  CHECK(GeometryId::empty().str() == "Empty");
  CHECK(GeometryId::parse("E2") == GeometryId::euclidean(2));
  CHECK(GeometryId::parse("S0") == GeometryId::spherical(0));
  CHECK(GeometryId::parse("Empty") == GeometryId::empty());
  CHECK_THROWS_AS((void)GeometryId::parse("H2"), std::invalid_argument);
  CHECK(GeometryId::euclidean(2).ambient() == 3);
  CHECK(GeometryId::spherical(1).ambient() == 2);
}

TEST_CASE("canonical rays") {
  CHECK(canonical_ray(QVector{Rational(2), Rational(4)}) == QVector{Rational(1), Rational(2)});
  CHECK(canonical_ray(QVector{Rational(-2), Rational(4)}) == QVector{Rational(-1), Rational(2)});
  CHECK(canonical_ray(QVector{rational_of(1, 3), rational_of(1, 6)}) ==
        QVector{Rational(2), Rational(1)});
  CHECK(canonical_ray(QVector{Rational(0), rational_of(-3, 7)}) ==
        QVector{Rational(0), Rational(-1)});
  CHECK_THROWS_AS((void)canonical_ray(QVector{Rational(0), Rational(0)}), std::invalid_argument);
  CHECK(same_ray(QVector{Rational(1), Rational(1)}, QVector{Rational(3), Rational(3)}));
  // antipodal rays are distinct points
  CHECK_FALSE(same_ray(QVector{Rational(1), Rational(0)}, QVector{Rational(-1), Rational(0)}));
}

TEST_CASE("polytope validation") {
  CHECK_NOTHROW(validate_polytope(rect_poly(0, 0, 1, 1)));

  Polytope degen = tri_poly({pt(0, 0), pt(1, 1), pt(2, 2)});
  CHECK_THROWS_AS(validate_polytope(degen), std::invalid_argument);

  Polytope wrong_count;
  wrong_count.geom = GeometryId::euclidean(2);
  wrong_count.simplices.push_back(Simplex{{pt(0, 0), pt(1, 0)}});
  CHECK_THROWS_AS(validate_polytope(wrong_count), std::invalid_argument);

  Polytope bad_ray;
  bad_ray.geom = GeometryId::spherical(1);
  bad_ray.simplices.push_back(Simplex{{Point{Rational(2), Rational(0)}, pt(0, 1)}});
  CHECK_THROWS_AS(validate_polytope(bad_ray), std::invalid_argument);

  Polytope dependent;
  dependent.geom = GeometryId::spherical(1);
  dependent.simplices.push_back(Simplex{{pt(1, 0), pt(-1, 0)}});
  CHECK_THROWS_AS(validate_polytope(dependent), std::invalid_argument);
}

TEST_CASE("spans") {
  Polytope seg = seg_poly({{Rational(0), Rational(1)}});
  CHECK(span_of_polytope(seg).dim() == 2);  // homogeneous full span of E1

  Polytope t = tri_poly({pt(0, 0), pt(1, 0), pt(0, 1)});
  CHECK(span_of_polytope(t).dim() == 3);

  // two antipodal rays span a single line
  CHECK(span_of_points(GeometryId::spherical(1), {pt(1, 0), pt(-1, 0)}).dim() == 1);

  Polytope none;
  none.geom = GeometryId::euclidean(2);
  CHECK_THROWS_AS((void)span_of_polytope(none), std::invalid_argument);
}

TEST_CASE("simplex volume") {
  Simplex corner{{pt(0, 0), pt(1, 0), pt(0, 1)}};
  CHECK(simplex_volume(GeometryId::euclidean(2), corner) == rational_of(1, 2));
  Simplex t{{pt(0, 0), pt(2, 0), pt(0, 3)}};
  CHECK(simplex_volume(GeometryId::euclidean(2), t) == Rational(3));
  Simplex degen{{pt(0, 0), pt(1, 1), pt(2, 2)}};
  CHECK(simplex_volume(GeometryId::euclidean(2), degen) == Rational(0));
  Simplex seg{{pt(2), pt(5)}};
  CHECK(simplex_volume(GeometryId::euclidean(1), seg) == Rational(3));
}

TEST_CASE("isometries") {
  Polytope sq = rect_poly(0, 0, 1, 1);

  Isometry shift = Isometry::translation(2, QVector{Rational(1), Rational(0)});
  Polytope moved = apply_isometry(sq, shift);
  CHECK(polytope_set_equal(moved, rect_poly(1, 0, 2, 1)));
  CHECK(shift.linear_sign() == 1);
  CHECK(shift.is_translation());
  CHECK(move_in_group(shift, MoveGroup::Translations));

  // reflection x -> -x in E1
  QMatrix refl(2, 2);
  refl.at(0, 0) = 1;
  refl.at(1, 1) = -1;
  Isometry r = Isometry::from_matrix(GeometryId::euclidean(1), refl);
  CHECK(r.linear_sign() == -1);
  Polytope seg = seg_poly({{Rational(2), Rational(3)}});
  CHECK(polytope_set_equal(apply_isometry(seg, r), seg_poly({{Rational(-3), Rational(-2)}})));
  CHECK(move_in_group(r, MoveGroup::TranslationsPointReflections));  // -1 = -id in E1
  CHECK_FALSE(move_in_group(r, MoveGroup::Translations));

  // rational rotation by (3/5, 4/5)
  QMatrix rot(3, 3);
  rot.at(0, 0) = 1;
  rot.at(1, 1) = rational_of(3, 5);
  rot.at(1, 2) = rational_of(4, 5);
  rot.at(2, 1) = rational_of(-4, 5);
  rot.at(2, 2) = rational_of(3, 5);
  Isometry rr = Isometry::from_matrix(GeometryId::euclidean(2), rot);
  CHECK(rr.linear_sign() == 1);
  CHECK_FALSE(rr.linear_part_pm_identity());
  CHECK(move_in_group(rr, MoveGroup::Full));
  CHECK_FALSE(move_in_group(rr, MoveGroup::TranslationsPointReflections));
  Polytope t = tri_poly({pt(0, 0), pt(5, 0), pt(0, 5)});
  Polytope rt = apply_isometry(t, rr);
  CHECK(rt.simplices[0].v[1] == pt(3, -4));
  CHECK(polytope_volume(rt) == polytope_volume(t));

  // composition round trip
  Isometry comp = shift.compose(rr);
  Isometry inv = comp.inverted();
  Polytope back = apply_isometry(apply_isometry(t, comp), inv);
  CHECK(polytope_set_equal(back, t));

  // point reflection about (1/2, 1/2) maps the unit square to itself
  Isometry pr = Isometry::point_reflection(2, QVector{rational_of(1, 2), rational_of(1, 2)});
  CHECK(polytope_set_equal(apply_isometry(sq, pr), sq));
  CHECK(move_in_group(pr, MoveGroup::TranslationsPointReflections));

  QMatrix bad(3, 3);
  bad.at(0, 0) = 1;
  bad.at(1, 1) = 2;
  bad.at(2, 2) = 1;
  CHECK_THROWS_AS((void)Isometry::from_matrix(GeometryId::euclidean(2), bad),
                  std::invalid_argument);

  // spherical rotation keeps rays canonical
  QMatrix srot(2, 2);
  srot.at(0, 0) = rational_of(3, 5);
  srot.at(0, 1) = rational_of(-4, 5);
  srot.at(1, 0) = rational_of(4, 5);
  srot.at(1, 1) = rational_of(3, 5);
  Isometry sr = Isometry::from_matrix(GeometryId::spherical(1), srot);
  Point img = sr.apply_point(pt(1, 0));
  CHECK(img == pt(3, 4));
}

TEST_CASE("polytope volume") {
  CHECK(polytope_volume(rect_poly(0, 0, 1, 1)) == Rational(1));

  // overlapping squares: volume counts the union once
  Polytope both = rect_poly(0, 0, 1, 1);
  for (const auto& s : rect_poly(rational_of(1, 2), 0, rational_of(3, 2), 1).simplices)
    both.simplices.push_back(s);
  CHECK(polytope_volume(both) == rational_of(3, 2));

  CHECK(polytope_volume(seg_poly({{0, 1}, {rational_of(1, 2), 3}})) == Rational(3));

  Polytope none;
  none.geom = GeometryId::euclidean(2);
  CHECK(polytope_volume(none) == Rational(0));
}

TEST_CASE("triangulate a single simplex") {
  Polytope t = tri_poly({pt(0, 0), pt(1, 0), pt(0, 1)});
  Triangulation tr = triangulate({t});
  CHECK(tr.cells[2].size() == 1);
  CHECK(tr.cells[1].size() == 3);
  CHECK(tr.cells[0].size() == 3);
  CHECK(tr.piece_cells[0] == std::vector<int>{0});
  std::string why;
  CHECK(is_simplicial_complex(tr, &why));
  CHECK(simplex_volume(tr.geom, tr.cell_simplex(2, 0)) == rational_of(1, 2));
}

TEST_CASE("triangulate two squares sharing half an edge") {
  Polytope a = rect_poly(0, 0, 1, 1);
  Polytope b = rect_poly(1, rational_of(1, 2), 2, rational_of(3, 2));
  Triangulation tr = triangulate({a, b});
  std::string why;
  CHECK_MESSAGE(is_simplicial_complex(tr, &why), why);

  // every input vertex appears
  std::set<std::vector<Rational>> vset(tr.vertices.begin(), tr.vertices.end());
  for (const auto* p : {&a, &b})
    for (const auto& s : p->simplices)
      for (const auto& v : s.v) CHECK(vset.count(v) == 1);

  // each input is exactly the union of its labeled cells
  for (size_t i = 0; i < 2; ++i) {
    const Polytope& in = i == 0 ? a : b;
    Rational vol(0);
    for (int c : tr.piece_cells[i]) {
      Simplex s = tr.cell_simplex(2, c);
      vol += simplex_volume(tr.geom, s);
      Polytope cell;
      cell.geom = tr.geom;
      cell.simplices.push_back(s);
      CHECK(polytope_subset(cell, in));
    }
    CHECK(vol == polytope_volume(in));
  }
}

TEST_CASE("triangulate L shape") {
  // 3 of the 4 unit cells of [0,2]^2
  Polytope l = rect_poly(0, 0, 1, 1);
  for (const auto& p : {rect_poly(1, 0, 2, 1), rect_poly(0, 1, 1, 2)})
    for (const auto& s : p.simplices) l.simplices.push_back(s);
  Triangulation tr = triangulate({l});
  Rational vol(0);
  for (size_t c = 0; c < tr.cells[2].size(); ++c)
    vol += simplex_volume(tr.geom, tr.cell_simplex(2, int(c)));
  CHECK(vol == Rational(3));
  CHECK(vol == Rational(4) * rational_of(3, 4));
  std::string why;
  CHECK(is_simplicial_complex(tr, &why));
}

TEST_CASE("weak subdivision verdicts") {
  // unit square cut by a diagonal
  Cover diag;
  diag.target = rect_poly(0, 0, 1, 1);
  diag.pieces = {tri_poly({pt(0, 0), pt(1, 0), pt(1, 1)}),
                 tri_poly({pt(0, 0), pt(1, 1), pt(0, 1)})};
  CHECK(is_weak_subdivision(diag).valid);

  // two overlapping unit squares do not subdivide the 1 x 3/2 rectangle
  Cover overlap;
  overlap.target = rect_poly(0, 0, 1, rational_of(3, 2));
  overlap.pieces = {rect_poly(0, 0, 1, 1), rect_poly(0, rational_of(1, 2), 1, rational_of(3, 2))};
  auto rep = is_weak_subdivision(overlap);
  CHECK_FALSE(rep.valid);
  CHECK(rep.reason == "piece interiors overlap");
  CHECK_FALSE(rep.witness.empty());

  // missing corner triangle
  Cover missing;
  missing.target = rect_poly(0, 0, 1, 1);
  missing.pieces = {tri_poly({pt(0, 0), pt(1, 0), pt(1, 1)})};
  rep = is_weak_subdivision(missing);
  CHECK_FALSE(rep.valid);
  CHECK(rep.reason == "pieces do not cover the target");
  CHECK_FALSE(rep.witness.empty());

  // piece sticking out of the target
  Cover outside;
  outside.target = tri_poly({pt(0, 0), pt(1, 0), pt(1, 1)});
  outside.pieces = {rect_poly(0, 0, 1, 1)};
  rep = is_weak_subdivision(outside);
  CHECK_FALSE(rep.valid);
  CHECK(rep.reason == "piece sticks out of the target");

  // intervals
  Cover iv;
  iv.target = seg_poly({{0, 2}});
  iv.pieces = {seg_poly({{0, 1}}), seg_poly({{1, 2}})};
  CHECK(is_weak_subdivision(iv).valid);
  iv.pieces = {seg_poly({{0, 1}}), seg_poly({{rational_of(1, 2), 2}})};
  CHECK_FALSE(is_weak_subdivision(iv).valid);

  // quadrant arcs subdivide the circle
  Cover circ;
  circ.target = arc_poly({{pt(1, 0), pt(0, 1)},
                          {pt(0, 1), pt(-1, 0)},
                          {pt(-1, 0), pt(0, -1)},
                          {pt(0, -1), pt(1, 0)}});
  for (const auto& s : circ.target.simplices) {
    Polytope piece;
    piece.geom = circ.target.geom;
    piece.simplices.push_back(s);
    circ.pieces.push_back(piece);
  }
  CHECK(is_weak_subdivision(circ).valid);
  circ.pieces.pop_back();
  CHECK_FALSE(is_weak_subdivision(circ).valid);
}

TEST_CASE("common refinement of the two diagonal cuts") {
  Cover d1, d2;
  d1.target = d2.target = rect_poly(0, 0, 1, 1);
  d1.pieces = {tri_poly({pt(0, 0), pt(1, 0), pt(1, 1)}),
               tri_poly({pt(0, 0), pt(1, 1), pt(0, 1)})};
  d2.pieces = {tri_poly({pt(0, 0), pt(1, 0), pt(0, 1)}),
               tri_poly({pt(1, 0), pt(1, 1), pt(0, 1)})};
  RefinedCover rc = common_refinement(d1, d2);
  CHECK(rc.cover.pieces.size() == 4);
  CHECK(rc.provenance.size() == 4);
  CHECK(is_weak_subdivision(rc.cover).valid);
  for (size_t k = 0; k < rc.cover.pieces.size(); ++k) {
    CHECK(polytope_volume(rc.cover.pieces[k]) == rational_of(1, 4));
    auto [i, j] = rc.provenance[k];
    CHECK(polytope_subset(rc.cover.pieces[k], d1.pieces[i]));
    CHECK(polytope_subset(rc.cover.pieces[k], d2.pieces[j]));
  }
}

TEST_CASE("common refinement of interval cuts") {
  Cover c1, c2;
  c1.target = c2.target = seg_poly({{0, 2}});
  c1.pieces = {seg_poly({{0, 1}}), seg_poly({{1, 2}})};
  c2.pieces = {seg_poly({{0, rational_of(1, 2)}}), seg_poly({{rational_of(1, 2), 2}})};
  RefinedCover rc = common_refinement(c1, c2);
  REQUIRE(rc.cover.pieces.size() == 3);
  std::vector<std::pair<Rational, Rational>> expect = {
      {0, rational_of(1, 2)}, {rational_of(1, 2), 1}, {1, 2}};
  std::set<std::pair<Rational, Rational>> got;
  for (const auto& p : rc.cover.pieces) {
    REQUIRE(p.simplices.size() == 1);
    Rational a = p.simplices[0].v[0][0], b = p.simplices[0].v[1][0];
    if (a > b) std::swap(a, b);
    got.insert({a, b});
  }
  for (const auto& e : expect) CHECK(got.count(e) == 1);
}

TEST_CASE("refinement with itself reproduces the pieces") {
  std::mt19937_64 rng(51);
  auto fans = random_fan(rng, 6);
  Cover c = group_into_cover(fans, rng, GeometryId::euclidean(2));
  RefinedCover rc = common_refinement(c, c);
  REQUIRE(rc.cover.pieces.size() == c.pieces.size());
  for (size_t k = 0; k < rc.cover.pieces.size(); ++k) {
    auto [i, j] = rc.provenance[k];
    CHECK(i == j);
    CHECK(polytope_set_equal(rc.cover.pieces[k], c.pieces[i]));
  }
}

TEST_CASE("random refinement property") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<int> nverts(4, 8);
  for (int iter = 0; iter < 25; ++iter) {
    auto fans = random_fan(rng, nverts(rng));
    Cover c1 = group_into_cover(fans, rng, GeometryId::euclidean(2));
    // second cover: refine every fan triangle at its centroid, then regroup
    std::vector<Simplex> fine;
    for (const auto& s : fans)
      for (const auto& piece : centroid_split(s)) fine.push_back(piece);
    Cover c2 = group_into_cover(fine, rng, GeometryId::euclidean(2));
    c2.target = c1.target;
    REQUIRE(is_weak_subdivision(c1).valid);
    REQUIRE(is_weak_subdivision(c2).valid);

    RefinedCover rc = common_refinement(c1, c2);
    CHECK(is_weak_subdivision(rc.cover).valid);
    Rational total(0);
    for (size_t k = 0; k < rc.cover.pieces.size(); ++k) {
      auto [i, j] = rc.provenance[k];
      CHECK(polytope_subset(rc.cover.pieces[k], c1.pieces[i]));
      CHECK(polytope_subset(rc.cover.pieces[k], c2.pieces[j]));
      total += polytope_volume(rc.cover.pieces[k]);
    }
    CHECK(total == polytope_volume(c1.target));
  }
}

TEST_CASE("random interval refinement property") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-16, 16);
  for (int iter = 0; iter < 20; ++iter) {
    std::set<Rational> cutset;
    while (cutset.size() < 5) cutset.insert(rational_of(num(rng), 4));
    std::vector<Rational> cuts(cutset.begin(), cutset.end());
    Cover c1, c2;
    c1.target = c2.target = seg_poly({{cuts.front(), cuts.back()}});
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      c1.pieces.push_back(seg_poly({{cuts[i], cuts[i + 1]}}));
    // c2: split at midpoints of a coarser cut
    Rational mid = (cuts.front() + cuts.back()) / 2;
    c2.pieces = {seg_poly({{cuts.front(), mid}}), seg_poly({{mid, cuts.back()}})};
    REQUIRE(is_weak_subdivision(c1).valid);
    REQUIRE(is_weak_subdivision(c2).valid);
    RefinedCover rc = common_refinement(c1, c2);
    CHECK(is_weak_subdivision(rc.cover).valid);
    Rational total(0);
    for (const auto& p : rc.cover.pieces) total += polytope_volume(p);
    CHECK(total == polytope_volume(c1.target));
  }
}

TEST_CASE("triangulate matches inclusion-exclusion") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> npoly(1, 4), nverts(3, 4);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Polytope> ps;
    int n = npoly(rng);
    for (int i = 0; i < n; ++i) {
      auto fans = random_fan(rng, nverts(rng));
      // translate each polygon by a small random offset so unions overlap
      std::uniform_int_distribution<long> off(-2, 2);
      Isometry sh = Isometry::translation(
          2, QVector{rational_of(off(rng), 2), rational_of(off(rng), 2)});
      Polytope p;
      p.geom = GeometryId::euclidean(2);
      p.simplices = fans;
      ps.push_back(apply_isometry(p, sh));
    }
    size_t tri_count = 0;
    for (const auto& p : ps) tri_count += p.simplices.size();
    if (tri_count > 12) continue;

    Triangulation tr = triangulate(ps);
    std::string why;
    CHECK_MESSAGE(is_simplicial_complex(tr, &why), why);

    Rational vol(0);
    for (size_t c = 0; c < tr.cells[2].size(); ++c)
      vol += simplex_volume(tr.geom, tr.cell_simplex(2, int(c)));
    CHECK(vol == union_area_ie(ps));

    // subcomplex property: each input is the union of its labeled cells
    for (size_t i = 0; i < ps.size(); ++i) {
      Rational pv(0);
      for (int c : tr.piece_cells[i]) pv += simplex_volume(tr.geom, tr.cell_simplex(2, c));
      CHECK(pv == polytope_volume(ps[i]));
    }
  }
}

TEST_CASE("weak subdivision survives refining the pieces") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 10; ++iter) {
    auto fans = random_fan(rng, 6);
    Cover c = group_into_cover(fans, rng, GeometryId::euclidean(2));
    Cover flat;
    flat.target = c.target;
    for (const auto& piece : c.pieces)
      for (const auto& s : piece.simplices)
        for (const auto& sub : centroid_split(s)) {
          Polytope q;
          q.geom = c.target.geom;
          q.simplices.push_back(sub);
          flat.pieces.push_back(std::move(q));
        }
    CHECK(is_weak_subdivision(flat).valid);
  }
}

TEST_CASE("simplicial complex checker rejects bad gluings") {
  // T-junction: vertex 3 lies on the interior of edge (0,1)
  Triangulation t;
  t.geom = GeometryId::euclidean(2);
  t.vertices = {pt(0, 0), pt(2, 0), pt(1, 1), pt(1, 0), pt(1, -1)};
  t.cells = {{{0}, {1}, {2}, {3}, {4}},
             {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {3, 4}},
             {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}}};
  std::string why;
  CHECK_FALSE(is_simplicial_complex(t, &why));
  CHECK(why == "vertex interior to an edge");

  // overlapping triangles
  Triangulation o;
  o.geom = GeometryId::euclidean(2);
  o.vertices = {pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)};
  o.cells = {{{0}, {1}, {2}, {3}},
             {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}},
             {{0, 1, 2}, {0, 1, 3}}};
  CHECK_FALSE(is_simplicial_complex(o, &why));

  // missing face
  Triangulation m;
  m.geom = GeometryId::euclidean(2);
  m.vertices = {pt(0, 0), pt(1, 0), pt(0, 1)};
  m.cells = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}}, {{0, 1, 2}}};
  CHECK_FALSE(is_simplicial_complex(m, &why));
  CHECK(why == "missing face");
}

TEST_CASE("circle arcs subset and equality") {
  Polytope upper1 = arc_poly({{pt(1, 0), pt(0, 1)}, {pt(0, 1), pt(-1, 0)}});
  Polytope upper2 = arc_poly({{pt(1, 0), pt(1, 1)}, {pt(1, 1), pt(-1, 0)}});
  Polytope lower = arc_poly({{pt(-1, 0), pt(0, -1)}, {pt(0, -1), pt(1, 0)}});
  CHECK(polytope_set_equal(upper1, upper2));
  CHECK_FALSE(polytope_set_equal(upper1, lower));
  CHECK(polytope_subset(arc_poly({{pt(1, 0), pt(1, 1)}}), upper1));
  CHECK_FALSE(polytope_subset(upper1, arc_poly({{pt(1, 0), pt(1, 1)}})));

  Polytope full = upper1;
  for (const auto& s : lower.simplices) full.simplices.push_back(s);
  Triangulation tr = triangulate({full});
  CHECK(tr.cells[1].size() == 4);
  CHECK(tr.cells[0].size() == 4);

  // one-dimensional simplicial check is structural only for S1
  std::string why;
  CHECK(is_simplicial_complex(tr, &why));
}

TEST_CASE("interval subset and equality") {
  CHECK(polytope_subset(seg_poly({{0, 1}}), seg_poly({{0, 2}})));
  CHECK_FALSE(polytope_subset(seg_poly({{0, 3}}), seg_poly({{0, 2}})));
  CHECK(polytope_set_equal(seg_poly({{0, 1}, {1, 2}}), seg_poly({{0, 2}})));
  CHECK(polytope_set_equal(seg_poly({{0, 2}, {1, 3}}), seg_poly({{0, 3}})));
}

TEST_CASE("isometries preserve subdivision structure") {
  std::mt19937_64 rng(777);
  auto fans = random_fan(rng, 6);
  Cover c = group_into_cover(fans, rng, GeometryId::euclidean(2));
  QMatrix rot(3, 3);
  rot.at(0, 0) = 1;
  rot.at(1, 1) = rational_of(5, 13);
  rot.at(1, 2) = rational_of(-12, 13);
  rot.at(2, 1) = rational_of(12, 13);
  rot.at(2, 2) = rational_of(5, 13);
  Isometry g = Isometry::from_matrix(GeometryId::euclidean(2), rot)
                   .compose(Isometry::translation(2, QVector{Rational(3), rational_of(-1, 2)}));
  Cover moved;
  moved.target = apply_isometry(c.target, g);
  for (const auto& p : c.pieces) moved.pieces.push_back(apply_isometry(p, g));
  CHECK(is_weak_subdivision(moved).valid);
  CHECK(polytope_volume(moved.target) == polytope_volume(c.target));
}
