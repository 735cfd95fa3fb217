#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "scl/witness.hpp"

using namespace scl;

namespace {

Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

Polytope seg_poly(std::vector<std::pair<Rational, Rational>> segs) {
  Polytope p;
  p.geom = GeometryId::euclidean(1);
  for (auto& [a, b] : segs) p.simplices.push_back(Simplex{{Point{a}, Point{b}}});
  return p;
}

Polytope tri_poly(const Point& a, const Point& b, const Point& c) {
  Polytope p;
  p.geom = GeometryId::euclidean(2);
  p.simplices.push_back(Simplex{{a, b, c}});
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

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Point mid(const Point& a, const Point& b) {
  return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
}

std::map<QVector, Rational> weight_map(const TranslationInvariants& t) {
  return {t.edge_weights.begin(), t.edge_weights.end()};
}

}  // namespace

TEST_CASE("interval decisions produce verified witnesses") {
  Polytope src = seg_poly({{0, 1}, {2, 3}});
  Polytope tgt = seg_poly({{5, 7}});
  ScissorsDecision d = decide_length_e1(src, tgt);
  CHECK(d.congruent);
  CHECK(d.measure == "length");
  CHECK(d.source_value == 2);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->pieces.size() == 2);
  CHECK(d.witness->group == MoveGroup::Translations);
  std::string why;
  CHECK_MESSAGE(verify_witness(*d.witness, &why), why);

  // identical inputs come back as one untranslated piece
  ScissorsDecision same = decide_length_e1(seg_poly({{1, 2}}), seg_poly({{1, 2}}));
  REQUIRE(same.witness.has_value());
  CHECK(same.witness->pieces.size() == 1);
  CHECK(same.witness->pieces[0].second.is_translation());
  CHECK(verify_witness(*same.witness));

  // overlapping input segments merge before matching
  ScissorsDecision ov = decide_length_e1(seg_poly({{0, 2}, {1, 3}}), seg_poly({{4, 7}}));
  CHECK(ov.congruent);
  CHECK(ov.source_value == 3);
  CHECK(verify_witness(*ov.witness));
}

TEST_CASE("interval certificates carry both lengths") {
  ScissorsDecision d = decide_length_e1(seg_poly({{0, 1}}), seg_poly({{1, 3}}));
  CHECK(!d.congruent);
  CHECK(!d.witness.has_value());
  CHECK(d.source_value == 1);
  CHECK(d.target_value == 2);

  CHECK_THROWS_AS(decide_length_e1(rect_poly(0, 0, 1, 1), seg_poly({{0, 1}})),
                  std::invalid_argument);
  Polytope empty1;
  empty1.geom = GeometryId::euclidean(1);
  CHECK_THROWS_AS(decide_length_e1(empty1, seg_poly({{0, 1}})), std::invalid_argument);
}

TEST_CASE("random interval regroupings") {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> count(1, 3), gap(1, 4), num(1, 6);
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<std::pair<Rational, Rational>> segs;
    Rational x(0), total(0);
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      x += gap(rng);
      Rational len = Rational(num(rng)) / 2;
      segs.push_back({x, x + len});
      x += len;
      total += len;
    }
    // regroup the same total length far to the right
    std::vector<std::pair<Rational, Rational>> tsegs;
    Rational y(100), left = total;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
      y += gap(rng);
      Rational len = i + 1 == m ? left : left / num(rng);
      if (sgn(len) == 0) continue;
      tsegs.push_back({y, y + len});
      y += len;
      left -= len;
    }
    ScissorsDecision d = decide_length_e1(seg_poly(segs), seg_poly(tsegs));
    REQUIRE(d.congruent);
    std::string why;
    CHECK_MESSAGE(verify_witness(*d.witness, &why), why);
  }
}

TEST_CASE("triangle to square witness") {
  Polytope tri = tri_poly(pt(0, 0), pt(2, 0), pt(0, 1));
  Polytope sq = rect_poly(0, 0, 1, 1);
  ScissorsDecision d = decide_area_e2(tri, sq);
  CHECK(d.congruent);
  CHECK(d.measure == "area");
  CHECK(d.source_value == 1);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->group == MoveGroup::TranslationsPointReflections);
  for (const auto& [piece, move] : d.witness->pieces)
    CHECK(move_in_group(move, MoveGroup::TranslationsPointReflections));
  std::string why;
  CHECK_MESSAGE(verify_witness(*d.witness, &why), why);
}

TEST_CASE("translate shortcut yields one piece") {
  Polytope tri = tri_poly(pt(0, 0), pt(3, 0), pt(1, 2));
  Polytope moved = apply_isometry(
      tri, Isometry::translation(2, {Rational(3) / 7, Rational(-5) / 7}));
  ScissorsDecision d = decide_area_e2(tri, moved);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->pieces.size() == 1);
  CHECK(d.witness->pieces[0].second.is_translation());
  CHECK(d.witness->group == MoveGroup::Translations);
  CHECK(verify_witness(*d.witness));
}

TEST_CASE("area certificates and input errors") {
  ScissorsDecision d = decide_area_e2(tri_poly(pt(0, 0), pt(2, 0), pt(0, 1)),
                                      rect_poly(0, 0, 2, 2));
  CHECK(!d.congruent);
  CHECK(!d.witness.has_value());
  CHECK(d.source_value == 1);
  CHECK(d.target_value == 4);

  Polytope empty2;
  empty2.geom = GeometryId::euclidean(2);
  CHECK_THROWS_AS(decide_area_e2(empty2, rect_poly(0, 0, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(decide_area_e2(seg_poly({{0, 1}}), rect_poly(0, 0, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("scattered piece pairs decide and verify") {
  std::mt19937 rng(20260822);
  std::uniform_int_distribution<int> coord(0, 4), off(0, 3);
  for (int iter = 0; iter < 6; ++iter) {
    Point a, b, c;
    do {
      a = pt(coord(rng), coord(rng));
      b = pt(coord(rng), coord(rng));
      c = pt(coord(rng), coord(rng));
    } while (sgn(cross(a, b, c)) == 0);
    if (sgn(cross(a, b, c)) < 0) std::swap(b, c);
    Polytope whole = tri_poly(a, b, c);

    // midline cut, then scatter the two pieces into disjoint slabs
    Point p = mid(a, c), q = mid(b, c);
    Polytope trap;
    trap.geom = GeometryId::euclidean(2);
    trap.simplices.push_back(Simplex{{a, b, q}});
    if (sgn(cross(a, q, p)) != 0) trap.simplices.push_back(Simplex{{a, q, p}});
    Polytope tip = tri_poly(p, q, c);
    Polytope m1 = apply_isometry(trap, Isometry::translation(2, {Rational(10), Rational(off(rng))}));
    Polytope m2 = apply_isometry(tip, Isometry::point_reflection(2, {Rational(17), Rational(off(rng))}));
    Polytope tgt;
    tgt.geom = GeometryId::euclidean(2);
    for (const auto& s : m1.simplices) tgt.simplices.push_back(s);
    for (const auto& s : m2.simplices) tgt.simplices.push_back(s);

    ScissorsDecision d = iter % 2 == 0 ? decide_area_e2(whole, tgt) : decide_area_e2(tgt, whole);
    REQUIRE(d.congruent);
    std::string why;
    CHECK_MESSAGE(verify_witness(*d.witness, &why), why);
  }
}

TEST_CASE("translation invariants on frozen examples") {
  TranslationInvariants sq = translation_invariants_e2(rect_poly(0, 0, 1, 1));
  CHECK(sq.area == 1);
  CHECK(sq.edge_weights.empty());

  TranslationInvariants tr = translation_invariants_e2(tri_poly(pt(0, 0), pt(1, 0), pt(0, 1)));
  CHECK(tr.area == Rational(1) / 2);
  auto wm = weight_map(tr);
  CHECK(wm.size() == 3);
  CHECK(wm.at({Rational(1), Rational(-1)}) == -1);
  CHECK(wm.at({Rational(1), Rational(0)}) == 1);
  CHECK(wm.at({Rational(0), Rational(1)}) == -1);

  // equal areas, different functionals: translation congruence fails even
  // though the point-reflection decision succeeds
  TranslationInvariants half = translation_invariants_e2(tri_poly(pt(0, 0), pt(2, 0), pt(0, 1)));
  TranslationInvariants unit = translation_invariants_e2(rect_poly(0, 0, 1, 1));
  CHECK(half.area == unit.area);
  CHECK(!(half == unit));
}

TEST_CASE("translation invariants are additive and translation invariant") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> coord(-4, 4), den(1, 5);
  int done = 0;
  while (done < 60) {
    Point a = pt(coord(rng), coord(rng));
    Point b = pt(coord(rng), coord(rng));
    Point c = pt(coord(rng), coord(rng));
    if (sgn(cross(a, b, c)) == 0) continue;
    ++done;
    Polytope tri = tri_poly(a, b, c);
    TranslationInvariants whole = translation_invariants_e2(tri);

    QVector t{Rational(coord(rng)) / den(rng), Rational(coord(rng)) / den(rng)};
    TranslationInvariants moved =
        translation_invariants_e2(apply_isometry(tri, Isometry::translation(2, t)));
    CHECK(moved == whole);

    // cevian split: invariants add across a weak subdivision
    Rational mu = Rational(den(rng)) / (den(rng) + 5);
    Point m = pt(b[0] + mu * (c[0] - b[0]), b[1] + mu * (c[1] - b[1]));
    TranslationInvariants left = translation_invariants_e2(tri_poly(a, b, m));
    TranslationInvariants right = translation_invariants_e2(tri_poly(a, m, c));
    CHECK(whole.area == left.area + right.area);
    std::map<QVector, Rational> sum = weight_map(left);
    for (const auto& [dir, wgt] : weight_map(right)) sum[dir] += wgt;
    std::map<QVector, Rational> clean;
    for (const auto& [dir, wgt] : sum)
      if (sgn(wgt) != 0) clean[dir] = wgt;
    CHECK(clean == weight_map(whole));

    // a point reflection negates every edge weight
    TranslationInvariants negated = translation_invariants_e2(
        apply_isometry(tri, Isometry::point_reflection(2, {Rational(1), Rational(2)})));
    CHECK(negated.area == whole.area);
    std::map<QVector, Rational> neg;
    for (const auto& [dir, wgt] : weight_map(whole)) neg[dir] = -wgt;
    CHECK(neg == weight_map(negated));
  }
}

TEST_CASE("dehn invariant vanishes on boxes") {
  AngleRelationSet rel = box_relations();
  DehnElement cube = dehn_invariant(measured_box(1, 1, 1), rel);
  CHECK(cube.is_zero());
  CHECK(dehn_invariant(measured_box(Rational(1) / 2, 3, Rational(5) / 7), rel).is_zero());

  // subdividing a box into boxes keeps both sides at zero
  DehnElement split = dehn_invariant(measured_box(1, 1, 1), rel);
  split += dehn_invariant(measured_box(1, 1, 1), rel);
  DehnElement whole = dehn_invariant(measured_box(2, 1, 1), rel);
  CHECK(split.is_zero());
  CHECK(whole.is_zero());
  CHECK(split.coords == whole.coords);
}

TEST_CASE("dehn invariant separates the regular tetrahedron") {
  // the tetrahedral dihedral angle is declared rationally independent of pi,
  // a classical fact taken as configuration input
  AngleRelationSet rel;
  rel.length_symbols = {"edge"};
  rel.angle_symbols = {"theta"};
  MeasuredPolytope tet;
  tet.edges = {{"edge", "theta", 6}};
  DehnElement d = dehn_invariant(tet, rel);
  CHECK(!d.is_zero());
  CHECK(d.coords.at(0, 0) == 6);

  // an angle equal to pi itself contributes nothing
  AngleRelationSet flat;
  flat.length_symbols = {"l"};
  MeasuredPolytope straight;
  straight.edges = {{"l", "pi", 3}};
  CHECK(dehn_invariant(straight, flat).is_zero());
}

TEST_CASE("dehn invariant cancels prisms through declared relations") {
  // right prism over a triangle: base dihedrals are right angles, the side
  // dihedrals are the triangle angles, which sum to pi
  AngleRelationSet rel;
  rel.length_symbols = {"s1", "s2", "s3", "h"};
  rel.angle_symbols = {"a1", "a2", "a3", "right"};
  rel.angle_relations = {
      {{"right", Rational(1)}, {"pi", Rational(-1) / 2}},
      {{"a1", Rational(1)}, {"a2", Rational(1)}, {"a3", Rational(1)}, {"pi", Rational(-1)}}};
  MeasuredPolytope prism;
  prism.edges = {{"s1", "right", 2}, {"s2", "right", 2}, {"s3", "right", 2},
                 {"h", "a1", 1},     {"h", "a2", 1},     {"h", "a3", 1}};
  CHECK(dehn_invariant(prism, rel).is_zero());

  // dropping the angle-sum relation leaves the side terms standing
  AngleRelationSet norel = rel;
  norel.angle_relations = {rel.angle_relations[0]};
  CHECK(!dehn_invariant(prism, norel).is_zero());
}

TEST_CASE("dehn invariant rejects bad declarations") {
  AngleRelationSet direct;
  direct.length_symbols = {"l"};
  direct.angle_relations = {{{"pi", Rational(1)}}};
  MeasuredPolytope mp;
  mp.edges = {{"l", "pi", 1}};
  CHECK_THROWS_AS(dehn_invariant(mp, direct), std::invalid_argument);

  // two relations that combine to force pi to vanish
  AngleRelationSet combo;
  combo.length_symbols = {"l"};
  combo.angle_symbols = {"theta"};
  combo.angle_relations = {{{"theta", Rational(1)}, {"pi", Rational(-1) / 3}},
                           {{"theta", Rational(1)}}};
  CHECK_THROWS_AS(dehn_invariant(mp, combo), std::invalid_argument);

  AngleRelationSet rel;
  rel.length_symbols = {"l"};
  rel.angle_symbols = {"theta"};
  MeasuredPolytope unknown;
  unknown.edges = {{"l", "gamma", 1}};
  CHECK_THROWS_AS(dehn_invariant(unknown, rel), std::invalid_argument);
  MeasuredPolytope badmul;
  badmul.edges = {{"l", "theta", -2}};
  CHECK_THROWS_AS(dehn_invariant(badmul, rel), std::invalid_argument);

  AngleRelationSet reserved;
  reserved.angle_symbols = {"pi"};
  CHECK_THROWS_AS(dehn_invariant(MeasuredPolytope{}, reserved), std::invalid_argument);
  AngleRelationSet dup;
  dup.length_symbols = {"l", "l"};
  CHECK_THROWS_AS(dehn_invariant(MeasuredPolytope{}, dup), std::invalid_argument);

  CHECK_THROWS_AS(measured_box(0, 1, 1), std::invalid_argument);
}

TEST_CASE("verify rejects tampered witnesses") {
  Polytope tri = tri_poly(pt(0, 0), pt(2, 0), pt(0, 1));
  Polytope sq = rect_poly(0, 0, 1, 1);
  DecompositionWitness good = *decide_area_e2(tri, sq).witness;
  std::string why;
  REQUIRE(verify_witness(good, &why));

  DecompositionWitness narrowed = good;
  narrowed.group = MoveGroup::Translations;  // the midline reflection leaves it
  CHECK(!verify_witness(narrowed, &why));
  CHECK(why.find("outside the declared group") != std::string::npos);

  DecompositionWitness nudged = good;
  nudged.pieces[0].second =
      Isometry::translation(2, {Rational(1), Rational(0)}).compose(nudged.pieces[0].second);
  CHECK(!verify_witness(nudged, &why));
  CHECK(!why.empty());

  DecompositionWitness dropped = good;
  dropped.pieces.pop_back();
  CHECK(!verify_witness(dropped, &why));

  DecompositionWitness alien = good;
  alien.pieces[0] = {seg_poly({{0, 1}}), Isometry::translation(1, {Rational(0)})};
  CHECK(!verify_witness(alien, &why));

  // honest identity witness passes
  DecompositionWitness id;
  id.source = sq;
  id.target = sq;
  id.group = MoveGroup::Translations;
  id.pieces = {{sq, Isometry::identity(GeometryId::euclidean(2))}};
  CHECK(verify_witness(id));
}

TEST_CASE("witness inversion and composition") {
  Polytope tri = tri_poly(pt(0, 0), pt(2, 0), pt(0, 1));
  Polytope sq = rect_poly(0, 0, 1, 1);
  DecompositionWitness w = *decide_area_e2(tri, sq).witness;

  DecompositionWitness back = invert_witness(w);
  CHECK(polytope_set_equal(back.source, sq));
  CHECK(polytope_set_equal(back.target, tri));
  std::string why;
  CHECK_MESSAGE(verify_witness(back, &why), why);

  DecompositionWitness loop = compose_witness(w, back);
  CHECK(polytope_set_equal(loop.source, tri));
  CHECK(polytope_set_equal(loop.target, tri));
  CHECK_MESSAGE(verify_witness(loop, &why), why);

  CHECK_THROWS_AS(compose_witness(w, w), std::invalid_argument);
}
