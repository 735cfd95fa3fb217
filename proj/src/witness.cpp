#include "scl/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "scl/planar.hpp"

namespace scl {

namespace {

QVector add2(const QVector& a, const QVector& b) {
  return {a[0] + b[0], a[1] + b[1]};
}

QVector sub2(const QVector& a, const QVector& b) {
  return {a[0] - b[0], a[1] - b[1]};
}

Rational cross3(const QVector& o, const QVector& a, const QVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

P2 to_p2(const QVector& v) { return {v[0], v[1]}; }
QVector to_qv(const P2& p) { return {p.x, p.y}; }

ConvexPoly ccw_poly(std::vector<P2> vs) {
  Rational s(0);
  for (size_t i = 0; i < vs.size(); ++i) {
    const P2& a = vs[i];
    const P2& b = vs[(i + 1) % vs.size()];
    s += a.x * b.y - b.x * a.y;
  }
  if (sgn(s) < 0) std::reverse(vs.begin(), vs.end());
  return ConvexPoly{std::move(vs)};
}

// Fan triangulation, dropping degenerate slivers.
void append_poly(Polytope* out, const ConvexPoly& poly) {
  const auto& v = poly.vs;
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    if (orient(v[0], v[i], v[i + 1]) == 0) continue;
    Simplex s;
    s.v = {to_qv(v[0]), to_qv(v[i]), to_qv(v[i + 1])};
    out->simplices.push_back(std::move(s));
  }
}

// Union of the pairwise intersections of the triangles of x and y.
Polytope intersect_e2(const Polytope& x, const Polytope& y) {
  Polytope out;
  out.geom = x.geom;
  for (const auto& sx : x.simplices)
    for (const auto& sy : y.simplices) {
      ConvexPoly a = ccw_poly({to_p2(sx.v[0]), to_p2(sx.v[1]), to_p2(sx.v[2])});
      ConvexPoly b = ccw_poly({to_p2(sy.v[0]), to_p2(sy.v[1]), to_p2(sy.v[2])});
      append_poly(&out, clip_to_poly(a, b));
    }
  return out;
}

Int rat_floor(const Rational& x) {
  Int n = x.get_num(), d = x.get_den(), q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int rat_ceil(const Rational& x) {
  Int n = x.get_num(), d = x.get_den(), q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Parallelogram anchored at o, spanned by edge vectors u and v.
struct Par {
  QVector o, u, v;
};

ConvexPoly par_poly(const Par& p) {
  QVector b = add2(p.o, p.u);
  return ccw_poly({to_p2(p.o), to_p2(b), to_p2(add2(b, p.v)), to_p2(add2(p.o, p.v))});
}

Polytope par_polytope(const Par& p) {
  Polytope t;
  t.geom = GeometryId::euclidean(2);
  append_poly(&t, par_poly(p));
  return t;
}

// Pipeline-internal witness whose pieces are single convex polygons. The
// moves of the pipeline preserve orientation, and a convex piece clipped by a
// convex piece stays convex, so composition never fragments a piece into a
// triangle fan; polytopes appear only at the boundary of the pipeline.
struct CPiece {
  ConvexPoly poly;
  Isometry move;
};

struct CWitness {
  Polytope source;
  Polytope target;
  std::vector<CPiece> pieces;
  MoveGroup group = MoveGroup::Translations;
};

ConvexPoly apply_poly(const ConvexPoly& p, const Isometry& g) {
  ConvexPoly out;
  for (const P2& v : p.vs) {
    QVector im = g.apply_point({v.x, v.y});
    out.vs.push_back({im[0], im[1]});
  }
  return out;
}

struct BB {
  Rational x0, y0, x1, y1;
};

BB bb_of(const ConvexPoly& p) {
  BB b{p.vs[0].x, p.vs[0].y, p.vs[0].x, p.vs[0].y};
  for (const P2& v : p.vs) {
    if (v.x < b.x0) b.x0 = v.x;
    if (v.y < b.y0) b.y0 = v.y;
    if (v.x > b.x1) b.x1 = v.x;
    if (v.y > b.y1) b.y1 = v.y;
  }
  return b;
}

bool bb_meet(const BB& a, const BB& b) {
  return !(a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0);
}

// Composition without revalidation; the chain builder guarantees that
// first.target and second.source agree as sets.
CWitness ccompose(const CWitness& first, const CWitness& second) {
  CWitness out;
  out.source = first.source;
  out.target = second.target;
  out.group = std::max(first.group, second.group);
  std::vector<BB> sb;
  sb.reserve(second.pieces.size());
  for (const auto& p : second.pieces) sb.push_back(bb_of(p.poly));
  for (const auto& a : first.pieces) {
    ConvexPoly moved = apply_poly(a.poly, a.move);
    BB mb = bb_of(moved);
    for (size_t j = 0; j < second.pieces.size(); ++j) {
      if (!bb_meet(mb, sb[j])) continue;
      const CPiece& b = second.pieces[j];
      ConvexPoly x = clip_to_poly(moved, b.poly);
      if (x.empty_area() || sgn(poly_area(x)) == 0) continue;
      out.pieces.push_back({apply_poly(x, a.move.inverted()), b.move.compose(a.move)});
    }
  }
  return out;
}

CWitness cinvert(const CWitness& w) {
  CWitness out;
  out.source = w.target;
  out.target = w.source;
  out.group = w.group;
  for (const auto& p : w.pieces)
    out.pieces.push_back({apply_poly(p.poly, p.move), p.move.inverted()});
  return out;
}

DecompositionWitness finalize(const CWitness& w) {
  DecompositionWitness out;
  out.source = w.source;
  out.target = w.target;
  out.group = w.group;
  for (const auto& p : w.pieces) {
    Polytope poly;
    poly.geom = w.source.geom;
    append_poly(&poly, p.poly);
    if (!poly.simplices.empty()) out.pieces.push_back({std::move(poly), p.move});
  }
  return out;
}

// Translation-only witness from the parallelogram (o, u, v) to (o, u, v + t u):
// both are fundamental domains of the strip modulo Z u, so the pieces are the
// intersections with the integer u-translates of the target.
CWitness slide_par(const Par& p, const Rational& t) {
  Par p2{p.o, p.u, {p.v[0] + t * p.u[0], p.v[1] + t * p.u[1]}};
  CWitness w;
  w.group = MoveGroup::Translations;
  w.source = par_polytope(p);
  w.target = par_polytope(p2);
  ConvexPoly src = par_poly(p);
  ConvexPoly tgt = par_poly(p2);
  Int lo = rat_floor(std::min(Rational(0), t)) - 1;
  Int hi = rat_ceil(std::max(Rational(0), t)) + 1;
  for (Int m = lo; cmp(m, hi) <= 0; ++m) {
    P2 shift{Rational(m) * p.u[0], Rational(m) * p.u[1]};
    ConvexPoly back;
    for (const P2& q : tgt.vs) back.vs.push_back(q - shift);
    ConvexPoly piece = clip_to_poly(src, back);
    if (piece.empty_area() || sgn(poly_area(piece)) == 0) continue;
    w.pieces.push_back({std::move(piece), Isometry::translation(2, {shift.x, shift.y})});
  }
  return w;
}

// Step-by-step witness accumulator over a moving parallelogram. Relabelings
// of the same point set (swapping u and v, normalizing the anchor) do not
// emit a step.
struct Chain {
  CWitness acc;
  Par cur;
};

void chain_slide(Chain* ch, const Rational& t) {
  if (sgn(t) == 0) return;
  ch->acc = ccompose(ch->acc, slide_par(ch->cur, t));
  ch->cur.v[0] += t * ch->cur.u[0];
  ch->cur.v[1] += t * ch->cur.u[1];
}

void chain_swap(Chain* ch) { std::swap(ch->cur.u, ch->cur.v); }

void chain_normalize_rect(Chain* ch) {
  Par& c = ch->cur;
  if (sgn(c.u[0]) < 0) {
    c.o[0] += c.u[0];
    c.u[0] = -c.u[0];
  }
  if (sgn(c.v[1]) < 0) {
    c.o[1] += c.v[1];
    c.v[1] = -c.v[1];
  }
}

void chain_translate(Chain* ch, const QVector& t) {
  if (sgn(t[0]) == 0 && sgn(t[1]) == 0) return;
  CWitness step;
  step.group = MoveGroup::Translations;
  step.source = par_polytope(ch->cur);
  step.pieces = {{par_poly(ch->cur), Isometry::translation(2, t)}};
  ch->cur.o = add2(ch->cur.o, t);
  step.target = par_polytope(ch->cur);
  ch->acc = ccompose(ch->acc, step);
}

// Witness carrying the counterclockwise triangle (a, b, c) onto the slot
// [0,1] x [y0, y0 + area]. Midline cut to a parallelogram, shears to an axis
// rectangle, then the unit-width chain.
CWitness triangle_to_slot(const QVector& a, const QVector& b, const QVector& c,
                          const Rational& y0) {
  GeometryId e2 = GeometryId::euclidean(2);
  QVector p{(a[0] + c[0]) / 2, (a[1] + c[1]) / 2};
  QVector q{(b[0] + c[0]) / 2, (b[1] + c[1]) / 2};

  Chain ch;
  ch.cur = Par{a, sub2(b, a), sub2(p, a)};
  {
    CWitness& tp = ch.acc;
    tp.group = MoveGroup::TranslationsPointReflections;
    tp.source.geom = e2;
    Simplex whole;
    whole.v = {a, b, c};
    tp.source.simplices.push_back(std::move(whole));
    tp.target = par_polytope(ch.cur);
    tp.pieces.push_back(
        {ccw_poly({to_p2(a), to_p2(b), to_p2(q), to_p2(p)}), Isometry::identity(e2)});
    tp.pieces.push_back(
        {ccw_poly({to_p2(p), to_p2(q), to_p2(c)}), Isometry::point_reflection(2, q)});
  }

  // shear v horizontal, then swap it into base position
  if (sgn(ch.cur.v[1]) != 0) {
    if (sgn(ch.cur.u[1]) == 0) chain_swap(&ch);
    chain_slide(&ch, -ch.cur.v[1] / ch.cur.u[1]);
  }
  chain_swap(&ch);
  // shear the side vertical: now an axis rectangle
  chain_slide(&ch, -ch.cur.v[0] / ch.cur.u[0]);
  chain_normalize_rect(&ch);

  Rational w = ch.cur.u[0];
  chain_slide(&ch, Rational(1) / w);  // v: (0,h) -> (1,h)
  chain_swap(&ch);
  chain_slide(&ch, -w);               // v: (w,0) -> (0,-wh)
  chain_swap(&ch);
  chain_slide(&ch, Rational(1) / w);  // v: (1,h) -> (1,0)
  chain_swap(&ch);
  chain_normalize_rect(&ch);
  chain_translate(&ch, {-ch.cur.o[0], y0 - ch.cur.o[1]});
  return ch.acc;
}

// Witness from p onto the rectangle [0,1] x [0, area(p)], one stacked slot
// per triangle of a conforming triangulation.
CWitness to_unit_rect(const Polytope& p) {
  Triangulation tr = triangulate_one(p);
  CWitness acc;
  acc.group = MoveGroup::TranslationsPointReflections;
  acc.source = p;
  Rational y0(0);
  for (size_t i = 0; i < tr.top_cells().size(); ++i) {
    Simplex s = tr.cell_simplex(2, int(i));
    QVector a = s.v[0], b = s.v[1], c = s.v[2];
    if (sgn(cross3(a, b, c)) < 0) std::swap(b, c);
    Rational area = cross3(a, b, c) / 2;
    CWitness w = triangle_to_slot(a, b, c, y0);
    for (auto& pc : w.pieces) acc.pieces.push_back(std::move(pc));
    y0 += area;
  }
  Par slot{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), y0}};
  acc.target = par_polytope(slot);
  return acc;
}

QVector polygon_centroid(const Polytope& p) {
  Triangulation tr = triangulate_one(p);
  Rational area(0), cx(0), cy(0);
  for (size_t i = 0; i < tr.top_cells().size(); ++i) {
    Simplex s = tr.cell_simplex(2, int(i));
    Rational a = cross3(s.v[0], s.v[1], s.v[2]) / 2;
    if (sgn(a) < 0) a = -a;
    area += a;
    cx += a * (s.v[0][0] + s.v[1][0] + s.v[2][0]) / 3;
    cy += a * (s.v[0][1] + s.v[1][1] + s.v[2][1]) / 3;
  }
  return {cx / area, cy / area};
}

// Primitive integer vector c with first nonzero entry positive, and the
// rational scale l with d = l c.
std::pair<QVector, Rational> primitive_signed(const QVector& d) {
  Int l = lcm(d[0].get_den(), d[1].get_den());
  Int w0 = Rational(d[0] * l).get_num();
  Int w1 = Rational(d[1] * l).get_num();
  Int g = gcd(w0, w1);
  Int c0 = w0 / g, c1 = w1 / g;
  if (sgn(c0) < 0 || (sgn(c0) == 0 && sgn(c1) < 0)) {
    c0 = -c0;
    c1 = -c1;
  }
  QVector c{Rational(c0), Rational(c1)};
  Rational scale = sgn(c[0]) != 0 ? d[0] / c[0] : d[1] / c[1];
  return {c, scale};
}

std::vector<std::pair<Rational, Rational>> merged_intervals(const Polytope& p) {
  std::vector<std::pair<Rational, Rational>> segs;
  for (const auto& s : p.simplices) {
    Rational x = s.v[0][0], y = s.v[1][0];
    if (x > y) std::swap(x, y);
    segs.push_back({x, y});
  }
  std::sort(segs.begin(), segs.end());
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& s : segs) {
    if (!out.empty() && s.first <= out.back().second)
      out.back().second = std::max(out.back().second, s.second);
    else
      out.push_back(s);
  }
  return out;
}

int sym_index(const std::vector<std::string>& syms, const std::string& s) {
  for (size_t i = 0; i < syms.size(); ++i)
    if (syms[i] == s) return int(i);
  return -1;
}

void check_symbols(const std::vector<std::string>& syms, const char* kind) {
  std::set<std::string> seen;
  for (const auto& s : syms) {
    if (s == "pi") throw std::invalid_argument("\"pi\" is a reserved angle symbol");
    if (!seen.insert(s).second)
      throw std::invalid_argument(std::string("duplicate ") + kind + " symbol: " + s);
  }
}

QMatrix relation_matrix(const std::vector<std::map<std::string, Rational>>& rel,
                        const std::vector<std::string>& syms, const char* kind) {
  QMatrix m(int(rel.size()), int(syms.size()));
  for (size_t i = 0; i < rel.size(); ++i)
    for (const auto& [s, c] : rel[i]) {
      int j = sym_index(syms, s);
      if (j < 0)
        throw std::invalid_argument(std::string("unknown ") + kind + " symbol: " + s);
      m.at(int(i), j) = c;
    }
  return m;
}

// Subtract the projection onto each pivot row; rows are in reduced echelon
// form, so one pass reduces completely.
QVector reduce_mod(const QMatrix& r, QVector x) {
  for (int i = 0; i < r.rows; ++i) {
    int piv = -1;
    for (int j = 0; j < r.cols; ++j)
      if (sgn(r.at(i, j)) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    Rational f = x[size_t(piv)];
    if (sgn(f) == 0) continue;
    for (int j = 0; j < r.cols; ++j) x[size_t(j)] -= f * r.at(i, j);
  }
  return x;
}

}  // namespace

bool verify_witness(const DecompositionWitness& w, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  try {
    validate_polytope(w.source);
    validate_polytope(w.target);
    if (!(w.source.geom == w.target.geom))
      return fail("source and target geometry differ");
    if (w.source.simplices.empty()) return fail("empty source");
    if (w.target.simplices.empty()) return fail("empty target");
    if (w.pieces.empty()) return fail("no pieces");
    Cover cs, ct;
    cs.target = w.source;
    ct.target = w.target;
    for (size_t i = 0; i < w.pieces.size(); ++i) {
      const Polytope& poly = w.pieces[i].first;
      const Isometry& move = w.pieces[i].second;
      validate_polytope(poly);
      if (!(poly.geom == w.source.geom))
        return fail("piece " + std::to_string(i) + " geometry differs from the source");
      if (!(move.geom == poly.geom))
        return fail("piece " + std::to_string(i) + " move geometry differs from the piece");
      if (!move_in_group(move, w.group))
        return fail("piece " + std::to_string(i) + " moves outside the declared group");
      cs.pieces.push_back(poly);
      ct.pieces.push_back(apply_isometry(poly, move));
    }
    SubdivisionReport rs = is_weak_subdivision(cs);
    if (!rs.valid) return fail("pieces against the source: " + rs.reason);
    SubdivisionReport rt = is_weak_subdivision(ct);
    if (!rt.valid) return fail("moved pieces against the target: " + rt.reason);
    return true;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

DecompositionWitness invert_witness(const DecompositionWitness& w) {
  DecompositionWitness out;
  out.source = w.target;
  out.target = w.source;
  out.group = w.group;
  for (const auto& [poly, move] : w.pieces)
    out.pieces.push_back({apply_isometry(poly, move), move.inverted()});
  return out;
}

DecompositionWitness compose_witness(const DecompositionWitness& first,
                                     const DecompositionWitness& second) {
  GeometryId e2 = GeometryId::euclidean(2);
  if (!(first.target.geom == e2) || !(second.source.geom == e2))
    throw std::invalid_argument("witness composition supports E2 only");
  if (!polytope_set_equal(first.target, second.source))
    throw std::invalid_argument("witness chain mismatch: middle polytopes differ");
  DecompositionWitness out;
  out.source = first.source;
  out.target = second.target;
  out.group = std::max(first.group, second.group);
  for (const auto& [a, g] : first.pieces) {
    Polytope moved = apply_isometry(a, g);
    for (const auto& [b, h] : second.pieces) {
      Polytope x = intersect_e2(moved, b);
      if (x.simplices.empty()) continue;
      out.pieces.push_back({apply_isometry(x, g.inverted()), h.compose(g)});
    }
  }
  return out;
}

ScissorsDecision decide_length_e1(const Polytope& source, const Polytope& target) {
  GeometryId e1 = GeometryId::euclidean(1);
  if (!(source.geom == e1) || !(target.geom == e1))
    throw std::invalid_argument("length decision needs E1 polytopes");
  validate_polytope(source);
  validate_polytope(target);
  if (source.simplices.empty() || target.simplices.empty())
    throw std::invalid_argument("length decision needs nonempty polytopes");
  auto S = merged_intervals(source);
  auto T = merged_intervals(target);
  ScissorsDecision d;
  d.measure = "length";
  for (const auto& s : S) d.source_value += s.second - s.first;
  for (const auto& t : T) d.target_value += t.second - t.first;
  if (d.source_value != d.target_value) return d;
  d.congruent = true;
  DecompositionWitness w;
  w.source = source;
  w.target = target;
  w.group = MoveGroup::Translations;
  size_t i = 0, j = 0;
  Rational sa = S[0].first, ta = T[0].first;
  while (i < S.size() && j < T.size()) {
    Rational len = std::min(S[i].second - sa, T[j].second - ta);
    Polytope seg;
    seg.geom = e1;
    Simplex sx;
    sx.v = {{sa}, {sa + len}};
    seg.simplices.push_back(std::move(sx));
    w.pieces.push_back({std::move(seg), Isometry::translation(1, {ta - sa})});
    sa += len;
    ta += len;
    if (sa == S[i].second && ++i < S.size()) sa = S[i].first;
    if (ta == T[j].second && ++j < T.size()) ta = T[j].first;
  }
  d.witness = std::move(w);
  return d;
}

ScissorsDecision decide_area_e2(const Polytope& source, const Polytope& target) {
  GeometryId e2 = GeometryId::euclidean(2);
  if (!(source.geom == e2) || !(target.geom == e2))
    throw std::invalid_argument("area decision needs E2 polytopes");
  validate_polytope(source);
  validate_polytope(target);
  if (source.simplices.empty() || target.simplices.empty())
    throw std::invalid_argument("degenerate polygon");
  ScissorsDecision d;
  d.measure = "area";
  d.source_value = polytope_volume(source);
  d.target_value = polytope_volume(target);
  if (d.source_value != d.target_value) return d;
  d.congruent = true;
  QVector t = sub2(polygon_centroid(target), polygon_centroid(source));
  if (polytope_set_equal(apply_isometry(source, Isometry::translation(2, t)), target)) {
    DecompositionWitness w;
    w.source = source;
    w.target = target;
    w.group = MoveGroup::Translations;
    w.pieces = {{source, Isometry::translation(2, t)}};
    d.witness = std::move(w);
    return d;
  }
  CWitness ws = to_unit_rect(source);
  CWitness wt = to_unit_rect(target);
  d.witness = finalize(ccompose(ws, cinvert(wt)));
  return d;
}

TranslationInvariants translation_invariants_e2(const Polytope& p) {
  if (!(p.geom == GeometryId::euclidean(2)))
    throw std::invalid_argument("translation invariants need an E2 polytope");
  validate_polytope(p);
  if (p.simplices.empty()) throw std::invalid_argument("degenerate polygon");
  TranslationInvariants out;
  out.area = polytope_volume(p);
  std::map<QVector, Rational> wt;
  Triangulation tr = triangulate_one(p);
  for (size_t i = 0; i < tr.top_cells().size(); ++i) {
    Simplex s = tr.cell_simplex(2, int(i));
    QVector a = s.v[0], b = s.v[1], c = s.v[2];
    if (sgn(cross3(a, b, c)) < 0) std::swap(b, c);
    const QVector* loop[4] = {&a, &b, &c, &a};
    for (int e = 0; e < 3; ++e) {
      auto [dir, scale] = primitive_signed(sub2(*loop[e + 1], *loop[e]));
      wt[dir] += scale;
    }
  }
  for (const auto& [dir, weight] : wt)
    if (sgn(weight) != 0) out.edge_weights.push_back({dir, weight});
  return out;
}

bool DehnElement::is_zero() const {
  for (const Rational& x : coords.a)
    if (sgn(x) != 0) return false;
  return true;
}

DehnElement& DehnElement::operator+=(const DehnElement& o) {
  if (length_symbols != o.length_symbols || angle_symbols != o.angle_symbols)
    throw std::invalid_argument("mismatched relation sets");
  for (size_t i = 0; i < coords.a.size(); ++i) coords.a[i] += o.coords.a[i];
  return *this;
}

DehnElement dehn_invariant(const MeasuredPolytope& p, const AngleRelationSet& rel) {
  check_symbols(rel.length_symbols, "length");
  check_symbols(rel.angle_symbols, "angle");
  std::vector<std::string> angs = rel.angle_symbols;
  angs.push_back("pi");
  int na = int(angs.size());
  int pic = na - 1;

  QMatrix ar = rref_of(relation_matrix(rel.angle_relations, angs, "angle"));
  for (int i = 0; i < ar.rows; ++i) {
    int piv = -1;
    for (int j = 0; j < na; ++j)
      if (sgn(ar.at(i, j)) != 0) {
        piv = j;
        break;
      }
    if (piv == pic)
      throw std::invalid_argument("inconsistent angle relations: pi is forced to vanish");
  }
  QMatrix full(ar.rows + 1, na);
  for (int i = 0; i < ar.rows; ++i)
    for (int j = 0; j < na; ++j) full.at(i, j) = ar.at(i, j);
  full.at(ar.rows, pic) = 1;
  QMatrix amod = rref_of(full);
  QMatrix lmod = rref_of(relation_matrix(rel.length_relations, rel.length_symbols, "length"));

  DehnElement out;
  out.length_symbols = rel.length_symbols;
  out.angle_symbols = angs;
  int nl = int(rel.length_symbols.size());
  out.coords = QMatrix(nl, na);
  for (const auto& e : p.edges) {
    if (sgn(e.multiplicity) <= 0)
      throw std::invalid_argument("multiplicity must be positive");
    int li = sym_index(rel.length_symbols, e.length);
    if (li < 0) throw std::invalid_argument("unknown length symbol: " + e.length);
    int ai = sym_index(angs, e.angle);
    if (ai < 0) throw std::invalid_argument("unknown angle symbol: " + e.angle);
    QVector lv(size_t(nl), Rational(0));
    lv[size_t(li)] = 1;
    lv = reduce_mod(lmod, lv);
    QVector av(size_t(na), Rational(0));
    av[size_t(ai)] = 1;
    av = reduce_mod(amod, av);
    for (int i = 0; i < nl; ++i) {
      if (sgn(lv[size_t(i)]) == 0) continue;
      for (int j = 0; j < na; ++j)
        out.coords.at(i, j) += e.multiplicity * lv[size_t(i)] * av[size_t(j)];
    }
  }
  return out;
}

MeasuredPolytope measured_box(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0)
    throw std::invalid_argument("box sides must be positive");
  MeasuredPolytope m;
  m.edges = {{"unit", "right", 4 * a}, {"unit", "right", 4 * b}, {"unit", "right", 4 * c}};
  return m;
}

AngleRelationSet box_relations() {
  AngleRelationSet r;
  r.length_symbols = {"unit"};
  r.angle_symbols = {"right"};
  r.angle_relations = {{{"right", Rational(1)}, {"pi", Rational(-1) / 2}}};
  return r;
}

}  // namespace scl
