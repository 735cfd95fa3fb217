#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "scl/cones.hpp"
#include "scl/geometry.hpp"
#include "scl/planar.hpp"

// Cell decompositions for the low-dimensional geometries (E1, E2, S0, S1).
// The common pattern: cut the ambient space into convex cells along all
// boundary data of the inputs, pick an exact interior sample per cell, and
// decide every set-level question on samples. Samples are strictly interior,
// so no membership test ever lands on a boundary and every sign is decisive.

namespace scl {

namespace {

struct QVLess {
  bool operator()(const QVector& a, const QVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// E2 decomposition

P2 to_p2(const Point& p) { return P2{p[0], p[1]}; }
Point from_p2(const P2& p) { return Point{p.x, p.y}; }

// Fan triangulation of a convex polygon after dropping collinear vertices;
// empty for degenerate input.
std::vector<Simplex> fan_triangles(const ConvexPoly& poly) {
  std::vector<Simplex> out;
  if (poly.empty_area()) return out;
  std::vector<P2> vs;
  int n = int(poly.vs.size());
  for (int i = 0; i < n; ++i) {
    const P2& prev = poly.vs[(i + n - 1) % n];
    const P2& nxt = poly.vs[(i + 1) % n];
    if (orient(prev, poly.vs[i], nxt) != 0) vs.push_back(poly.vs[i]);
  }
  for (size_t i = 1; i + 1 < vs.size(); ++i)
    out.push_back(Simplex{{from_p2(vs[0]), from_p2(vs[i]), from_p2(vs[i + 1])}});
  return out;
}

struct DecompE2 {
  std::vector<ConvexPoly> cells;
  std::vector<P2> samples;
  std::vector<std::vector<char>> member;  // [cell][poly]
};

// Closures of the components of box minus the union of the lines. Splitting
// cell by cell with full lines yields exactly the line-arrangement cells, and
// those meet face to face: a vertex interior to a shared edge would be a
// transversal crossing, which splits both sides. So coning each cell from an
// interior point later produces a conforming triangulation with no repair.
std::vector<ConvexPoly> arrangement_cells(const std::set<Line2>& lines, const ConvexPoly& box) {
  std::vector<ConvexPoly> cells{box};
  for (const auto& l : lines) {
    std::vector<ConvexPoly> next;
    next.reserve(cells.size());
    for (const auto& c : cells) {
      ConvexPoly pos = clip_half_plane(c, l);
      ConvexPoly neg = clip_half_plane(c, l.flipped());
      if (pos.empty_area() || neg.empty_area()) {
        next.push_back(c);  // untouched: keep the original vertex list
      } else {
        next.push_back(std::move(pos));
        next.push_back(std::move(neg));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

DecompE2 decomp_e2(const std::vector<const Polytope*>& ps) {
  std::vector<std::vector<ConvexPoly>> tris(ps.size());
  std::set<Line2> lines;
  bool first = true;
  Rational xmin, xmax, ymin, ymax;
  for (size_t i = 0; i < ps.size(); ++i) {
    for (const auto& s : ps[i]->simplices) {
      ConvexPoly t = make_ccw_triangle(to_p2(s.v[0]), to_p2(s.v[1]), to_p2(s.v[2]));
      for (int e = 0; e < 3; ++e)
        lines.insert(line_through(t.vs[e], t.vs[(e + 1) % 3]).canonical_unoriented());
      for (const auto& v : t.vs) {
        if (first || v.x < xmin) xmin = v.x;
        if (first || v.x > xmax) xmax = v.x;
        if (first || v.y < ymin) ymin = v.y;
        if (first || v.y > ymax) ymax = v.y;
        first = false;
      }
      tris[i].push_back(std::move(t));
    }
  }
  DecompE2 d;
  if (first) return d;  // no simplices anywhere
  ConvexPoly box{{P2{xmin - 1, ymin - 1}, P2{xmax + 1, ymin - 1}, P2{xmax + 1, ymax + 1},
                  P2{xmin - 1, ymax + 1}}};
  d.cells = arrangement_cells(lines, box);
  d.samples.reserve(d.cells.size());
  d.member.resize(d.cells.size());
  for (size_t c = 0; c < d.cells.size(); ++c) {
    P2 s = poly_vertex_centroid(d.cells[c]);
    d.member[c].resize(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
      bool in = false;
      for (const auto& t : tris[i])
        if (point_in_convex(s, t)) {
          in = true;
          break;
        }
      d.member[c][i] = in;
    }
    d.samples.push_back(std::move(s));
  }
  return d;
}

struct Assembled {
  Triangulation tri;
  std::vector<std::vector<int>> cell_tops;  // decomp cell -> indices into top cells
};

Assembled assemble_e2(const DecompE2& d, const std::vector<char>& inside) {
  Assembled out;
  out.tri.geom = GeometryId::euclidean(2);
  out.cell_tops.resize(d.cells.size());
  std::map<P2, int> vid;
  auto getv = [&](const P2& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = int(out.tri.vertices.size());
    vid.emplace(p, id);
    out.tri.vertices.push_back(from_p2(p));
    return id;
  };
  out.tri.cells.assign(3, {});
  std::set<std::vector<int>> edges;
  auto emit = [&](int a, int b, int c, size_t cell) {
    std::vector<int> t{a, b, c};
    std::sort(t.begin(), t.end());
    out.cell_tops[cell].push_back(int(out.tri.cells[2].size()));
    out.tri.cells[2].push_back(t);
    edges.insert({t[0], t[1]});
    edges.insert({t[0], t[2]});
    edges.insert({t[1], t[2]});
  };
  for (size_t c = 0; c < d.cells.size(); ++c) {
    if (!inside[c]) continue;
    // Fan from vertex 0. Cells are strictly convex (every edge lies on a
    // distinct defining line), so the fan triangles are nondegenerate and a
    // chord passes through no third vertex. No new vertices are introduced,
    // which keeps coordinates at arrangement-vertex size.
    const auto& poly = d.cells[c].vs;
    int n = int(poly.size());
    int v0 = getv(poly[0]);
    for (int i = 1; i + 1 < n; ++i) emit(v0, getv(poly[i]), getv(poly[i + 1]), c);
  }
  for (const auto& e : edges) out.tri.cells[1].push_back(e);
  std::set<int> used;
  for (const auto& e : edges) used.insert(e.begin(), e.end());
  for (int v : used) out.tri.cells[0].push_back({v});
  return out;
}

// ---------------------------------------------------------------------------
// E1 decomposition

struct DecompE1 {
  std::vector<Rational> cuts;  // sorted, unique; cell i = [cuts[i], cuts[i+1]]
  std::vector<std::vector<char>> member;
};

DecompE1 decomp_e1(const std::vector<const Polytope*>& ps) {
  std::vector<std::vector<std::pair<Rational, Rational>>> segs(ps.size());
  std::set<Rational> cutset;
  for (size_t i = 0; i < ps.size(); ++i)
    for (const auto& s : ps[i]->simplices) {
      Rational a = s.v[0][0], b = s.v[1][0];
      if (a > b) std::swap(a, b);
      segs[i].emplace_back(a, b);
      cutset.insert(a);
      cutset.insert(b);
    }
  DecompE1 d;
  d.cuts.assign(cutset.begin(), cutset.end());
  if (d.cuts.size() < 2) return d;
  size_t ncells = d.cuts.size() - 1;
  d.member.resize(ncells);
  for (size_t c = 0; c < ncells; ++c) {
    Rational mid = (d.cuts[c] + d.cuts[c + 1]) / 2;
    d.member[c].resize(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
      bool in = false;
      for (const auto& [a, b] : segs[i])
        if (a <= mid && mid <= b) {
          in = true;
          break;
        }
      d.member[c][i] = in;
    }
  }
  return d;
}

Assembled assemble_e1(const DecompE1& d, const std::vector<char>& inside) {
  Assembled out;
  out.tri.geom = GeometryId::euclidean(1);
  out.cell_tops.resize(inside.size());
  std::map<Rational, int> vid;
  auto getv = [&](const Rational& x) {
    auto it = vid.find(x);
    if (it != vid.end()) return it->second;
    int id = int(out.tri.vertices.size());
    vid.emplace(x, id);
    out.tri.vertices.push_back(Point{x});
    return id;
  };
  out.tri.cells.assign(2, {});
  std::set<int> used;
  for (size_t c = 0; c + 1 < d.cuts.size(); ++c) {
    if (!inside[c]) continue;
    int a = getv(d.cuts[c]), b = getv(d.cuts[c + 1]);
    out.cell_tops[c].push_back(int(out.tri.cells[1].size()));
    out.tri.cells[1].push_back({std::min(a, b), std::max(a, b)});
    used.insert(a);
    used.insert(b);
  }
  for (int v : used) out.tri.cells[0].push_back({v});
  return out;
}

// ---------------------------------------------------------------------------
// S1 decomposition (rays in Q^2, cells are arcs between circularly
// consecutive rays)

int half_of(const QVector& r) {
  // 0 for angle in [0, pi), 1 for [pi, 2pi)
  int sy = sgn(r[1]);
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return sgn(r[0]) > 0 ? 0 : 1;
}

Rational cross2(const QVector& a, const QVector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool circ_less(const QVector& a, const QVector& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return sgn(cross2(a, b)) > 0;
}

struct DecompS1 {
  std::vector<QVector> rays;  // canonical, circularly sorted
  std::vector<QVector> samples;
  std::vector<std::vector<char>> member;
  // cell i = arc from rays[i] CCW to rays[(i+1) % n]; single-ray input gives
  // one cell covering everything but the ray
};

bool in_cone2(const QVector& a, const QVector& b, const QVector& x) {
  Rational det = cross2(a, b);
  if (det == 0) throw std::logic_error("degenerate spherical simplex survived validation");
  Rational alpha = cross2(x, b) / det;
  Rational beta = cross2(a, x) / det;
  return alpha >= 0 && beta >= 0;
}

DecompS1 decomp_s1(const std::vector<const Polytope*>& ps) {
  std::set<QVector, QVLess> rayset;
  for (const auto* p : ps)
    for (const auto& s : p->simplices)
      for (const auto& v : s.v) rayset.insert(v);
  DecompS1 d;
  d.rays.assign(rayset.begin(), rayset.end());
  std::sort(d.rays.begin(), d.rays.end(), circ_less);
  size_t n = d.rays.size();
  if (n == 0) return d;
  d.samples.resize(n);
  d.member.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const QVector& u = d.rays[i];
    const QVector& v = d.rays[(i + 1) % n];
    QVector mid;
    if (n == 1) {
      mid = QVector{-u[0], -u[1]};
    } else {
      int cr = sgn(cross2(u, v));
      if (cr > 0)
        mid = QVector{u[0] + v[0], u[1] + v[1]};
      else if (cr == 0)
        mid = QVector{-u[1], u[0]};  // antipodal endpoints: quarter turn
      else
        mid = QVector{-(u[0] + v[0]), -(u[1] + v[1])};  // reflex arc midpoint
      if (mid[0] == 0 && mid[1] == 0) mid = QVector{-u[1], u[0]};
    }
    d.samples[i] = canonical_ray(mid);
    d.member[i].resize(ps.size());
    for (size_t k = 0; k < ps.size(); ++k) {
      bool in = false;
      for (const auto& s : ps[k]->simplices)
        if (in_cone2(s.v[0], s.v[1], d.samples[i])) {
          in = true;
          break;
        }
      d.member[i][k] = in;
      // A cell spanning an angle >= pi cannot fit inside any salient cone
      // whose boundary rays are all present in the arrangement.
      if (in && n >= 2 && sgn(cross2(d.rays[i], d.rays[(i + 1) % n])) <= 0)
        throw std::logic_error("wide arc claimed by a polytope: ray set inconsistent");
      if (in && n == 1) throw std::logic_error("wide arc claimed by a polytope: ray set inconsistent");
    }
  }
  return d;
}

Assembled assemble_s1(const DecompS1& d, const std::vector<char>& inside) {
  Assembled out;
  out.tri.geom = GeometryId::spherical(1);
  out.cell_tops.resize(d.samples.size());
  std::map<QVector, int, QVLess> vid;
  auto getv = [&](const QVector& r) {
    auto it = vid.find(r);
    if (it != vid.end()) return it->second;
    int id = int(out.tri.vertices.size());
    vid.emplace(r, id);
    out.tri.vertices.push_back(r);
    return id;
  };
  out.tri.cells.assign(2, {});
  std::set<int> used;
  size_t n = d.rays.size();
  for (size_t c = 0; c < n; ++c) {
    if (!inside[c]) continue;
    int a = getv(d.rays[c]), b = getv(d.rays[(c + 1) % n]);
    out.cell_tops[c].push_back(int(out.tri.cells[1].size()));
    out.tri.cells[1].push_back({std::min(a, b), std::max(a, b)});
    used.insert(a);
    used.insert(b);
  }
  for (int v : used) out.tri.cells[0].push_back({v});
  return out;
}

// ---------------------------------------------------------------------------
// S0 decomposition (two candidate rays +1, -1 in Q^1)

struct DecompS0 {
  std::vector<QVector> pts;  // subset of {(1), (-1)} present in the inputs
  std::vector<std::vector<char>> member;
};

DecompS0 decomp_s0(const std::vector<const Polytope*>& ps) {
  DecompS0 d;
  std::set<QVector, QVLess> present;
  for (const auto* p : ps)
    for (const auto& s : p->simplices) present.insert(s.v[0]);
  d.pts.assign(present.begin(), present.end());
  d.member.resize(d.pts.size());
  for (size_t c = 0; c < d.pts.size(); ++c) {
    d.member[c].resize(ps.size());
    for (size_t k = 0; k < ps.size(); ++k) {
      bool in = false;
      for (const auto& s : ps[k]->simplices)
        if (s.v[0] == d.pts[c]) {
          in = true;
          break;
        }
      d.member[c][k] = in;
    }
  }
  return d;
}

Assembled assemble_s0(const DecompS0& d, const std::vector<char>& inside) {
  Assembled out;
  out.tri.geom = GeometryId::spherical(0);
  out.cell_tops.resize(d.pts.size());
  out.tri.cells.assign(1, {});
  for (size_t c = 0; c < d.pts.size(); ++c) {
    if (!inside[c]) continue;
    int id = int(out.tri.vertices.size());
    out.tri.vertices.push_back(d.pts[c]);
    out.cell_tops[c].push_back(int(out.tri.cells[0].size()));
    out.tri.cells[0].push_back({id});
  }
  return out;
}

// ---------------------------------------------------------------------------
// geometry-generic facade

struct Decomp {
  GeometryId geom;
  size_t ncells = 0;
  std::vector<std::vector<char>> member;
  DecompE2 e2;
  DecompE1 e1;
  DecompS1 s1;
  DecompS0 s0;
};

GeometryId common_geometry(const std::vector<const Polytope*>& ps) {
  if (ps.empty()) throw std::invalid_argument("no polytopes given");
  GeometryId g = ps[0]->geom;
  for (const auto* p : ps) {
    if (!(p->geom == g)) throw std::invalid_argument("mixed geometries");
    validate_polytope(*p);
  }
  return g;
}

bool planar_supported(const GeometryId& g) {
  if (g.kind == GeomKind::Euclidean) return g.dim == 1 || g.dim == 2;
  if (g.kind == GeomKind::Spherical) return g.dim == 0 || g.dim == 1;
  return false;
}

Decomp decompose(const std::vector<const Polytope*>& ps) {
  Decomp d;
  d.geom = common_geometry(ps);
  if (!planar_supported(d.geom))
    throw std::invalid_argument("cell decomposition unsupported for " + d.geom.str());
  if (d.geom.kind == GeomKind::Euclidean && d.geom.dim == 2) {
    d.e2 = decomp_e2(ps);
    d.member = d.e2.member;
  } else if (d.geom.kind == GeomKind::Euclidean) {
    d.e1 = decomp_e1(ps);
    d.member = d.e1.member;
  } else if (d.geom.dim == 1) {
    d.s1 = decomp_s1(ps);
    d.member = d.s1.member;
  } else {
    d.s0 = decomp_s0(ps);
    d.member = d.s0.member;
  }
  d.ncells = d.member.size();
  return d;
}

Assembled assemble(const Decomp& d, const std::vector<char>& inside) {
  if (d.geom.kind == GeomKind::Euclidean && d.geom.dim == 2) return assemble_e2(d.e2, inside);
  if (d.geom.kind == GeomKind::Euclidean) return assemble_e1(d.e1, inside);
  if (d.geom.dim == 1) return assemble_s1(d.s1, inside);
  return assemble_s0(d.s0, inside);
}

Rational cell_measure(const Decomp& d, size_t c) {
  if (d.geom.kind == GeomKind::Euclidean && d.geom.dim == 2) return poly_area(d.e2.cells[c]);
  if (d.geom.kind == GeomKind::Euclidean) return d.e1.cuts[c + 1] - d.e1.cuts[c];
  throw std::invalid_argument("volume is defined for Euclidean polytopes only");
}

std::string cell_witness(const Decomp& d, size_t c) {
  auto fmt = [](std::initializer_list<Rational> xs) {
    std::string s = "(";
    bool first = true;
    for (const auto& x : xs) {
      if (!first) s += ", ";
      s += format_rational(x);
      first = false;
    }
    return s + ")";
  };
  if (d.geom.kind == GeomKind::Euclidean && d.geom.dim == 2) {
    const P2& p = d.e2.samples[c];
    return fmt({p.x, p.y});
  }
  if (d.geom.kind == GeomKind::Euclidean)
    return fmt({(d.e1.cuts[c] + d.e1.cuts[c + 1]) / 2});
  if (d.geom.dim == 1) {
    const QVector& r = d.s1.samples[c];
    return "ray " + fmt({r[0], r[1]});
  }
  return "ray " + fmt({d.s0.pts[c][0]});
}

}  // namespace

Triangulation triangulate(const std::vector<Polytope>& ps) {
  std::vector<const Polytope*> ptrs;
  for (const auto& p : ps) ptrs.push_back(&p);
  Decomp d = decompose(ptrs);
  std::vector<char> inside(d.ncells, 0);
  for (size_t c = 0; c < d.ncells; ++c)
    for (size_t i = 0; i < ptrs.size(); ++i)
      if (d.member[c][i]) inside[c] = 1;
  Assembled a = assemble(d, inside);
  a.tri.piece_cells.resize(ps.size());
  for (size_t c = 0; c < d.ncells; ++c)
    for (size_t i = 0; i < ptrs.size(); ++i)
      if (d.member[c][i])
        for (int t : a.cell_tops[c]) a.tri.piece_cells[i].push_back(t);
  return a.tri;
}

namespace {

std::string point_witness(const P2& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

struct BBox2 {
  Rational x0, x1, y0, y1;
};

BBox2 bbox_of(const Polytope& p) {
  BBox2 b;
  bool first = true;
  for (const auto& s : p.simplices)
    for (const auto& v : s.v) {
      if (first) {
        b.x0 = b.x1 = v[0];
        b.y0 = b.y1 = v[1];
        first = false;
      } else {
        if (v[0] < b.x0) b.x0 = v[0];
        if (v[0] > b.x1) b.x1 = v[0];
        if (v[1] < b.y0) b.y0 = v[1];
        if (v[1] > b.y1) b.y1 = v[1];
      }
    }
  return b;
}

bool boxes_meet(const BBox2& a, const BBox2& b) {
  return cmp(a.x0, b.x1) <= 0 && cmp(b.x0, a.x1) <= 0 && cmp(a.y0, b.y1) <= 0 &&
         cmp(b.y0, a.y1) <= 0;
}

// A point strictly inside the target and strictly outside every piece, for a
// cover already known to leave area uncovered. Subtracts each piece triangle
// from the target cells by convex clipping; a leftover region's interior
// avoids every closed triangle, so its vertex centroid is a witness.
std::string uncovered_witness_e2(const Cover& c) {
  std::vector<const Polytope*> tptr{&c.target};
  DecompE2 d = decomp_e2(tptr);
  std::vector<ConvexPoly> regions;
  for (size_t i = 0; i < d.cells.size(); ++i)
    if (d.member[i][0]) regions.push_back(d.cells[i]);
  for (const auto& p : c.pieces)
    for (const auto& s : p.simplices) {
      ConvexPoly tri = make_ccw_triangle(P2{s.v[0][0], s.v[0][1]}, P2{s.v[1][0], s.v[1][1]},
                                         P2{s.v[2][0], s.v[2][1]});
      std::vector<ConvexPoly> next;
      for (const auto& r : regions) {
        ConvexPoly rem = r;
        for (int e = 0; e < 3 && !rem.empty_area(); ++e) {
          Line2 l = line_through(tri.vs[e], tri.vs[(e + 1) % 3]);
          ConvexPoly out = clip_half_plane(rem, l.flipped());
          if (!out.empty_area() && poly_area(out) != 0) next.push_back(out);
          rem = clip_half_plane(rem, l);
        }
      }
      regions = std::move(next);
      if (regions.empty()) return "";
    }
  for (const auto& r : regions)
    if (!r.empty_area() && poly_area(r) != 0) return point_witness(poly_vertex_centroid(r));
  return "";
}

}  // namespace

SubdivisionReport is_weak_subdivision(const Cover& c) {
  SubdivisionReport rep;
  try {
    validate_polytope(c.target);
    if (c.target.simplices.empty()) {
      rep.reason = "empty target";
      return rep;
    }
    if (c.pieces.empty()) {
      rep.reason = "no pieces";
      return rep;
    }
    for (const auto& p : c.pieces) {
      if (!(p.geom == c.target.geom)) {
        rep.reason = "piece geometry differs from target";
        return rep;
      }
      if (p.simplices.empty()) {
        rep.reason = "empty piece";
        return rep;
      }
      validate_polytope(p);
    }
    if (c.target.geom.kind == GeomKind::Euclidean && c.target.geom.dim == 2) {
      // One joint decomposition of the target and all pieces grows
      // quadratically in the total edge count, so check pairwise and certify
      // coverage by exact area instead: pieces inside the target with
      // pairwise disjoint interiors cover it iff their areas sum to its area.
      size_t k = c.pieces.size();
      for (size_t i = 0; i < k; ++i) {
        std::vector<const Polytope*> pr{&c.pieces[i], &c.target};
        DecompE2 d = decomp_e2(pr);
        for (size_t cell = 0; cell < d.cells.size(); ++cell)
          if (d.member[cell][0] && !d.member[cell][1]) {
            rep.reason = "piece sticks out of the target";
            rep.witness = point_witness(d.samples[cell]);
            return rep;
          }
      }
      std::vector<BBox2> boxes;
      for (const auto& p : c.pieces) boxes.push_back(bbox_of(p));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
          if (!boxes_meet(boxes[i], boxes[j])) continue;
          std::vector<const Polytope*> pr{&c.pieces[i], &c.pieces[j]};
          DecompE2 d = decomp_e2(pr);
          for (size_t cell = 0; cell < d.cells.size(); ++cell)
            if (d.member[cell][0] && d.member[cell][1]) {
              rep.reason = "piece interiors overlap";
              rep.witness = point_witness(d.samples[cell]);
              return rep;
            }
        }
      Rational total(0);
      for (const auto& p : c.pieces) total += polytope_volume(p);
      if (total != polytope_volume(c.target)) {
        rep.reason = "pieces do not cover the target";
        rep.witness = uncovered_witness_e2(c);
        return rep;
      }
      rep.valid = true;
      return rep;
    }
    std::vector<const Polytope*> ptrs{&c.target};
    for (const auto& p : c.pieces) ptrs.push_back(&p);
    Decomp d = decompose(ptrs);
    for (size_t cell = 0; cell < d.ncells; ++cell) {
      int t = d.member[cell][0] ? 1 : 0;
      int s = 0;
      for (size_t i = 1; i < ptrs.size(); ++i) s += d.member[cell][i] ? 1 : 0;
      if (s == t) continue;
      if (s > 1)
        rep.reason = "piece interiors overlap";
      else if (t == 1)
        rep.reason = "pieces do not cover the target";
      else
        rep.reason = "piece sticks out of the target";
      rep.witness = cell_witness(d, cell);
      return rep;
    }
    rep.valid = true;
    return rep;
  } catch (const std::invalid_argument& e) {
    rep.reason = e.what();
    return rep;
  }
}

RefinedCover common_refinement(const Cover& a, const Cover& b) {
  SubdivisionReport ra = is_weak_subdivision(a);
  if (!ra.valid) throw std::invalid_argument("first cover invalid: " + ra.reason);
  SubdivisionReport rb = is_weak_subdivision(b);
  if (!rb.valid) throw std::invalid_argument("second cover invalid: " + rb.reason);
  if (!polytope_set_equal(a.target, b.target))
    throw std::invalid_argument("covers have different targets");

  if (a.target.geom.kind == GeomKind::Euclidean && a.target.geom.dim == 2) {
    // Piece (i, j) is the union of the convex clips t n s over triangles t of
    // a.pieces[i] and s of b.pieces[j]. Clipping pairwise avoids a global
    // line arrangement, whose extended lines would fragment every piece.
    RefinedCover out;
    out.cover.target = a.target;
    for (size_t i = 0; i < a.pieces.size(); ++i) {
      std::vector<ConvexPoly> tris;
      for (const auto& t : a.pieces[i].simplices)
        tris.push_back(make_ccw_triangle(to_p2(t.v[0]), to_p2(t.v[1]), to_p2(t.v[2])));
      for (size_t j = 0; j < b.pieces.size(); ++j) {
        Polytope piece;
        piece.geom = a.target.geom;
        for (const auto& tp : tris)
          for (const auto& s : b.pieces[j].simplices) {
            ConvexPoly sp = make_ccw_triangle(to_p2(s.v[0]), to_p2(s.v[1]), to_p2(s.v[2]));
            for (auto& simp : fan_triangles(clip_to_poly(tp, sp)))
              piece.simplices.push_back(std::move(simp));
          }
        if (!piece.simplices.empty()) {
          out.cover.pieces.push_back(std::move(piece));
          out.provenance.push_back({int(i), int(j)});
        }
      }
    }
    return out;
  }

  std::vector<const Polytope*> ptrs{&a.target};
  for (const auto& p : a.pieces) ptrs.push_back(&p);
  for (const auto& p : b.pieces) ptrs.push_back(&p);
  Decomp d = decompose(ptrs);
  std::vector<char> inside(d.ncells, 0);
  for (size_t c = 0; c < d.ncells; ++c) inside[c] = d.member[c][0];
  Assembled asmb = assemble(d, inside);

  std::map<std::pair<int, int>, std::vector<int>> buckets;  // (i, j) -> top cells
  size_t na = a.pieces.size();
  for (size_t c = 0; c < d.ncells; ++c) {
    if (!inside[c]) continue;
    int pi = -1, pj = -1;
    for (size_t i = 0; i < na; ++i)
      if (d.member[c][1 + i]) pi = int(i);
    for (size_t j = 0; j < b.pieces.size(); ++j)
      if (d.member[c][1 + na + j]) pj = int(j);
    if (pi < 0 || pj < 0) throw std::logic_error("target cell not covered by validated covers");
    auto& bucket = buckets[{pi, pj}];
    for (int t : asmb.cell_tops[c]) bucket.push_back(t);
  }

  RefinedCover out;
  out.cover.target = a.target;
  int top = asmb.tri.top_dim();
  for (const auto& [key, tops] : buckets) {
    Polytope piece;
    piece.geom = a.target.geom;
    for (int t : tops) piece.simplices.push_back(asmb.tri.cell_simplex(top, t));
    out.cover.pieces.push_back(std::move(piece));
    out.provenance.push_back(key);
  }
  return out;
}

bool polytope_subset(const Polytope& inner, const Polytope& outer) {
  if (!(inner.geom == outer.geom)) throw std::invalid_argument("subset geometry mismatch");
  if (inner.geom.kind == GeomKind::Empty || inner.simplices.empty()) return true;
  if (inner.geom.kind == GeomKind::Spherical && inner.geom.dim >= 2)
    return spherical_subset_any_dim(inner, outer);
  std::vector<const Polytope*> ptrs{&inner, &outer};
  Decomp d = decompose(ptrs);
  for (size_t c = 0; c < d.ncells; ++c)
    if (d.member[c][0] && !d.member[c][1]) return false;
  return true;
}

bool polytope_set_equal(const Polytope& a, const Polytope& b) {
  if (!(a.geom == b.geom)) throw std::invalid_argument("set_equal geometry mismatch");
  if (a.geom.kind == GeomKind::Empty) return true;
  if (a.simplices.empty() && b.simplices.empty()) return true;
  if (a.geom.kind == GeomKind::Spherical && a.geom.dim >= 2)
    return spherical_subset_any_dim(a, b) && spherical_subset_any_dim(b, a);
  if (a.simplices.empty() || b.simplices.empty()) {
    // one side empty: the other must have no interior, impossible for valid
    // nonempty polytopes, so just test subset both ways on the joint cells
  }
  std::vector<const Polytope*> ptrs{&a, &b};
  Decomp d = decompose(ptrs);
  for (size_t c = 0; c < d.ncells; ++c)
    if (bool(d.member[c][0]) != bool(d.member[c][1])) return false;
  return true;
}

Rational polytope_volume(const Polytope& p) {
  if (p.geom.kind != GeomKind::Euclidean)
    throw std::invalid_argument("volume is defined for Euclidean polytopes only");
  if (p.simplices.empty()) return Rational(0);
  std::vector<const Polytope*> ptrs{&p};
  Decomp d = decompose(ptrs);
  Rational total(0);
  for (size_t c = 0; c < d.ncells; ++c)
    if (d.member[c][0]) total += cell_measure(d, c);
  return total;
}

bool is_simplicial_complex(const Triangulation& t, std::string* why) {
  auto fail = [&](const std::string& r) {
    if (why) *why = r;
    return false;
  };
  if (t.cells.empty()) return true;
  // Closure under faces and dedup.
  for (int d = 0; d <= t.top_dim(); ++d) {
    std::set<std::vector<int>> seen;
    for (const auto& cell : t.cells[d]) {
      if (int(cell.size()) != d + 1) return fail("cell arity mismatch");
      if (!std::is_sorted(cell.begin(), cell.end())) return fail("cell not sorted");
      if (!seen.insert(cell).second) return fail("duplicate cell");
      if (d > 0) {
        for (size_t skip = 0; skip < cell.size(); ++skip) {
          std::vector<int> face;
          for (size_t i = 0; i < cell.size(); ++i)
            if (i != skip) face.push_back(cell[i]);
          if (!std::binary_search(t.cells[d - 1].begin(), t.cells[d - 1].end(), face) &&
              std::find(t.cells[d - 1].begin(), t.cells[d - 1].end(), face) ==
                  t.cells[d - 1].end())
            return fail("missing face");
        }
      }
    }
  }
  if (t.geom.kind == GeomKind::Euclidean && t.geom.dim == 2) {
    // Exact geometric conformity. With (a) nondegenerate pairwise
    // interior-disjoint triangles, (b) no vertex interior to an edge, (c) no
    // vertex interior to a triangle, any two closed triangles meet in a
    // common face.
    std::vector<ConvexPoly> tris;
    Polytope whole;
    whole.geom = t.geom;
    for (size_t i = 0; i < t.cells[2].size(); ++i) {
      const auto& c = t.cells[2][i];
      P2 a = to_p2(t.vertices[c[0]]), b = to_p2(t.vertices[c[1]]), p = to_p2(t.vertices[c[2]]);
      if (orient(a, b, p) == 0) return fail("degenerate triangle");
      tris.push_back(make_ccw_triangle(a, b, p));
      whole.simplices.push_back(t.cell_simplex(2, int(i)));
    }
    Rational area_sum(0);
    for (const auto& tr : tris) area_sum += poly_area(tr);
    if (area_sum != polytope_volume(whole)) return fail("top cells overlap");
    for (size_t vi = 0; vi < t.vertices.size(); ++vi) {
      P2 p = to_p2(t.vertices[vi]);
      for (const auto& e : t.cells[1]) {
        P2 a = to_p2(t.vertices[e[0]]), b = to_p2(t.vertices[e[1]]);
        if (p == a || p == b) continue;
        if (point_on_segment(p, a, b)) return fail("vertex interior to an edge");
      }
      for (size_t i = 0; i < tris.size(); ++i) {
        const auto& c = t.cells[2][i];
        if (std::find(c.begin(), c.end(), int(vi)) != c.end()) continue;
        const auto& tr = tris[i].vs;
        if (orient(tr[0], tr[1], p) > 0 && orient(tr[1], tr[2], p) > 0 &&
            orient(tr[2], tr[0], p) > 0)
          return fail("vertex interior to a triangle");
      }
    }
  }
  if (t.geom.kind == GeomKind::Euclidean && t.geom.dim == 1) {
    // Segments with pairwise disjoint interiors.
    std::vector<std::pair<Rational, Rational>> segs;
    for (const auto& c : t.cells[1]) {
      Rational a = t.vertices[c[0]][0], b = t.vertices[c[1]][0];
      if (a > b) std::swap(a, b);
      if (a == b) return fail("degenerate segment");
      segs.emplace_back(a, b);
    }
    std::sort(segs.begin(), segs.end(),
              [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
    for (size_t i = 0; i + 1 < segs.size(); ++i)
      if (segs[i].second > segs[i + 1].first) return fail("segment interiors overlap");
  }
  return true;
}

}  // namespace scl
