#include "scl/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "scl/planar.hpp"

namespace scl {

GeometryId GeometryId::euclidean(int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  return GeometryId{GeomKind::Euclidean, n};
}

GeometryId GeometryId::spherical(int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  return GeometryId{GeomKind::Spherical, n};
}

std::string GeometryId::str() const {
  switch (kind) {
    case GeomKind::Euclidean: return "E" + std::to_string(dim);
    case GeomKind::Spherical: return "S" + std::to_string(dim);
    case GeomKind::Empty: return "Empty";
  }
  return "Empty";
}

GeometryId GeometryId::parse(const std::string& s) {
  if (s == "Empty") return empty();
  if (s.size() >= 2 && (s[0] == 'E' || s[0] == 'S')) {
    for (size_t i = 1; i < s.size(); ++i)
      if (!isdigit(s[i])) throw std::invalid_argument("bad geometry id: " + s);
    int d = std::stoi(s.substr(1));
    return s[0] == 'E' ? euclidean(d) : spherical(d);
  }
  throw std::invalid_argument("bad geometry id: " + s);
}

QVector canonical_ray(const QVector& v) {
  // Positive scaling to the content-1 integer representative. The direction
  // (and with it the antipodal distinction) is preserved exactly.
  Int lcm_den = 1;
  bool nonzero = false;
  for (const auto& x : v) {
    if (x != 0) nonzero = true;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (!nonzero) throw std::invalid_argument("zero vector is not a ray");
  Int g = 0;
  std::vector<Int> scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  QVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(scaled[i] / g);
  return out;
}

bool same_ray(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  return canonical_ray(a) == canonical_ray(b);
}

// ---------------------------------------------------------------------------
// planar primitives

int Line2::side(const P2& p) const {
  // sign of a x + b y - c over Q, done in Z after clearing denominators
  Rational v = Rational(a) * p.x + Rational(b) * p.y - Rational(c);
  return sgn(v);
}

bool Line2::operator<(const Line2& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

Line2 Line2::canonical_unoriented() const {
  // Flip so the first nonzero of (a, b) is positive.
  if (a > 0 || (a == 0 && b > 0)) return *this;
  return flipped();
}

Line2 line_through(const P2& p, const P2& q) {
  if (p == q) throw std::invalid_argument("line through identical points");
  // direction (dx, dy); normal (-dy, dx) so the left of p->q is side() > 0;
  // c = normal . p
  Rational dx = q.x - p.x, dy = q.y - p.y;
  Rational a = -dy, b = dx, c = dx * p.y - dy * p.x;
  // clear denominators, divide by content
  Int l = 1;
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Int ia = a.get_num() * (l / a.get_den());
  Int ib = b.get_num() * (l / b.get_den());
  Int ic = c.get_num() * (l / c.get_den());
  Int g = 0;
  mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
  return Line2{ia / g, ib / g, ic / g};
}

std::optional<P2> line_intersection(const Line2& l, const Line2& m) {
  Rational det = Rational(l.a) * Rational(m.b) - Rational(l.b) * Rational(m.a);
  if (det == 0) return std::nullopt;
  Rational x = (Rational(l.c) * Rational(m.b) - Rational(l.b) * Rational(m.c)) / det;
  Rational y = (Rational(l.a) * Rational(m.c) - Rational(l.c) * Rational(m.a)) / det;
  return P2{x, y};
}

bool point_on_segment(const P2& p, const P2& a, const P2& b) {
  if (orient(a, b, p) != 0) return false;
  // collinear: check the box
  if (cmp(p.x, std::min(a.x, b.x)) < 0 || cmp(p.x, std::max(a.x, b.x)) > 0) return false;
  if (cmp(p.y, std::min(a.y, b.y)) < 0 || cmp(p.y, std::max(a.y, b.y)) > 0) return false;
  return true;
}

Rational poly_area(const ConvexPoly& p) {
  Rational twice(0);
  int n = int(p.vs.size());
  for (int i = 0; i < n; ++i) {
    const P2& a = p.vs[i];
    const P2& b = p.vs[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

P2 poly_vertex_centroid(const ConvexPoly& p) {
  Rational x(0), y(0);
  for (const auto& v : p.vs) {
    x += v.x;
    y += v.y;
  }
  Rational n(long(p.vs.size()));
  return P2{x / n, y / n};
}

ConvexPoly clip_half_plane(const ConvexPoly& p, const Line2& l) {
  ConvexPoly out;
  int n = int(p.vs.size());
  if (n == 0) return out;
  std::vector<int> sides(n);
  for (int i = 0; i < n; ++i) sides[i] = l.side(p.vs[i]);
  for (int i = 0; i < n; ++i) {
    const P2& cur = p.vs[i];
    const P2& nxt = p.vs[(i + 1) % n];
    int sc = sides[i], sn = sides[(i + 1) % n];
    if (sc >= 0) out.vs.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      Line2 edge = line_through(cur, nxt);
      auto ip = line_intersection(edge, l);
      out.vs.push_back(*ip);  // transversal by the sign change
    }
  }
  // drop exact duplicates introduced by on-line vertices
  ConvexPoly clean;
  for (const auto& v : out.vs)
    if (clean.vs.empty() || !(clean.vs.back() == v)) clean.vs.push_back(v);
  while (clean.vs.size() > 1 && clean.vs.front() == clean.vs.back()) clean.vs.pop_back();
  return clean;
}

ConvexPoly clip_to_poly(ConvexPoly p, const ConvexPoly& window) {
  int n = int(window.vs.size());
  for (int i = 0; i < n && !p.empty_area(); ++i) {
    Line2 l = line_through(window.vs[i], window.vs[(i + 1) % n]);
    // window is CCW, so the interior is on the positive side
    p = clip_half_plane(p, l);
  }
  return p;
}

bool point_in_convex(const P2& p, const ConvexPoly& poly) {
  int n = int(poly.vs.size());
  if (n < 3) return false;
  for (int i = 0; i < n; ++i)
    if (orient(poly.vs[i], poly.vs[(i + 1) % n], p) < 0) return false;
  return true;
}

bool point_in_triangle(const P2& p, const P2& a, const P2& b, const P2& c) {
  int o = orient(a, b, c);
  if (o == 0) return false;
  if (o > 0) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
  }
  return orient(a, c, p) >= 0 && orient(c, b, p) >= 0 && orient(b, a, p) >= 0;
}

ConvexPoly make_ccw_triangle(P2 a, P2 b, P2 c) {
  int o = orient(a, b, c);
  if (o == 0) throw std::invalid_argument("degenerate triangle");
  if (o < 0) std::swap(b, c);
  return ConvexPoly{{a, b, c}};
}

// ---------------------------------------------------------------------------
// isometries

Isometry Isometry::identity(GeometryId g) {
  return Isometry{g, QMatrix::identity(g.ambient())};
}

Isometry Isometry::translation(int dim, const QVector& t) {
  if (int(t.size()) != dim) throw std::invalid_argument("translation dimension mismatch");
  QMatrix m = QMatrix::identity(dim + 1);
  for (int i = 0; i < dim; ++i) m.at(i + 1, 0) = t[i];
  return Isometry{GeometryId::euclidean(dim), m};
}

Isometry Isometry::point_reflection(int dim, const QVector& center) {
  if (int(center.size()) != dim) throw std::invalid_argument("reflection center mismatch");
  QMatrix m = QMatrix::identity(dim + 1);
  for (int i = 0; i < dim; ++i) {
    m.at(i + 1, i + 1) = Rational(-1);
    m.at(i + 1, 0) = 2 * center[i];  // x -> 2c - x
  }
  return Isometry{GeometryId::euclidean(dim), m};
}

namespace {

QMatrix linear_part(const Isometry& g) {
  if (g.geom.kind == GeomKind::Spherical) return g.m;
  int n = g.geom.dim;
  QMatrix l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l.at(i, j) = g.m.at(i + 1, j + 1);
  return l;
}

bool is_orthogonal(const QMatrix& m) {
  return m.transpose() * m == QMatrix::identity(m.rows);
}

}  // namespace

Isometry Isometry::from_matrix(GeometryId g, QMatrix m) {
  int n = g.ambient();
  if (m.rows != n || m.cols != n) throw std::invalid_argument("isometry matrix shape mismatch");
  Isometry iso{g, std::move(m)};
  if (g.kind == GeomKind::Spherical) {
    if (!is_orthogonal(iso.m)) throw std::invalid_argument("spherical isometry not orthogonal");
  } else if (g.kind == GeomKind::Euclidean) {
    if (iso.m.at(0, 0) != 1) throw std::invalid_argument("euclidean isometry must fix x0");
    for (int j = 1; j < n; ++j)
      if (iso.m.at(0, j) != 0) throw std::invalid_argument("euclidean isometry must fix x0");
    if (!is_orthogonal(linear_part(iso))) throw std::invalid_argument("linear part not orthogonal");
  } else {
    throw std::invalid_argument("no isometries of the empty geometry");
  }
  return iso;
}

int Isometry::linear_sign() const {
  Rational d = determinant(linear_part(*this));
  return d > 0 ? 1 : -1;
}

Point Isometry::apply_point(const Point& p) const {
  if (geom.kind == GeomKind::Spherical) {
    return canonical_ray(mul(m, p));
  }
  QVector h(geom.dim + 1);
  h[0] = 1;
  for (int i = 0; i < geom.dim; ++i) h[i + 1] = p[i];
  QVector r = mul(m, h);
  QVector out(geom.dim);
  for (int i = 0; i < geom.dim; ++i) out[i] = r[i + 1];
  return out;
}

Isometry Isometry::compose(const Isometry& other) const {
  if (!(geom == other.geom)) throw std::invalid_argument("compose geometry mismatch");
  return Isometry{geom, m * other.m};
}

Isometry Isometry::inverted() const {
  auto inv = inverse(m);
  if (!inv) throw std::logic_error("isometry matrix not invertible");
  return Isometry{geom, *inv};
}

bool Isometry::is_translation() const {
  if (geom.kind != GeomKind::Euclidean) return false;
  return linear_part(*this) == QMatrix::identity(geom.dim);
}

bool Isometry::linear_part_pm_identity() const {
  if (geom.kind != GeomKind::Euclidean) return false;
  QMatrix l = linear_part(*this);
  QMatrix id = QMatrix::identity(geom.dim);
  if (l == id) return true;
  for (auto& x : id.a) x = -x;
  return l == id;
}

bool move_in_group(const Isometry& g, MoveGroup group) {
  switch (group) {
    case MoveGroup::Translations: return g.is_translation();
    case MoveGroup::TranslationsPointReflections: return g.linear_part_pm_identity();
    case MoveGroup::Full: return true;
  }
  return false;
}

std::string move_group_str(MoveGroup g) {
  switch (g) {
    case MoveGroup::Translations: return "translations";
    case MoveGroup::TranslationsPointReflections: return "translations+point-reflections";
    case MoveGroup::Full: return "full";
  }
  return "full";
}

MoveGroup parse_move_group(const std::string& s) {
  if (s == "translations") return MoveGroup::Translations;
  if (s == "translations+point-reflections") return MoveGroup::TranslationsPointReflections;
  if (s == "full") return MoveGroup::Full;
  throw std::invalid_argument("unknown move group: " + s);
}

// ---------------------------------------------------------------------------
// simplex and polytope basics

bool simplex_degenerate(const GeometryId& g, const Simplex& s) {
  std::vector<QVector> vs;
  for (const auto& p : s.v) {
    if (g.kind == GeomKind::Euclidean) {
      QVector h(g.dim + 1);
      h[0] = 1;
      for (int i = 0; i < g.dim; ++i) h[i + 1] = p[i];
      vs.push_back(std::move(h));
    } else {
      vs.push_back(p);
    }
  }
  Subspace sp = Subspace::span_of(vs, g.ambient());
  return sp.dim() != int(s.v.size());
}

void validate_polytope(const Polytope& p) {
  if (p.geom.kind == GeomKind::Empty) {
    if (!p.simplices.empty()) throw std::invalid_argument("empty geometry with simplices");
    return;
  }
  int expect = p.geom.dim + 1;  // top simplices: E^n needs n+1 points, S^n needs n+1 rays
  for (const auto& s : p.simplices) {
    if (int(s.v.size()) != expect)
      throw std::invalid_argument("simplex vertex count mismatch for " + p.geom.str());
    for (const auto& pt : s.v) {
      int want = p.geom.kind == GeomKind::Euclidean ? p.geom.dim : p.geom.dim + 1;
      if (int(pt.size()) != want) throw std::invalid_argument("point coordinate count mismatch");
      if (p.geom.kind == GeomKind::Spherical && !(canonical_ray(pt) == pt))
        throw std::invalid_argument("spherical vertex not a canonical primitive ray");
    }
    if (simplex_degenerate(p.geom, s)) throw std::invalid_argument("degenerate simplex");
    // Independent generators make a spherical simplex a salient cone
    // automatically; nothing extra to check there.
  }
}

Subspace span_of_polytope(const Polytope& p) {
  validate_polytope(p);
  if (p.simplices.empty()) throw std::invalid_argument("span of an empty polytope");
  std::vector<Point> pts;
  for (const auto& s : p.simplices) pts.insert(pts.end(), s.v.begin(), s.v.end());
  return span_of_points(p.geom, pts);
}

Subspace span_of_points(const GeometryId& g, const std::vector<Point>& pts) {
  std::vector<QVector> vs;
  for (const auto& p : pts) {
    if (g.kind == GeomKind::Euclidean) {
      QVector h(g.dim + 1);
      h[0] = 1;
      for (int i = 0; i < g.dim; ++i) h[i + 1] = p[i];
      vs.push_back(std::move(h));
    } else {
      vs.push_back(p);
    }
  }
  return Subspace::span_of(vs, g.ambient());
}

Rational simplex_volume(const GeometryId& g, const Simplex& s) {
  if (g.kind != GeomKind::Euclidean)
    throw std::invalid_argument("volume is defined for Euclidean simplices only");
  int n = g.dim;
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = s.v[i + 1][j] - s.v[0][j];
  Rational det = determinant(m);
  if (det < 0) det = -det;
  Rational fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  return det / fact;
}

Polytope apply_isometry(const Polytope& p, const Isometry& g) {
  if (!(p.geom == g.geom)) throw std::invalid_argument("apply_isometry geometry mismatch");
  Polytope out;
  out.geom = p.geom;
  for (const auto& s : p.simplices) {
    Simplex t;
    for (const auto& v : s.v) t.v.push_back(g.apply_point(v));
    out.simplices.push_back(std::move(t));
  }
  return out;
}

Simplex Triangulation::cell_simplex(int dim, int idx) const {
  Simplex s;
  for (int vid : cells[dim][idx]) s.v.push_back(vertices[vid]);
  return s;
}

}  // namespace scl
