#pragma once

// Exact planar primitives shared by the arrangement engine and the
// plane-decomposition code. Everything is over Q; no epsilons anywhere.

#include "scl/qlinalg.hpp"

namespace scl {

struct P2 {
  Rational x, y;
  bool operator==(const P2& o) const { return x == o.x && y == o.y; }
  bool operator<(const P2& o) const {
    int c = cmp(x, o.x);
    if (c != 0) return c < 0;
    return cmp(y, o.y) < 0;
  }
  P2 operator+(const P2& o) const { return {x + o.x, y + o.y}; }
  P2 operator-(const P2& o) const { return {x - o.x, y - o.y}; }
};

inline Rational cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
inline int orient(const P2& o, const P2& a, const P2& b) { return sgn(cross(o, a, b)); }

// Oriented line a x + b y = c with (a, b, c) primitive integers. side() > 0 is
// the open half plane the normal (a, b) points into.
struct Line2 {
  Int a, b, c;
  int side(const P2& p) const;
  bool operator==(const Line2& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Line2& o) const;
  Line2 flipped() const { return Line2{-a, -b, -c}; }
  // Canonical representative of the unoriented line (for dedup).
  Line2 canonical_unoriented() const;
};

Line2 line_through(const P2& p, const P2& q);  // p != q
std::optional<P2> line_intersection(const Line2& l, const Line2& m);
bool point_on_segment(const P2& p, const P2& a, const P2& b);  // closed segment

// Convex polygon, vertices in counterclockwise order, no three collinear
// consecutive vertices required (construction keeps them clean).
struct ConvexPoly {
  std::vector<P2> vs;
  bool empty_area() const { return vs.size() < 3; }
};

Rational poly_area(const ConvexPoly& p);  // >= 0 for CCW
P2 poly_vertex_centroid(const ConvexPoly& p);
// Keep the side(p) >= 0 part; result may be degenerate (fewer than 3 vertices).
ConvexPoly clip_half_plane(const ConvexPoly& p, const Line2& l);
ConvexPoly clip_to_poly(ConvexPoly p, const ConvexPoly& window);
// true if p is inside or on the boundary
bool point_in_convex(const P2& p, const ConvexPoly& poly);
bool point_in_triangle(const P2& p, const P2& a, const P2& b, const P2& c);
ConvexPoly make_ccw_triangle(P2 a, P2 b, P2 c);  // throws if collinear

}  // namespace scl
