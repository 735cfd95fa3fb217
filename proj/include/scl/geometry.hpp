#pragma once

#include <string>
#include <vector>

#include "scl/qlinalg.hpp"

namespace scl {

enum class GeomKind { Euclidean, Spherical, Empty };

// Geometry tag. dim is the geometric dimension: E^n has affine points with n
// coordinates, S^n sits in an ambient linear space of dimension n+1. The
// homogeneous ambient dimension is dim+1 in both cases.
struct GeometryId {
  GeomKind kind = GeomKind::Empty;
  int dim = -1;

  static GeometryId euclidean(int n);
  static GeometryId spherical(int n);
  static GeometryId empty() { return GeometryId{}; }
  int ambient() const { return dim + 1; }
  bool operator==(const GeometryId& o) const { return kind == o.kind && dim == o.dim; }
  std::string str() const;                      // "E2", "S1", "Empty"
  static GeometryId parse(const std::string&);  // throws std::invalid_argument
};

// Euclidean point: dim affine coordinates. Spherical point: a ray through the
// origin, stored as the canonical primitive integer vector (content 1) reached
// by positive scaling; antipodal rays are distinct points.
using Point = QVector;

QVector canonical_ray(const QVector& v);  // throws on the zero vector
bool same_ray(const QVector& a, const QVector& b);

struct Simplex {
  std::vector<Point> v;
};

// Finite union of top-dimensional simplices; overlaps between simplices are
// permitted in input and normalized away by the set-level operations.
struct Polytope {
  GeometryId geom;
  std::vector<Simplex> simplices;
};

struct Cover {
  Polytope target;
  std::vector<Polytope> pieces;
};

struct Isometry {
  GeometryId geom;
  QMatrix m;  // ambient x ambient; Euclidean: first row (1, 0, ..., 0)

  static Isometry identity(GeometryId g);
  static Isometry translation(int dim, const QVector& t);
  static Isometry point_reflection(int dim, const QVector& center);
  // Validates shape, orthogonality of the linear part, and the homogeneous
  // first row for Euclidean geometry; throws std::invalid_argument.
  static Isometry from_matrix(GeometryId g, QMatrix m);

  int linear_sign() const;  // det of the linear part, +1 or -1
  Point apply_point(const Point& p) const;
  Isometry compose(const Isometry& other) const;  // acts as this ∘ other
  Isometry inverted() const;
  bool is_translation() const;
  bool linear_part_pm_identity() const;  // linear part in {I, -I}
};

enum class MoveGroup { Translations, TranslationsPointReflections, Full };
bool move_in_group(const Isometry& g, MoveGroup group);
std::string move_group_str(MoveGroup g);
MoveGroup parse_move_group(const std::string& s);

void validate_polytope(const Polytope& p);  // throws std::invalid_argument
bool simplex_degenerate(const GeometryId& g, const Simplex& s);

// Linear span in the homogeneous ambient space: Euclidean points homogenize
// to (1, x); spherical rays embed as themselves.
Subspace span_of_points(const GeometryId& g, const std::vector<Point>& pts);
Subspace span_of_polytope(const Polytope& p);  // throws on an empty polytope

Rational simplex_volume(const GeometryId& g, const Simplex& s);  // Euclidean only
// Volume of the underlying set (overlapping simplices counted once).
Rational polytope_volume(const Polytope& p);

Polytope apply_isometry(const Polytope& p, const Isometry& g);

// Simplicial complex presented by dimension: cells[d] holds sorted vertex-id
// tuples. piece_cells[i] lists the top cells covering input polytope i.
struct Triangulation {
  GeometryId geom;
  std::vector<Point> vertices;
  std::vector<std::vector<std::vector<int>>> cells;
  std::vector<std::vector<int>> piece_cells;

  int top_dim() const { return int(cells.size()) - 1; }
  const std::vector<std::vector<int>>& top_cells() const { return cells.back(); }
  Simplex cell_simplex(int dim, int idx) const;
};

// Conforming triangulation of the union of the inputs. Every input polytope
// becomes a union of output top cells. Geometries: E1, E2, S0, S1.
Triangulation triangulate(const std::vector<Polytope>& ps);
inline Triangulation triangulate_one(const Polytope& p) { return triangulate({p}); }

// Structural check that a Triangulation is a simplicial complex whose top
// cells have pairwise disjoint interiors (exact, see implementation notes).
bool is_simplicial_complex(const Triangulation& t, std::string* why = nullptr);

struct SubdivisionReport {
  bool valid = false;
  std::string reason;   // empty when valid
  std::string witness;  // interior sample of a violating cell, when one exists
};

SubdivisionReport is_weak_subdivision(const Cover& c);

struct RefinedCover {
  Cover cover;
  std::vector<std::pair<int, int>> provenance;  // (piece of a, piece of b)
};

// Pre: a and b are valid weak subdivisions of the same set.
RefinedCover common_refinement(const Cover& a, const Cover& b);

// Set-level relations up to measure zero, same geometry required.
bool polytope_subset(const Polytope& inner, const Polytope& outer);
bool polytope_set_equal(const Polytope& a, const Polytope& b);

}  // namespace scl
