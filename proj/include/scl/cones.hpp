#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scl/geometry.hpp"
#include "scl/qlinalg.hpp"

// Exact machinery for salient simplicial cones in Q^n with n <= 4, the engine
// behind spherical polytopes above the circle: membership, triangulation of
// polyhedral generator sets, hyperplane splitting, joins with subspheres, and
// minimal suspension subspaces.

namespace scl {

// Linearly independent canonical primitive rays; the cone of their
// nonnegative combinations. Salient by construction.
struct Cone {
  std::vector<QVector> gens;

  int ambient() const { return gens.empty() ? 0 : int(gens[0].size()); }
  int dim() const { return int(gens.size()); }
};

// Spherical polytope <-> list of top-dimensional cones.
std::vector<Cone> polytope_cones(const Polytope& p);
Polytope cones_to_polytope(int sphere_dim, const std::vector<Cone>& cs);

// x in the closed cone.
bool cone_member(const Cone& c, const QVector& x);
// x + eps*d in the cone for every small enough eps > 0.
bool cone_member_eps(const Cone& c, const QVector& x, const QVector& d);

// Decompose the cone of an arbitrary generator list (assumed salient) into
// simplicial cones of full rank, pairwise interior-disjoint, by pulling from
// a deterministic apex. Returns {} for an empty or zero generator list.
std::vector<Cone> triangulate_cone(const std::vector<QVector>& gens);

// Split c into full-dimensional simplicial pieces on the two closed sides of
// the hyperplane {x : n.x = 0}; pieces are appended. A side without interior
// gets nothing.
void split_cone(const Cone& c, const QVector& n, std::vector<Cone>& nonneg,
                std::vector<Cone>& nonpos);

// Generators of c intersected with the hyperplane {x : n.x = 0}; polyhedral,
// not necessarily independent. Empty when the intersection is {0}.
std::vector<QVector> cone_hyperplane_section(const Cone& c, const QVector& n);

// All distinct facet hyperplane normals (canonical rays, one per unoriented
// hyperplane) of the given full-dimensional cones.
std::vector<QVector> facet_normals(const std::vector<Cone>& cs);

// Subset / equality of spherical polytopes in any ambient dimension, decided
// on interior samples of the joint facet-hyperplane refinement.
bool spherical_subset_any_dim(const Polytope& a, const Polytope& b);
bool spherical_set_equal_any_dim(const Polytope& a, const Polytope& b);

// p a polytope in the subsphere S(v), rays written in ambient coordinates.
// Returns the join p * S(v^perp), a top-dimensional polytope in the ambient
// sphere. An empty p is allowed only for v = 0, where the join is the whole
// sphere.
Polytope join_with_sphere(const Polytope& p, const Subspace& v);

struct SuspensionAnalysis {
  Subspace u;                         // minimal subspace with q = compressed * S(u^perp)
  Polytope compressed;                // polytope in S(u), ambient coordinates
  std::vector<QVector> active_normals;  // facet hyperplanes that carry boundary
};

// The smallest subspace u such that q is, up to measure zero, the join of a
// polytope in S(u) with S(u^perp). q must be top-dimensional in its sphere.
SuspensionAnalysis minimal_suspension_subspace(const Polytope& q);

}  // namespace scl
