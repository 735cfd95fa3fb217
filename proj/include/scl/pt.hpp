#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scl/geometry.hpp"

namespace scl {

// Formal integer combination of polytopes in one geometry.
struct FormalPolytopeSum {
  GeometryId geom;
  std::vector<std::pair<Int, Polytope>> terms;
};

// Class in the polytope group, in normal form: one conforming triangulation
// of every support together with an integer label per top cell. The class is
// the integer-valued step function the labels describe, up to measure zero;
// comparisons pass through a common refinement, so the particular
// triangulation carried here is never load-bearing.
struct PtElement {
  GeometryId geom;
  Triangulation tri;        // no cells <=> empty support
  std::vector<Int> labels;  // one per top cell of tri

  bool is_zero() const;  // every label vanishes
};

// Normal form of a formal sum: triangulate all supports together and label
// each top cell with the signed sum of the coefficients of the terms
// covering it. Subdivision relations die here: a polytope minus the pieces
// of any weak subdivision of it labels every cell zero.
PtElement pt_class(const FormalPolytopeSum& s);
PtElement pt_class(const Polytope& p);  // class of one polytope

// True iff the labels agree on every top cell of a common refinement.
bool pt_equal(const PtElement& a, const PtElement& b);

// Image of a class under an isometry. Twisted (the default, the homology
// convention) multiplies the labels by the det sign of the linear part;
// untwisted moves the supports only.
PtElement g_act(const Isometry& g, const PtElement& a, bool twisted = true);

// Chain in the subdivision category: each stage is a tuple of
// top-dimensional simplices with pairwise disjoint interiors, and each later
// stage refines every simplex of the previous one and may add simplices
// disjoint from all of them.
struct SubdivisionChain {
  GeometryId geom;                            // Euclidean only
  std::vector<std::vector<Polytope>> stages;  // one single-simplex polytope per entry
};

struct ColimitReport {
  bool ok = true;
  int stages = 0;
  int refined_generators = 0;  // simplices checked against their refinements
  int added_simplices = 0;     // generators entering by the zero map
  std::string detail;          // first mismatch, empty when ok
};

// Checks that the transition maps of the chain preserve classes: the class
// of each refined simplex must equal the class of the sum of its pieces at
// the next stage, and added simplices enter at zero. Throws
// std::invalid_argument when the chain itself is invalid (a stage overlaps
// itself, a simplex disappears, or a new simplex neither refines an old one
// nor avoids them all).
ColimitReport verify_colimit_presentation(const SubdivisionChain& chain);

// Class in the Steinberg quotient of a spherical desk: the polytope group of
// the circle or point pair cut at a declared finite ray set, modulo the
// subgroup generated by suspension classes from the listed proper
// subspaces. Exact for S0 and S1; the quotient computed is that of the
// sub-configuration the declared rays span.
struct StElement {
  GeometryId geom;
  std::vector<Subspace> subspaces;  // canonical, sorted, intersection-closed
  std::vector<QVector> rays;        // canonical rays in circular order
  std::vector<Int> rep;             // canonical coset representative per desk cell
  int pt_rank = 0;                  // rank of the desk polytope group (cell count)
  int susp_rank = 0;                // rank of the suspension subgroup
  int st_rank = 0;                  // pt_rank - susp_rank
  bool torsion_free = false;        // the quotient is free (split exactness)

  bool is_zero() const;
};

// Pre: every listed subspace is proper and the list is closed under pairwise
// intersection (the zero subspace contributes the full-sphere class). The
// support vertices of a must lie in the declared ray set, and for each
// listed line both boundary rays of its suspension half-circles must be
// declared; violations throw std::invalid_argument("ray set not closed
// under the needed operations").
StElement steinberg_class(const PtElement& a, const std::vector<Subspace>& subspaces,
                          const std::vector<QVector>& rays);

}  // namespace scl
