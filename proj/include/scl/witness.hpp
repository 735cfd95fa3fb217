#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scl/geometry.hpp"
#include "scl/qlinalg.hpp"

namespace scl {

// One-move-per-piece scissors congruence certificate: the pieces weakly
// subdivide the source, the moved pieces weakly subdivide the target, and
// every move lies in the declared group.
struct DecompositionWitness {
  Polytope source;
  Polytope target;
  std::vector<std::pair<Polytope, Isometry>> pieces;
  MoveGroup group = MoveGroup::Translations;
};

// Re-derives every claim of a witness from scratch; trusts nothing about how
// the witness was produced. A false verdict fills *why with the violation.
bool verify_witness(const DecompositionWitness& w, std::string* why = nullptr);

// Swaps the roles of source and target; the moved pieces become the pieces.
DecompositionWitness invert_witness(const DecompositionWitness& w);

// Chains two witnesses: first carries the source onto a middle polytope,
// second carries that middle polytope onto the target. The middle polytopes
// must agree as sets. Euclidean plane only. Throws on a chain mismatch.
DecompositionWitness compose_witness(const DecompositionWitness& first,
                                     const DecompositionWitness& second);

// Outcome of a decision procedure: either a verified-style witness or an
// inequality certificate carrying both exact measures.
struct ScissorsDecision {
  bool congruent = false;
  std::optional<DecompositionWitness> witness;
  Rational source_value;
  Rational target_value;
  std::string measure;  // "length" or "area"
};

// Interval unions on the line under translations. Greedy fragment matching;
// equal total length always yields a witness.
ScissorsDecision decide_length_e1(const Polytope& source, const Polytope& target);

// Polygons in the plane under translations and point reflections. Equal area
// always yields a witness: each triangle passes through a parallelogram and a
// stack of unit-width rectangles. Two translates of one polygon short-circuit
// to a single translated piece.
ScissorsDecision decide_area_e2(const Polytope& source, const Polytope& target);

// Area together with one signed edge length per primitive direction, the
// complete invariants for polygons under translations alone. Edges are walked
// counterclockwise; a direction's weight is measured in units of its primitive
// integer vector. Zero weights are dropped; directions are sorted.
struct TranslationInvariants {
  Rational area;
  std::vector<std::pair<QVector, Rational>> edge_weights;
  bool operator==(const TranslationInvariants& o) const {
    return area == o.area && edge_weights == o.edge_weights;
  }
};

TranslationInvariants translation_invariants_e2(const Polytope& p);

// Symbolic edge data of a solid: each edge carries a length symbol, a
// dihedral angle symbol, and a positive rational multiplicity that absorbs
// the rational length scale.
struct MeasuredEdge {
  std::string length;
  std::string angle;
  Rational multiplicity;
};

struct MeasuredPolytope {
  std::vector<MeasuredEdge> edges;
};

// Declared rational-linear relations among the symbols. "pi" is reserved: it
// is always an angle symbol and angle relations may mention it. Symbols not
// tied to "pi" by any relation are treated as rationally independent of it.
struct AngleRelationSet {
  std::vector<std::string> length_symbols;
  std::vector<std::string> angle_symbols;  // "pi" implicit, never listed
  std::vector<std::map<std::string, Rational>> length_relations;
  std::vector<std::map<std::string, Rational>> angle_relations;
};

// Element of lengths tensor (angles mod pi), written in reduced coordinates:
// both factors are reduced modulo the declared relation spans, with "pi"
// itself quotiented out of the angle factor.
struct DehnElement {
  std::vector<std::string> length_symbols;
  std::vector<std::string> angle_symbols;  // ends with "pi"
  QMatrix coords;                          // lengths by angles
  bool is_zero() const;
  DehnElement& operator+=(const DehnElement& o);  // same relation set
};

// Throws if a relation forces pi itself to vanish, or on unknown symbols,
// reserved-symbol clashes, or nonpositive multiplicities.
DehnElement dehn_invariant(const MeasuredPolytope& p, const AngleRelationSet& rel);

// Axis-aligned box with side lengths a, b, c: every edge has a right dihedral
// angle, and the four parallel edges of each length merge into one measured
// edge of multiplicity four times the side length.
MeasuredPolytope measured_box(const Rational& a, const Rational& b, const Rational& c);

// Relation set for boxes: one unit length symbol, one right angle tied to pi
// by right = pi/2.
AngleRelationSet box_relations();

}  // namespace scl
