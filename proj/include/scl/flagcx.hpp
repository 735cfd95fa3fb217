#pragma once

#include <map>
#include <utility>
#include <vector>

#include "scl/chains.hpp"
#include "scl/geometry.hpp"

namespace scl {

// Finite poset on 0..n-1 given by its full relation.
struct FinitePoset {
  int n = 0;
  std::vector<std::vector<char>> rel;  // rel[i][j] iff i <= j

  bool leq(int i, int j) const { return rel[size_t(i)][size_t(j)] != 0; }
  void validate() const;  // reflexive, antisymmetric, transitive
  std::vector<int> maximal() const;
};

// All nonempty strict chains in ascending poset order, listed by length
// then lexicographically by element index.
std::vector<std::vector<int>> poset_chains(const FinitePoset& p);

// Abstract simplicial complex presented by dimension; simplices[d] holds
// sorted vertex tuples and every face of a simplex is present.
struct OrderComplex {
  int vertices = 0;
  std::vector<std::vector<std::vector<int>>> simplices;

  ChainComplex chains() const;  // simplicial boundary, alternating signs
};

OrderComplex order_complex(const FinitePoset& p);
// Two new cone vertices under and over everything; the suspension of the
// empty complex is the two poles alone.
OrderComplex unreduced_suspension(const OrderComplex& c);

// Intersection-closed poset of linear subspaces with a unique top element.
// Geometric dimension is linear dimension minus one, which covers both the
// spherical convention (S(V) for linear V) and, in the homogeneous chart,
// affine Euclidean subspaces; the zero subspace is the empty geometric
// subspace and is excluded throughout.
struct SubspacePoset {
  Subspace ambient;
  std::vector<Subspace> elements;  // sorted by dimension then basis, top last
  bool euclidean_chart = false;    // affine convention: no subspaces at infinity

  int size() const { return int(elements.size()); }
  int top_index() const { return size() - 1; }
  bool leq(int i, int j) const { return elements[size_t(j)].contains(elements[size_t(i)]); }
  FinitePoset relation() const;
  std::vector<int> geometric_dims() const;  // linear dim - 1, per element
};

// Smallest intersection-closed family containing the generators, plus the
// ambient top. Intersections of dimension zero are dropped; in the
// Euclidean chart so are subspaces inside the hyperplane x0 = 0.
SubspacePoset generate_poset(const std::vector<Subspace>& generators, const Subspace& ambient,
                             bool euclidean_chart = false);

// T = order complex of the proper part; ST = its unreduced suspension.
std::pair<OrderComplex, OrderComplex> tits_and_st(const SubspacePoset& p);

// Functor from a finite poset to chain complexes: one complex per element,
// one chain map per strict relation, strictly functorial.
struct PosetDiagram {
  FinitePoset poset;
  std::vector<ChainComplex> value;
  std::map<std::pair<int, int>, ChainMap> maps;

  const ChainMap& map_of(int i, int j) const;
  void validate() const;  // chain maps commute and compose strictly
};

PosetDiagram point_diagram(const FinitePoset& p);  // every value a point

// Cellular chains of the homotopy colimit: a generator is a chain of the
// poset together with a cell of the value at the chain's minimum.
ChainComplex hocolim_complex(const PosetDiagram& d);

// Cofiber of the punctured hocolim into the top value; the poset must have
// a unique maximal element.
ChainComplex total_cofiber_over_poset(const PosetDiagram& d);

// Cube over the dimension sets: vertex S holds one copy of the value at
// the flag minimum for every flag of proper elements whose dimension set is
// exactly S; the empty set holds the top value; the maps delete flag
// entries. dims must be strictly monotone, with the top alone on top.
CubeDiagram cube_of(const PosetDiagram& d, const std::vector<int>& dims);

struct CompareReport {
  bool equal = false;
  HomologyResult left, right;
};

// Hocolim over the poset against hocolim over its chain poset (ordered by
// reverse inclusion), the barycentric model; equal homology expected.
CompareReport barycentric_compare(const PosetDiagram& d);

// Total cofiber over the poset against the one over the dimension cube.
CompareReport cube_model_compare(const PosetDiagram& d, const std::vector<int>& dims);

// Desk models of the poset's spaces: single points in the Euclidean chart;
// in the spherical one, cross-polytope style models on a declared
// antipode-closed ray set (S0 and S1 ambients).
PosetDiagram desk_diagram(const SubspacePoset& p, GeomKind kind,
                          const std::vector<QVector>& rays = {});

struct PtDesk {
  CubeDiagram cube;
  ChainComplex tcofib;
  HomologyResult reduced;  // reduced homology of the pointed total cofiber
};

// The polytope-complex desk model: the dimension cube of the desk diagram
// and its total cofiber by iterated mapping cones.
PtDesk pt_complex_desk(const SubspacePoset& p, GeomKind kind,
                       const std::vector<QVector>& rays = {});

struct SolomonTitsReport {
  int degree = 0;             // expected concentration degree
  bool concentrated = false;  // reduced ST homology free and only there
  int rank = 0;               // rank in that degree
  HomologyResult st_homology;
};

// Reduced homology of the suspended order complex of the proper part,
// judged against concentration in the given degree; the full table is
// reported either way.
SolomonTitsReport solomon_tits_check(const SubspacePoset& p, int degree);

}  // namespace scl
