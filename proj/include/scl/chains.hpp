#pragma once

#include <map>
#include <utility>
#include <vector>

#include "scl/qlinalg.hpp"

namespace scl {

// Sparse integer matrix helpers shared by the complex machinery.
SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b);
bool sparse_is_zero(const SparseIntMatrix& m);
bool sparse_equal(const SparseIntMatrix& a, const SparseIntMatrix& b);
// Adds src into dst at the given offsets, scaled by sign.
void sparse_block_add(SparseIntMatrix* dst, const SparseIntMatrix& src, int row_off, int col_off,
                      int sign = 1);

// Bounded chain complex of free Z-modules. dims[k] is the rank in degree k;
// boundary[k] maps degree k to k-1 (dim(k-1) rows, dims[k] columns, so
// boundary[0] has zero rows). validate() checks shapes and dd = 0.
struct ChainComplex {
  std::vector<int> dims;
  std::vector<SparseIntMatrix> boundary;

  int top_degree() const { return int(dims.size()) - 1; }
  int dim(int k) const { return (k >= 0 && k <= top_degree()) ? dims[size_t(k)] : 0; }
  void validate() const;  // throws std::logic_error

  static ChainComplex zero();
  static ChainComplex point();  // one generator in degree 0
};

// Degreewise map f[k]: C_k -> D_k commuting with the boundaries. maps has
// one entry per degree of the source.
struct ChainMap {
  std::vector<SparseIntMatrix> maps;

  static ChainMap zero(const ChainComplex& c, const ChainComplex& d);
  static ChainMap identity(const ChainComplex& c);
  void validate(const ChainComplex& c, const ChainComplex& d) const;
};

struct HomologyResult {
  std::vector<int> free_rank;
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1, per degree
  std::vector<int> rational_rank;         // ranks with Q coefficients

  int top_nonzero() const;  // largest degree with nonzero homology, -1 if none
  bool same_as(const HomologyResult& o) const;  // equal in every degree
};

// Integral homology per degree by Smith normal form; rational ranks come
// from the same elementary divisors.
HomologyResult homology(const ChainComplex& c);
// Homology of the augmented complex: kills one Z in degree 0 for a
// nonempty complex, so a point has no reduced homology at all.
HomologyResult reduced_homology(const ChainComplex& c);

// Cone of f: degree k holds C_{k-1} (first block) and D_k; the boundary
// sends (c, d) to (-dc, f(c) + dd). For an inclusion of complexes this
// computes the relative homology of the pair.
ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& c, const ChainComplex& d);

// Cube of complexes over the subsets of {0..n-1}: one complex per subset
// and a map F(S) -> F(S minus i) for every i in S, with commuting squares.
struct CubeDiagram {
  int n = 0;
  std::vector<ChainComplex> vertex;              // indexed by bitmask, size 1 << n
  std::map<std::pair<int, int>, ChainMap> maps;  // (mask, direction in mask)

  const ChainMap& map_of(int mask, int dir) const;
  void validate() const;  // shapes, chain maps, commuting squares
};

// Iterated mapping cones over the cube directions, taken in the given order
// (default 0..n-1). Its homology is the reduced homology of the pointed
// total cofiber and does not depend on the order.
ChainComplex total_cofiber(const CubeDiagram& cube);
ChainComplex total_cofiber(const CubeDiagram& cube, const std::vector<int>& order);

Int euler_characteristic(const ChainComplex& c);

}  // namespace scl
