#pragma once

#include <string>
#include <vector>

#include "scl/chains.hpp"
#include "scl/flagcx.hpp"
#include "scl/qlinalg.hpp"

// Exact K-group tables at desk scale. The reals are replaced by a finite
// dimensional Q-vector space with labeled basis, which turns every
// exterior-power formula into computable linear algebra over Q.

namespace scl {

// Formal stand-in for R: d labeled basis elements playing the role of
// Q-linearly independent reals.
struct DeskReals {
  std::vector<std::string> labels;

  int dim() const { return int(labels.size()); }
  void validate() const;  // nonempty, labels distinct
  static DeskReals standard(int d);
};

// C(n, k) as int; desk sizes keep this small.
int binomial(int n, int k);

// Wedge-monomial basis of Lambda^q over a base of the given dimension.
// Monomials are strictly increasing index tuples in lexicographic order.
struct ExteriorPower {
  int base_dim = 0;
  int degree = 0;
  std::vector<std::vector<int>> monomials;

  int dim() const { return int(monomials.size()); }
};

ExteriorPower exterior_power(int base_dim, int q);

// Matrix of Lambda^q(f) in wedge-monomial bases; entries are q x q minors.
// f : Q^a -> Q^b as a b x a matrix gives a C(b,q) x C(a,q) result.
QMatrix exterior_map(const QMatrix& f, int q);

// One row of a K-group table. wedge_exponent k records the symbolic answer
// as the k-th wedge power of the reals (desk dimension C(d, k)); -1 when the
// entry has no wedge form.
struct KGroupRow {
  int degree = 0;
  int free_dim = 0;
  int wedge_exponent = -1;
  std::vector<Int> torsion;  // cyclic factors > 1
};

struct KGroupReport {
  std::string geometry;
  std::string group;
  int desk_dim = 0;       // d of the desk model; 0 when none is involved
  bool integral = false;  // true only for Euclidean translational tables
  std::string provenance;
  std::vector<KGroupRow> rows;

  const KGroupRow& row(int degree) const;  // throws on a missing degree
};

// The rationalized table: torsion dropped from every row.
KGroupReport rationalize(KGroupReport r);

// H_i of a desk vector group: Lambda^i V with its monomial basis.
ExteriorPower vector_group_homology(const DeskReals& v, int i);

// Independent oracle: rank of H_i(Z^d) from the Koszul complex of the
// d-torus, boundaries augmented mechanically and homology taken by Smith
// normal form. Throws "size cap exceeded" above d = 6.
int koszul_oracle(int d, int i);

// Translational line desk: K_n = Lambda^{n+1} V, dimension C(d, n+1).
KGroupReport k_line_translation(const DeskReals& v, int max_degree);

// Full isometry line desk: Z/2-coinvariants of the translational table. The
// generator acts by (-1)^{n+1} (negation on V) times an orientation twist of
// -1, so the even degrees survive. Disabling the twist is a diagnostic that
// flips the parity.
KGroupReport k_line_full(const DeskReals& v, int max_degree, bool twist = true);

enum class CircleGroup { SO2, O2 };

// Circle desks produce the line tables: the circle complex is the orbit of
// the line complex, so SO(2) matches the translational case and O(2) the
// full case. Rational identification only.
KGroupReport k_circle(const DeskReals& v, CircleGroup g, int max_degree);

enum class ZeroSphereGroup { Trivial, O1 };

// Zero-sphere tables. Unreduced tables report pi0 only (rank 2 for the
// trivial group, rank 1 for O(1)); the reduced O(1) table is the homology of
// Z/2 with sign coefficients from the 2-periodic resolution, Z/2 in every
// even degree through max_degree.
KGroupReport k_s0(ZeroSphereGroup g, bool reduced, int max_degree = 10);

// Kernel and cokernel dimensions of the stacked line-sum maps into
// Lambda^{m+1} and Lambda^{m+2} of V tensor Q^2. Their sum is the degree-m
// K-group of the translational plane desk.
struct DupontSplit {
  int m = 0;
  int kernel_dim = 0;
  int cokernel_dim = 0;

  int k_dim() const { return kernel_dim + cokernel_dim; }
};

DupontSplit dupont_splitting_e2(const std::vector<QVector>& lines, const DeskReals& v, int m);

// Dilation by a acts on the q-th splitting summand (q = 1 kernel, q = 2
// cokernel) as the scalar a^{m+q}; the check builds the dilation operator
// and verifies that operator minus scalar annihilates the summand.
struct EigenReport {
  Rational scalar;
  int summand_dim = 0;
  bool annihilated = false;
};

EigenReport dupont_eigenspace_check(const Rational& a, int m, int q,
                                    const std::vector<QVector>& lines, const DeskReals& v);

// Local-coefficient homology of the suspended flag complex of a linear
// subspace poset: degree-k generators are flags y_0 < ... < y_{k-1} < top
// with coefficient Lambda^q(y_0 tensor V); dropping the smallest entry
// applies the inclusion, dropping the top lands in the collapsed part.
// Rational ranks only.
HomologyResult dupont_general(const SubspacePoset& p, const DeskReals& v, int q);

// Reduced circle tables at torsion modulus N. The circle group is modeled
// as V plus a cyclic group of order N whose homology is assembled by
// Kunneth; the reduced K rows pair dimension C(d, k+1) with one order-N/2
// cyclic factor in each even degree. o2_rational lists the rational
// dimensions of the O(2) variant, zero in odd degrees.
struct ReducedCircleReport {
  int modulus = 0;
  int desk_dim = 0;
  std::vector<KGroupRow> group_rows;  // H_* of the circle group model
  std::vector<KGroupRow> k_rows;      // H_* of the reduced K table
  std::vector<int> o2_rational;
  bool rank_consistent = false;  // K row k matches group row k+1 rationally
};

ReducedCircleReport reduced_s1_table(int modulus, const DeskReals& v, int max_degree);

}  // namespace scl
