#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace scl {

// Exact scalar types. All arithmetic in the workbench is exact; no floating
// point anywhere. mpq_class values are kept canonical (gmp constructors do not
// canonicalize "p/q" input, so every entry point normalizes).
using Int = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational rational_of(long p, long q = 1);
// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);
// Inverse of parse_rational; denominator omitted when 1.
std::string format_rational(const Rational& x);

struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;  // row-major, rows*cols entries

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
  static QMatrix identity(int n);

  Rational& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  QVector row(int i) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
QVector mul(const QMatrix& m, const QVector& v);

// In-place reduced row echelon form: pivots are 1, pivot columns are cleared,
// zero rows sink to the bottom. Returns the rank; pivot_cols (if given)
// receives the pivot column indices in order. The result is the canonical
// representative of the row space.
int rref(QMatrix& m, std::vector<int>* pivot_cols = nullptr);
QMatrix rref_of(QMatrix m);
int rank_of(QMatrix m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
// One solution of m x = b, or nullopt if inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
// Basis of {x : m x = 0}, canonical (one vector per free column).
std::vector<QVector> kernel_basis(const QMatrix& m);

struct IMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IMatrix() = default;
  IMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
  static IMatrix identity(int n);

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  bool operator==(const IMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IMatrix operator*(const IMatrix& x, const IMatrix& y);
QMatrix to_qmatrix(const IMatrix& m);

// u * input * v = d with u, v unimodular and d diagonal, entries >= 0 and
// d_i | d_{i+1}. reconstruct() = u^{-1} d v^{-1} must equal the input.
struct SmithForm {
  IMatrix u, d, v;
  int rank = 0;
  std::vector<Int> divisors() const;  // the nonzero diagonal entries
  IMatrix reconstruct() const;
};

SmithForm smith_normal_form(IMatrix m);
// Divisors only, no transforms. Pre-eliminates unit pivots sparsely before
// falling back to the dense routine, which keeps large incidence matrices
// (entries mostly 0/±1) cheap.
std::vector<Int> elementary_divisors(const IMatrix& m);

// Sparse integer matrix used by the chain-complex layer.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  // entries[i] holds the (col, value) pairs of row i, value != 0.
  std::vector<std::vector<std::pair<int, Int>>> entries;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), entries(r) {}
  void add(int i, int j, const Int& v);  // accumulates, drops zeros lazily
  IMatrix dense() const;
};

std::vector<Int> elementary_divisors_sparse(const SparseIntMatrix& m);

// Row-style Hermite normal form of the row lattice: echelon over Z, positive
// pivots, entries above each pivot reduced into [0, pivot). Canonical for the
// lattice, zero rows dropped.
IMatrix hnf_rows(const IMatrix& m);
// Canonical representative of v modulo the row lattice of a HNF matrix.
std::vector<Int> reduce_mod_hnf(std::vector<Int> v, const IMatrix& hnf);

// Linear subspace of Q^ambient in canonical form: basis rows are the RREF of
// any spanning set, so two subspaces are equal iff their representations are.
struct Subspace {
  int ambient = 0;
  QMatrix basis;  // rank many rows, canonical RREF

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span_of(const std::vector<QVector>& vectors, int ambient);
  static Subspace row_space(QMatrix rows);

  int dim() const { return basis.rows; }
  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
  bool operator<(const Subspace& o) const;  // ordering for use as map keys
};

Subspace intersect(const Subspace& x, const Subspace& y);
Subspace sum(const Subspace& x, const Subspace& y);
// Complement w.r.t. a rational inner product (identity Gram when null).
// Requires gram symmetric positive definite.
Subspace orthogonal_complement(const Subspace& x, const QMatrix* gram = nullptr);
bool is_positive_definite(const QMatrix& g);

}  // namespace scl
