#include "scl/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace scl {

Rational rational_of(long p, long q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r{Int(s)};
      return r;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVector QMatrix::row(int i) const {
  QVector r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j) == 0) continue;
        z.at(i, j) += xik * y.at(k, j);
      }
    }
  return z;
}

QVector mul(const QMatrix& m, const QVector& v) {
  if (int(v.size()) != m.cols) throw std::invalid_argument("matrix-vector shape mismatch");
  QVector r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

int rref(QMatrix& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Rational inv = 1 / m.at(rank, col);
    for (int j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

QMatrix rref_of(QMatrix m) {
  rref(m);
  return m;
}

int rank_of(QMatrix m) { return rref(m); }

Rational determinant(QMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  int rank = rref(aug, &pivots);
  // Singular inputs push pivots into the identity half.
  if (rank != n || pivots[n - 1] >= n) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (int(b.size()) != m.rows) throw std::invalid_argument("solve shape mismatch");
  QMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots;
  int rank = rref(aug, &pivots);
  for (int i = 0; i < rank; ++i)
    if (pivots[i] == m.cols) return std::nullopt;  // pivot in the constant column
  QVector x(m.cols, Rational(0));
  for (int i = 0; i < rank; ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots;
  int rank = rref(r, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols, Rational(0));
    v[free] = 1;
    for (int i = 0; i < rank; ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IMatrix IMatrix::identity(int n) {
  IMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMatrix operator*(const IMatrix& x, const IMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  IMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

QMatrix to_qmatrix(const IMatrix& m) {
  QMatrix q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rational(m.a[i]);
  return q;
}

std::vector<Int> SmithForm::divisors() const {
  std::vector<Int> ds;
  for (int i = 0; i < rank; ++i) ds.push_back(d.at(i, i));
  return ds;
}

IMatrix SmithForm::reconstruct() const {
  auto qu = inverse(to_qmatrix(u));
  auto qv = inverse(to_qmatrix(v));
  if (!qu || !qv) throw std::logic_error("smith transform not invertible");
  QMatrix q = (*qu) * to_qmatrix(d) * (*qv);
  IMatrix m(q.rows, q.cols);
  for (size_t i = 0; i < q.a.size(); ++i) {
    if (q.a[i].get_den() != 1) throw std::logic_error("smith reconstruction not integral");
    m.a[i] = q.a[i].get_num();
  }
  return m;
}

namespace {

// Shared dense Smith reduction. Transform accumulation is optional so the
// divisors-only path avoids the bookkeeping cost.
struct SmithWorker {
  IMatrix m;
  bool with_transforms;
  IMatrix u, v;

  explicit SmithWorker(IMatrix in, bool transforms) : m(std::move(in)), with_transforms(transforms) {
    if (with_transforms) {
      u = IMatrix::identity(m.rows);
      v = IMatrix::identity(m.cols);
    }
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    if (with_transforms)
      for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    if (with_transforms)
      for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_add(int dst, int src, const Int& f) {  // row dst += f * row src
    if (f == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
    if (with_transforms)
      for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void col_add(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
    if (with_transforms)
      for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void row_negate(int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
    if (with_transforms)
      for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  // Clears row t and column t below/right of the diagonal; on exit m.at(t,t)
  // divides nothing yet but is the only nonzero in its row and column.
  void reduce_at(int t) {
    for (;;) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) return;
      row_swap(t, pi);
      col_swap(t, pj);
      bool dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (m.at(i, t) != 0) dirty = true;  // remainder becomes the smaller pivot
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (m.at(t, j) != 0) dirty = true;
      }
      if (!dirty) return;
    }
  }

  // reduce_at swaps arbitrary submatrix entries onto the diagonal, so any
  // restart must re-clear everything from the restart position onward.
  void diagonalize_from(int start) {
    int n = std::min(m.rows, m.cols);
    for (int t = start; t < n; ++t) {
      reduce_at(t);
      if (m.at(t, t) == 0) break;  // submatrix exhausted
    }
    for (int t = start; t < n; ++t)
      if (m.at(t, t) < 0) row_negate(t);
  }

  void run() {
    int n = std::min(m.rows, m.cols);
    diagonalize_from(0);
    // Divisibility pass: fold d_j into d_i until each divides the next. Each
    // fix strictly shrinks |d_i| (it becomes gcd(d_i, d_j)), so this stops.
    for (int i = 0; i < n; ++i) {
      if (m.at(i, i) == 0) break;
      bool redo = true;
      while (redo) {
        redo = false;
        for (int j = i + 1; j < n; ++j) {
          if (m.at(j, j) == 0) break;
          if (m.at(j, j) % m.at(i, i) == 0) continue;
          col_add(i, j, Int(1));  // puts d_j into position (j, i)
          diagonalize_from(i);
          redo = true;
          break;
        }
      }
    }
  }
};

}  // namespace

SmithForm smith_normal_form(IMatrix in) {
  SmithWorker w(std::move(in), true);
  w.run();
  SmithForm f;
  f.d = std::move(w.m);
  f.u = std::move(w.u);
  f.v = std::move(w.v);
  f.rank = 0;
  int n = std::min(f.d.rows, f.d.cols);
  for (int i = 0; i < n; ++i)
    if (f.d.at(i, i) != 0) ++f.rank;
  return f;
}

void SparseIntMatrix::add(int i, int j, const Int& v) {
  if (v == 0) return;
  entries[i].emplace_back(j, v);
}

IMatrix SparseIntMatrix::dense() const {
  IMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, v] : entries[i]) m.at(i, j) += v;
  return m;
}

std::vector<Int> elementary_divisors_sparse(const SparseIntMatrix& sm) {
  // Row data as maps for random access; col -> rows index for pivot scans.
  int rows = sm.rows, cols = sm.cols;
  std::vector<std::map<int, Int>> row(rows);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, v] : sm.entries[i]) {
      auto it = row[i].find(j);
      if (it == row[i].end())
        row[i][j] = v;
      else {
        it->second += v;
        if (it->second == 0) row[i].erase(it);
      }
    }
  std::vector<std::set<int>> col_rows(cols);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, v] : row[i]) col_rows[j].insert(i);
  std::vector<bool> row_gone(rows, false), col_gone(cols, false);
  int unit_pivots = 0;

  auto erase_entry = [&](int i, int j) {
    row[i].erase(j);
    col_rows[j].erase(i);
  };
  auto set_entry = [&](int i, int j, const Int& val) {
    if (val == 0) {
      erase_entry(i, j);
    } else {
      if (row[i].find(j) == row[i].end()) col_rows[j].insert(i);
      row[i][j] = val;
    }
  };

  for (;;) {
    // Cheapest unit pivot first: fewest updates.
    int pi = -1, pj = -1;
    size_t best_cost = 0;
    for (int i = 0; i < rows; ++i) {
      if (row_gone[i]) continue;
      for (const auto& [j, v] : row[i]) {
        if (col_gone[j]) continue;
        if (v != 1 && v != -1) continue;
        size_t cost = col_rows[j].size() * row[i].size();
        if (pi < 0 || cost < best_cost) {
          pi = i;
          pj = j;
          best_cost = cost;
        }
      }
    }
    if (pi < 0) break;
    Int pivot = row[pi][pj];  // ±1
    std::vector<int> others(col_rows[pj].begin(), col_rows[pj].end());
    for (int i : others) {
      if (i == pi || row_gone[i]) continue;
      Int f = row[i][pj] / pivot;  // exact: pivot is ±1
      // row i -= f * row pi
      std::vector<std::pair<int, Int>> updates(row[pi].begin(), row[pi].end());
      for (const auto& [j, v] : updates) {
        Int cur = 0;
        auto it = row[i].find(j);
        if (it != row[i].end()) cur = it->second;
        set_entry(i, j, cur - f * v);
      }
    }
    // Column pj is now zero except the pivot; dropping row pi and col pj is
    // valid because the implicit column ops clearing row pi touch nothing else.
    row_gone[pi] = true;
    col_gone[pj] = true;
    for (const auto& [j, v] : row[pi]) col_rows[j].erase(pi);
    row[pi].clear();
    ++unit_pivots;
  }

  // Dense Smith on the surviving core.
  std::vector<int> live_rows, live_cols;
  for (int i = 0; i < rows; ++i)
    if (!row_gone[i] && !row[i].empty()) live_rows.push_back(i);
  std::map<int, int> col_index;
  for (int i : live_rows)
    for (const auto& [j, v] : row[i])
      if (!col_gone[j]) col_index.emplace(j, 0);
  {
    int k = 0;
    for (auto& [j, idx] : col_index) idx = k++;
  }
  std::vector<Int> divisors(unit_pivots, Int(1));
  if (!live_rows.empty()) {
    IMatrix core(int(live_rows.size()), int(col_index.size()));
    for (size_t r = 0; r < live_rows.size(); ++r)
      for (const auto& [j, v] : row[live_rows[r]])
        if (!col_gone[j]) core.at(int(r), col_index[j]) = v;
    SmithWorker w(std::move(core), false);
    w.run();
    int n = std::min(w.m.rows, w.m.cols);
    for (int i = 0; i < n; ++i)
      if (w.m.at(i, i) != 0) divisors.push_back(w.m.at(i, i));
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<Int> elementary_divisors(const IMatrix& m) {
  SparseIntMatrix sm(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) sm.add(i, j, m.at(i, j));
  return elementary_divisors_sparse(sm);
}

IMatrix hnf_rows(const IMatrix& in) {
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < in.rows; ++i) {
    std::vector<Int> r(in.cols);
    for (int j = 0; j < in.cols; ++j) r[j] = in.at(i, j);
    rows.push_back(std::move(r));
  }
  int cols = in.cols;
  std::vector<std::vector<Int>> out;
  int col = 0;
  while (col < cols && !rows.empty()) {
    // gcd of the column via repeated remainder exchange
    for (;;) {
      int best = -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best < 0 || abs(rows[i][col]) < abs(rows[best][col])) best = int(i);
      }
      if (best < 0) break;
      if (rows[best][col] < 0)
        for (auto& x : rows[best]) x = -x;
      bool cleared = true;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (int(i) == best || rows[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t());
        for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[best][j];
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) {
        out.push_back(rows[best]);
        rows.erase(rows.begin() + best);
        break;
      }
    }
    ++col;
  }
  // Reduce above-pivot entries into [0, pivot).
  for (size_t i = 0; i < out.size(); ++i) {
    int pc = 0;
    while (out[i][pc] == 0) ++pc;
    for (size_t k = 0; k < i; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), out[k][pc].get_mpz_t(), out[i][pc].get_mpz_t());
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) out[k][j] -= q * out[i][j];
    }
  }
  IMatrix h(int(out.size()), cols);
  for (size_t i = 0; i < out.size(); ++i)
    for (int j = 0; j < cols; ++j) h.at(int(i), j) = out[i][j];
  return h;
}

std::vector<Int> reduce_mod_hnf(std::vector<Int> v, const IMatrix& hnf) {
  if (int(v.size()) != hnf.cols) throw std::invalid_argument("reduce_mod_hnf shape mismatch");
  for (int i = 0; i < hnf.rows; ++i) {
    int pc = 0;
    while (pc < hnf.cols && hnf.at(i, pc) == 0) ++pc;
    if (pc == hnf.cols) continue;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[pc].get_mpz_t(), hnf.at(i, pc).get_mpz_t());
    if (q == 0) continue;
    for (int j = 0; j < hnf.cols; ++j) v[j] -= q * hnf.at(i, j);
  }
  return v;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = QMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = QMatrix::identity(ambient);
  return s;
}

Subspace Subspace::row_space(QMatrix rows) {
  Subspace s;
  s.ambient = rows.cols;
  int rank = rref(rows);
  s.basis = QMatrix(rank, rows.cols);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = rows.at(i, j);
  return s;
}

Subspace Subspace::span_of(const std::vector<QVector>& vectors, int ambient) {
  QMatrix m(int(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (int(vectors[i].size()) != ambient) throw std::invalid_argument("span_of ambient mismatch");
    for (int j = 0; j < ambient; ++j) m.at(int(i), j) = vectors[i][j];
  }
  return row_space(std::move(m));
}

bool Subspace::contains(const QVector& v) const {
  if (int(v.size()) != ambient) throw std::invalid_argument("contains ambient mismatch");
  // One elimination pass against the RREF basis.
  QVector r = v;
  for (int i = 0; i < basis.rows; ++i) {
    int pc = 0;
    while (pc < ambient && basis.at(i, pc) == 0) ++pc;
    if (pc == ambient) continue;
    if (r[pc] == 0) continue;
    Rational f = r[pc];  // pivot is 1
    for (int j = 0; j < ambient; ++j) r[j] -= f * basis.at(i, j);
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient != other.ambient) throw std::invalid_argument("contains ambient mismatch");
  for (int i = 0; i < other.basis.rows; ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient != o.ambient) return ambient < o.ambient;
  if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
  for (size_t i = 0; i < basis.a.size(); ++i) {
    int c = cmp(basis.a[i], o.basis.a[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Subspace sum(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) throw std::invalid_argument("sum ambient mismatch");
  QMatrix m(x.basis.rows + y.basis.rows, x.ambient);
  for (int i = 0; i < x.basis.rows; ++i)
    for (int j = 0; j < x.ambient; ++j) m.at(i, j) = x.basis.at(i, j);
  for (int i = 0; i < y.basis.rows; ++i)
    for (int j = 0; j < x.ambient; ++j) m.at(x.basis.rows + i, j) = y.basis.at(i, j);
  return Subspace::row_space(std::move(m));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) throw std::invalid_argument("intersect ambient mismatch");
  // x^T a = y^T b solutions: kernel of [x.basis^T | -y.basis^T].
  int n = x.ambient;
  int kx = x.basis.rows, ky = y.basis.rows;
  if (kx == 0 || ky == 0) return Subspace::zero(n);
  QMatrix m(n, kx + ky);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < kx; ++j) m.at(i, j) = x.basis.at(j, i);
    for (int j = 0; j < ky; ++j) m.at(i, kx + j) = -y.basis.at(j, i);
  }
  std::vector<QVector> ker = kernel_basis(m);
  std::vector<QVector> vecs;
  for (const auto& k : ker) {
    QVector v(n, Rational(0));
    for (int j = 0; j < kx; ++j)
      if (k[j] != 0)
        for (int c = 0; c < n; ++c) v[c] += k[j] * x.basis.at(j, c);
    vecs.push_back(std::move(v));
  }
  return Subspace::span_of(vecs, n);
}

bool is_positive_definite(const QMatrix& g) {
  if (g.rows != g.cols) return false;
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (g.at(i, j) != g.at(j, i)) return false;
  // Leading principal minors positive, via elimination without pivoting.
  QMatrix m = g;
  for (int k = 0; k < m.rows; ++k) {
    if (m.at(k, k) <= 0) return false;
    for (int i = k + 1; i < m.rows; ++i) {
      if (m.at(i, k) == 0) continue;
      Rational f = m.at(i, k) / m.at(k, k);
      for (int j = k; j < m.cols; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return true;
}

Subspace orthogonal_complement(const Subspace& x, const QMatrix* gram) {
  int n = x.ambient;
  if (gram) {
    if (gram->rows != n || gram->cols != n) throw std::invalid_argument("gram shape mismatch");
    if (!is_positive_definite(*gram)) throw std::invalid_argument("gram not positive definite");
  }
  if (x.dim() == 0) return Subspace::full(n);
  QMatrix m = gram ? QMatrix(x.basis * (*gram)) : x.basis;
  std::vector<QVector> ker = kernel_basis(m);
  return Subspace::span_of(ker, n);
}

}  // namespace scl
