#include "scl/kcalc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace scl {

namespace {

// Normalized direction of a nonzero vector: first nonzero coordinate 1.
QVector direction_of(const QVector& w) {
  QVector d = w;
  for (const Rational& x : d) {
    if (sgn(x) != 0) {
      Rational lead = x;
      for (Rational& y : d) y /= lead;
      return d;
    }
  }
  throw std::invalid_argument("line direction is zero");
}

QMatrix scaled_identity(const Rational& c, int n) {
  QMatrix m = QMatrix::identity(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Rational rational_pow(const Rational& a, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

// v_i tensor e_a at row i*2 + a: the matrix of V tensor (span w -> Q^2).
QMatrix line_inclusion(const QVector& w, int d) {
  QMatrix m(2 * d, d);
  for (int i = 0; i < d; ++i) {
    m.at(2 * i + 0, i) = w[0];
    m.at(2 * i + 1, i) = w[1];
  }
  return m;
}

void validate_lines(const std::vector<QVector>& lines) {
  if (lines.empty()) throw std::invalid_argument("fewer than 1 line");
  std::set<QVector> seen;
  for (const QVector& w : lines) {
    if (w.size() != 2) throw std::invalid_argument("line not in the plane");
    if (!seen.insert(direction_of(w)).second) throw std::invalid_argument("lines not distinct");
  }
}

// Block row of all Lambda^q line inclusions side by side.
QMatrix stacked_line_map(const std::vector<QVector>& lines, int d, int q) {
  int rows = binomial(2 * d, q);
  int cols = int(lines.size()) * binomial(d, q);
  QMatrix m(rows, cols);
  int off = 0;
  for (const QVector& w : lines) {
    QMatrix block = exterior_map(line_inclusion(w, d), q);
    for (int i = 0; i < block.rows; ++i)
      for (int j = 0; j < block.cols; ++j) m.at(i, off + j) = block.at(i, j);
    off += block.cols;
  }
  return m;
}

// Coordinates of sub's basis rows in sup's basis rows, as the matrix of the
// inclusion on coordinate columns.
QMatrix inclusion_coords(const Subspace& sub, const Subspace& sup) {
  QMatrix m(sup.dim(), sub.dim());
  QMatrix supt = sup.basis.transpose();
  for (int r = 0; r < sub.dim(); ++r) {
    auto x = solve(supt, sub.basis.row(r));
    if (!x) throw std::logic_error("inclusion without containment");
    for (int s = 0; s < sup.dim(); ++s) m.at(s, r) = (*x)[size_t(s)];
  }
  return m;
}

// inc tensor the identity of Q^d, basis y_s tensor v_i at row s*d + i.
QMatrix tensor_with_identity(const QMatrix& inc, int d) {
  QMatrix m(inc.rows * d, inc.cols * d);
  for (int s = 0; s < inc.rows; ++s)
    for (int r = 0; r < inc.cols; ++r)
      for (int i = 0; i < d; ++i) m.at(s * d + i, r * d + i) = inc.at(s, r);
  return m;
}

bool is_zero_matrix(const QMatrix& m) {
  for (const Rational& x : m.a)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

void DeskReals::validate() const {
  if (labels.empty()) throw std::invalid_argument("desk reals need at least one basis label");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (int(seen.size()) != int(labels.size()))
    throw std::invalid_argument("desk real labels not distinct");
}

DeskReals DeskReals::standard(int d) {
  if (d < 1) throw std::invalid_argument("desk reals need at least one basis label");
  DeskReals v;
  for (int i = 1; i <= d; ++i) v.labels.push_back("r" + std::to_string(i));
  return v;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return int(r);
}

ExteriorPower exterior_power(int base_dim, int q) {
  if (base_dim < 0 || q < 0) throw std::invalid_argument("negative exterior power data");
  ExteriorPower e;
  e.base_dim = base_dim;
  e.degree = q;
  std::vector<int> cur(static_cast<size_t>(q));
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == q) {
      e.monomials.push_back(cur);
      return;
    }
    for (int i = next; i < base_dim; ++i) {
      cur[size_t(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (q <= base_dim) rec(rec, 0, 0);
  return e;
}

QMatrix exterior_map(const QMatrix& f, int q) {
  ExteriorPower src = exterior_power(f.cols, q);
  ExteriorPower dst = exterior_power(f.rows, q);
  QMatrix m(dst.dim(), src.dim());
  for (int i = 0; i < dst.dim(); ++i) {
    for (int j = 0; j < src.dim(); ++j) {
      QMatrix minor(q, q);
      for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c)
          minor.at(r, c) = f.at(dst.monomials[size_t(i)][size_t(r)],
                                src.monomials[size_t(j)][size_t(c)]);
      m.at(i, j) = determinant(minor);
    }
  }
  return m;
}

const KGroupRow& KGroupReport::row(int degree) const {
  for (const KGroupRow& r : rows)
    if (r.degree == degree) return r;
  throw std::out_of_range("no row at the requested degree");
}

KGroupReport rationalize(KGroupReport r) {
  for (KGroupRow& row : r.rows) row.torsion.clear();
  return r;
}

ExteriorPower vector_group_homology(const DeskReals& v, int i) {
  v.validate();
  if (i < 0) throw std::invalid_argument("negative homology degree");
  return exterior_power(v.dim(), i);
}

int koszul_oracle(int d, int i) {
  if (d < 0 || d > 6) throw std::invalid_argument("size cap exceeded");
  if (i < 0 || i > d) return 0;
  // Koszul complex of the d-torus: degree k is spanned by the k-subsets of
  // the coordinate directions, the differential drops one direction with the
  // usual sign and the coefficient t - 1, augmented mechanically at t = 1.
  std::vector<ExteriorPower> level;
  std::vector<std::map<std::vector<int>, int>> index(size_t(d) + 1);
  for (int k = 0; k <= d; ++k) {
    level.push_back(exterior_power(d, k));
    for (int j = 0; j < level.back().dim(); ++j)
      index[size_t(k)][level.back().monomials[size_t(j)]] = j;
  }
  ChainComplex c;
  for (int k = 0; k <= d; ++k) c.dims.push_back(level[size_t(k)].dim());
  c.boundary.emplace_back(0, c.dims[0]);
  Int augmented = Int(1) - Int(1);  // t - 1 at t = 1
  for (int k = 1; k <= d; ++k) {
    SparseIntMatrix b(c.dims[size_t(k) - 1], c.dims[size_t(k)]);
    for (int j = 0; j < level[size_t(k)].dim(); ++j) {
      const std::vector<int>& mono = level[size_t(k)].monomials[size_t(j)];
      for (int pos = 0; pos < k; ++pos) {
        std::vector<int> face = mono;
        face.erase(face.begin() + pos);
        Int coeff = (pos % 2 == 0 ? augmented : -augmented);
        b.add(index[size_t(k) - 1].at(face), j, coeff);
      }
    }
    c.boundary.push_back(std::move(b));
  }
  c.validate();
  return homology(c).free_rank[size_t(i)];
}

KGroupReport k_line_translation(const DeskReals& v, int max_degree) {
  v.validate();
  if (max_degree < 0) throw std::invalid_argument("negative degree range");
  KGroupReport r;
  r.geometry = "E1";
  r.group = "T(1)";
  r.desk_dim = v.dim();
  r.integral = true;
  r.provenance = "orbit homology of the translation desk: K_n is the (n+1)-st wedge power";
  for (int n = 0; n <= max_degree; ++n) {
    KGroupRow row;
    row.degree = n;
    row.free_dim = binomial(v.dim(), n + 1);
    row.wedge_exponent = row.free_dim > 0 ? n + 1 : -1;
    r.rows.push_back(row);
  }
  return r;
}

KGroupReport k_line_full(const DeskReals& v, int max_degree, bool twist) {
  v.validate();
  if (max_degree < 0) throw std::invalid_argument("negative degree range");
  KGroupReport r;
  r.geometry = "E1";
  r.group = "E(1)";
  r.desk_dim = v.dim();
  r.integral = false;
  r.provenance = twist
      ? "Z/2-coinvariants of the translation table, reflection twisted by orientation"
      : "diagnostic: orientation twist disabled";
  for (int n = 0; n <= max_degree; ++n) {
    // The reflection negates V and, when the twist is on, also the
    // orientation class; coinvariants over Q keep or kill the whole wedge.
    QMatrix action = exterior_map(scaled_identity(Rational(-1), v.dim()), n + 1);
    if (twist)
      for (Rational& x : action.a) x = -x;
    QMatrix fixed = action;
    for (int i = 0; i < fixed.rows; ++i) fixed.at(i, i) -= 1;
    int dim = binomial(v.dim(), n + 1);
    KGroupRow row;
    row.degree = n;
    row.free_dim = dim - rank_of(fixed);
    row.wedge_exponent = row.free_dim > 0 ? n + 1 : -1;
    r.rows.push_back(row);
  }
  return r;
}

KGroupReport k_circle(const DeskReals& v, CircleGroup g, int max_degree) {
  KGroupReport r =
      g == CircleGroup::SO2 ? k_line_translation(v, max_degree) : k_line_full(v, max_degree);
  r.geometry = "S1";
  r.group = g == CircleGroup::SO2 ? "SO(2)" : "O(2)";
  r.integral = false;
  r.provenance = "circle complex is the orbit of the line complex; line table carried over";
  return r;
}

KGroupReport k_s0(ZeroSphereGroup g, bool reduced, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree range");
  KGroupReport r;
  r.geometry = "S0";
  r.group = g == ZeroSphereGroup::Trivial ? "1" : "O(1)";
  r.integral = false;
  if (!reduced || g == ZeroSphereGroup::Trivial) {
    KGroupRow row;
    row.degree = 0;
    row.free_dim = g == ZeroSphereGroup::Trivial ? (reduced ? 1 : 2) : 1;
    r.rows.push_back(row);
    r.provenance = "pi0 of wedge only";
    return r;
  }
  // Sign coefficients over Z/2: the 2-periodic resolution tensors down to
  // alternating multiplication by 2 and by 0.
  ChainComplex c;
  for (int k = 0; k <= max_degree + 1; ++k) c.dims.push_back(1);
  c.boundary.emplace_back(0, 1);
  for (int k = 1; k <= max_degree + 1; ++k) {
    SparseIntMatrix b(1, 1);
    b.add(0, 0, k % 2 == 1 ? Int(2) : Int(0));
    c.boundary.push_back(std::move(b));
  }
  c.validate();
  HomologyResult h = homology(c);
  for (int k = 0; k <= max_degree; ++k) {
    KGroupRow row;
    row.degree = k;
    row.free_dim = h.free_rank[size_t(k)];
    row.torsion = h.torsion[size_t(k)];
    r.rows.push_back(row);
  }
  r.provenance = "homology of Z/2 with sign coefficients by the 2-periodic resolution";
  return r;
}

DupontSplit dupont_splitting_e2(const std::vector<QVector>& lines, const DeskReals& v, int m) {
  v.validate();
  validate_lines(lines);
  if (m < 0) throw std::invalid_argument("negative splitting degree");
  int d = v.dim();
  QMatrix f1 = stacked_line_map(lines, d, m + 1);
  QMatrix f2 = stacked_line_map(lines, d, m + 2);
  DupontSplit s;
  s.m = m;
  s.kernel_dim = f1.cols - rank_of(f1);
  s.cokernel_dim = f2.rows - rank_of(f2);
  return s;
}

EigenReport dupont_eigenspace_check(const Rational& a, int m, int q,
                                    const std::vector<QVector>& lines, const DeskReals& v) {
  v.validate();
  validate_lines(lines);
  if (m < 0) throw std::invalid_argument("negative splitting degree");
  if (sgn(a) <= 0 || a == 1)
    throw std::invalid_argument("dilation scalar must be positive and not 1");
  if (q != 1 && q != 2) throw std::invalid_argument("summand index must be 1 or 2");
  int d = v.dim();
  EigenReport rep;
  rep.scalar = rational_pow(a, m + q);
  if (q == 1) {
    QMatrix f1 = stacked_line_map(lines, d, m + 1);
    // Dilation acts on each line model by the scalar a; assemble its block
    // diagonal wedge action on the domain of the stacked map.
    QMatrix block = exterior_map(scaled_identity(a, d), m + 1);
    QMatrix dil(f1.cols, f1.cols);
    for (int l = 0; l < int(lines.size()); ++l)
      for (int i = 0; i < block.rows; ++i)
        for (int j = 0; j < block.cols; ++j)
          dil.at(l * block.rows + i, l * block.cols + j) = block.at(i, j);
    std::vector<QVector> kernel = kernel_basis(f1);
    rep.summand_dim = int(kernel.size());
    rep.annihilated = true;
    for (const QVector& x : kernel) {
      QVector image = mul(dil, x);
      for (size_t i = 0; i < x.size(); ++i)
        if (image[i] != rep.scalar * x[i]) rep.annihilated = false;
    }
    return rep;
  }
  QMatrix f2 = stacked_line_map(lines, d, m + 2);
  QMatrix shifted = exterior_map(scaled_identity(a, 2 * d), m + 2);
  for (int i = 0; i < shifted.rows; ++i) shifted.at(i, i) -= rep.scalar;
  // Operator minus scalar must land in the image, so it vanishes on the
  // cokernel summand.
  int base = rank_of(f2);
  QMatrix joined(f2.rows, f2.cols + shifted.cols);
  for (int i = 0; i < f2.rows; ++i) {
    for (int j = 0; j < f2.cols; ++j) joined.at(i, j) = f2.at(i, j);
    for (int j = 0; j < shifted.cols; ++j) joined.at(i, f2.cols + j) = shifted.at(i, j);
  }
  rep.summand_dim = f2.rows - base;
  rep.annihilated = rank_of(joined) == base;
  return rep;
}

HomologyResult dupont_general(const SubspacePoset& p, const DeskReals& v, int q) {
  v.validate();
  if (q < 0) throw std::invalid_argument("negative coefficient degree");
  if (p.euclidean_chart)
    throw std::invalid_argument("dupont coefficients need a linear subspace poset");
  if (p.ambient.dim() != p.ambient.ambient)
    throw std::invalid_argument("poset top is not the full space");
  int d = v.dim();
  int top = p.top_index();

  // Flags ending at the top, bucketed by simplicial degree.
  std::vector<std::vector<std::vector<int>>> flags;
  for (const std::vector<int>& c : poset_chains(p.relation())) {
    if (c.back() != top) continue;
    int deg = int(c.size()) - 1;
    if (int(flags.size()) <= deg) flags.resize(size_t(deg) + 1);
    flags[size_t(deg)].push_back(c);
  }

  auto coeff_dim = [&](const std::vector<int>& c) {
    return binomial(p.elements[size_t(c.front())].dim() * d, q);
  };
  std::vector<int> dims;
  std::vector<std::vector<int>> off(flags.size());
  std::vector<std::map<std::vector<int>, int>> pos(flags.size());
  for (size_t k = 0; k < flags.size(); ++k) {
    int total = 0;
    for (size_t j = 0; j < flags[k].size(); ++j) {
      off[k].push_back(total);
      pos[k][flags[k][j]] = int(j);
      total += coeff_dim(flags[k][j]);
    }
    dims.push_back(total);
  }

  std::map<std::pair<int, int>, QMatrix> wedge_inc;
  auto inclusion_wedge = [&](int sub, int sup) -> const QMatrix& {
    auto key = std::make_pair(sub, sup);
    auto it = wedge_inc.find(key);
    if (it == wedge_inc.end()) {
      QMatrix inc = tensor_with_identity(
          inclusion_coords(p.elements[size_t(sub)], p.elements[size_t(sup)]), d);
      it = wedge_inc.emplace(key, exterior_map(inc, q)).first;
    }
    return it->second;
  };

  std::vector<QMatrix> bnd;
  bnd.emplace_back(0, dims.empty() ? 0 : dims[0]);
  for (size_t k = 1; k < flags.size(); ++k) {
    QMatrix b(dims[k - 1], dims[k]);
    for (const std::vector<int>& c : flags[k]) {
      int col = off[k][size_t(pos[k].at(c))];
      for (size_t drop = 0; drop + 1 < c.size(); ++drop) {
        // Dropping the top entry lands in the collapsed proper part.
        std::vector<int> face = c;
        face.erase(face.begin() + long(drop));
        int row = off[k - 1][size_t(pos[k - 1].at(face))];
        int sign = drop % 2 == 0 ? 1 : -1;
        if (drop == 0) {
          const QMatrix& e = inclusion_wedge(c[0], c[1]);
          for (int i = 0; i < e.rows; ++i)
            for (int j = 0; j < e.cols; ++j) b.at(row + i, col + j) += sign * e.at(i, j);
        } else {
          for (int i = 0; i < coeff_dim(c); ++i) b.at(row + i, col + i) += sign;
        }
      }
    }
    bnd.push_back(std::move(b));
  }
  for (size_t k = 2; k < bnd.size(); ++k)
    if (!is_zero_matrix(bnd[k - 1] * bnd[k]))
      throw std::logic_error("non-functorial coefficient data");

  HomologyResult h;
  for (size_t k = 0; k < dims.size(); ++k) {
    int cut = k + 1 < bnd.size() ? rank_of(bnd[k + 1]) : 0;
    h.free_rank.push_back(dims[k] - rank_of(bnd[k]) - cut);
    h.torsion.emplace_back();
  }
  h.rational_rank = h.free_rank;
  return h;
}

ReducedCircleReport reduced_s1_table(int modulus, const DeskReals& v, int max_degree) {
  v.validate();
  if (modulus <= 0 || modulus % 2 != 0)
    throw std::invalid_argument("torsion modulus must be even");
  if (max_degree < 0 || max_degree > 6)
    throw std::invalid_argument("degree range above the table cap");
  int d = v.dim();
  ReducedCircleReport rep;
  rep.modulus = modulus;
  rep.desk_dim = d;

  // Homology of the cyclic part from its 2-periodic resolution.
  ChainComplex c;
  for (int k = 0; k <= max_degree + 2; ++k) c.dims.push_back(1);
  c.boundary.emplace_back(0, 1);
  for (int k = 1; k <= max_degree + 2; ++k) {
    SparseIntMatrix b(1, 1);
    b.add(0, 0, k % 2 == 1 ? Int(0) : Int(modulus));
    c.boundary.push_back(std::move(b));
  }
  c.validate();
  HomologyResult cyc = homology(c);

  // Kunneth for V plus the cyclic part: the wedge powers of V are free, so
  // the Tor terms vanish and torsion enters through the odd cyclic rows.
  auto group_row = [&](int n) {
    KGroupRow row;
    row.degree = n;
    row.free_dim = binomial(d, n) * cyc.free_rank[0];
    row.wedge_exponent = row.free_dim > 0 ? n : -1;
    for (int j = 1; j <= n && j <= max_degree + 2; ++j)
      for (const Int& factor : cyc.torsion[size_t(j)])
        for (int copy = 0; copy < binomial(d, n - j); ++copy) row.torsion.push_back(factor);
    return row;
  };
  for (int n = 0; n <= max_degree; ++n) rep.group_rows.push_back(group_row(n));

  // Reduced K rows: the quotient of the cyclic part by its 2-torsion has
  // order N/2 and survives in the even degrees.
  for (int k = 0; k <= max_degree; ++k) {
    KGroupRow row;
    row.degree = k;
    row.free_dim = binomial(d, k + 1);
    row.wedge_exponent = row.free_dim > 0 ? k + 1 : -1;
    if (k % 2 == 0 && modulus / 2 > 1) row.torsion.push_back(Int(modulus / 2));
    rep.k_rows.push_back(row);
  }

  rep.rank_consistent = true;
  for (int k = 0; k <= max_degree; ++k) {
    int shifted = k + 1 <= max_degree ? rep.group_rows[size_t(k) + 1].free_dim
                                      : binomial(d, k + 1) * cyc.free_rank[0];
    if (rep.k_rows[size_t(k)].free_dim != shifted) rep.rank_consistent = false;
  }

  for (int k = 0; k <= max_degree; ++k)
    rep.o2_rational.push_back(k % 2 == 0 ? binomial(d, k + 1) : 0);
  return rep;
}

}  // namespace scl
