#include "scl/chains.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scl {

namespace {

// boundary[k] with out-of-range degrees read as empty matrices of the
// matching shape.
SparseIntMatrix boundary_at(const ChainComplex& c, int k) {
  if (k >= 0 && k <= c.top_degree()) return c.boundary[size_t(k)];
  return SparseIntMatrix(c.dim(k - 1), c.dim(k));
}

SparseIntMatrix map_at(const ChainMap& f, const ChainComplex& c, const ChainComplex& d, int k) {
  if (k >= 0 && k < int(f.maps.size())) return f.maps[size_t(k)];
  return SparseIntMatrix(d.dim(k), c.dim(k));
}

std::vector<std::vector<std::pair<int, Int>>> normal_rows(const SparseIntMatrix& m) {
  std::vector<std::vector<std::pair<int, Int>>> rows(size_t(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    std::map<int, Int> acc;
    for (const auto& [j, v] : m.entries[size_t(i)]) acc[j] += v;
    for (const auto& [j, v] : acc)
      if (v != 0) rows[size_t(i)].push_back({j, v});
  }
  return rows;
}

void check_entry_bounds(const SparseIntMatrix& m) {
  for (const auto& row : m.entries)
    for (const auto& [j, v] : row) {
      (void)v;
      if (j < 0 || j >= m.cols) throw std::logic_error("sparse entry out of bounds");
    }
}

}  // namespace

SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw std::logic_error("sparse product shape mismatch");
  SparseIntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (const auto& [k, v] : a.entries[size_t(i)]) {
      if (v == 0) continue;
      for (const auto& [j, w] : b.entries[size_t(k)])
        if (w != 0) out.add(i, j, v * w);
    }
  return out;
}

bool sparse_is_zero(const SparseIntMatrix& m) {
  for (const auto& row : normal_rows(m))
    if (!row.empty()) return false;
  return true;
}

bool sparse_equal(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && normal_rows(a) == normal_rows(b);
}

void sparse_block_add(SparseIntMatrix* dst, const SparseIntMatrix& src, int row_off, int col_off,
                      int sign) {
  for (int i = 0; i < src.rows; ++i)
    for (const auto& [j, v] : src.entries[size_t(i)])
      if (v != 0) dst->add(row_off + i, col_off + j, sign < 0 ? Int(-v) : v);
}

void ChainComplex::validate() const {
  if (boundary.size() != dims.size()) throw std::logic_error("boundary count mismatch");
  for (size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 0) throw std::logic_error("negative dimension");
    int want_rows = k == 0 ? 0 : dims[k - 1];
    if (boundary[k].rows != want_rows || boundary[k].cols != dims[k])
      throw std::logic_error("boundary shape mismatch");
    check_entry_bounds(boundary[k]);
  }
  for (size_t k = 0; k + 1 < dims.size(); ++k)
    if (!sparse_is_zero(sparse_mul(boundary[k], boundary[k + 1])))
      throw std::logic_error("boundary does not square to zero");
}

ChainComplex ChainComplex::zero() { return ChainComplex{}; }

ChainComplex ChainComplex::point() {
  ChainComplex c;
  c.dims = {1};
  c.boundary = {SparseIntMatrix(0, 1)};
  return c;
}

ChainMap ChainMap::zero(const ChainComplex& c, const ChainComplex& d) {
  ChainMap f;
  for (size_t k = 0; k < c.dims.size(); ++k)
    f.maps.push_back(SparseIntMatrix(d.dim(int(k)), c.dims[k]));
  return f;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  ChainMap f;
  for (size_t k = 0; k < c.dims.size(); ++k) {
    SparseIntMatrix m(c.dims[k], c.dims[k]);
    for (int i = 0; i < c.dims[k]; ++i) m.add(i, i, Int(1));
    f.maps.push_back(m);
  }
  return f;
}

void ChainMap::validate(const ChainComplex& c, const ChainComplex& d) const {
  if (maps.size() != c.dims.size()) throw std::logic_error("chain map degree count mismatch");
  for (size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].rows != d.dim(int(k)) || maps[k].cols != c.dims[k])
      throw std::logic_error("chain map shape mismatch");
    check_entry_bounds(maps[k]);
  }
  for (int k = 1; k <= c.top_degree(); ++k) {
    SparseIntMatrix lhs = sparse_mul(boundary_at(d, k), map_at(*this, c, d, k));
    SparseIntMatrix rhs = sparse_mul(map_at(*this, c, d, k - 1), boundary_at(c, k));
    if (!sparse_equal(lhs, rhs)) throw std::logic_error("chain map does not commute");
  }
}

int HomologyResult::top_nonzero() const {
  int top = -1;
  for (size_t k = 0; k < free_rank.size(); ++k)
    if (free_rank[k] != 0 || !torsion[k].empty()) top = int(k);
  return top;
}

bool HomologyResult::same_as(const HomologyResult& o) const {
  size_t n = std::max(free_rank.size(), o.free_rank.size());
  for (size_t k = 0; k < n; ++k) {
    int fa = k < free_rank.size() ? free_rank[k] : 0;
    int fb = k < o.free_rank.size() ? o.free_rank[k] : 0;
    if (fa != fb) return false;
    std::vector<Int> ta = k < torsion.size() ? torsion[k] : std::vector<Int>{};
    std::vector<Int> tb = k < o.torsion.size() ? o.torsion[k] : std::vector<Int>{};
    if (ta != tb) return false;
    int ra = k < rational_rank.size() ? rational_rank[k] : 0;
    int rb = k < o.rational_rank.size() ? o.rational_rank[k] : 0;
    if (ra != rb) return false;
  }
  return true;
}

HomologyResult homology(const ChainComplex& c) {
  c.validate();
  HomologyResult h;
  int top = c.top_degree();
  if (top < 0) return h;
  std::vector<std::vector<Int>> divs(size_t(top) + 2);
  for (int k = 0; k <= top; ++k) divs[size_t(k)] = elementary_divisors_sparse(c.boundary[size_t(k)]);
  divs[size_t(top) + 1] = {};
  h.free_rank.resize(size_t(top) + 1);
  h.torsion.resize(size_t(top) + 1);
  h.rational_rank.resize(size_t(top) + 1);
  for (int k = 0; k <= top; ++k) {
    int rank_in = int(divs[size_t(k) + 1].size());
    int rank_out = int(divs[size_t(k)].size());
    h.free_rank[size_t(k)] = c.dims[size_t(k)] - rank_out - rank_in;
    for (const auto& d : divs[size_t(k) + 1])
      if (d > 1) h.torsion[size_t(k)].push_back(d);
    h.rational_rank[size_t(k)] = h.free_rank[size_t(k)];
  }
  return h;
}

HomologyResult reduced_homology(const ChainComplex& c) {
  if (c.top_degree() < 0) return HomologyResult{};
  ChainComplex aug;
  aug.dims.push_back(1);
  aug.dims.insert(aug.dims.end(), c.dims.begin(), c.dims.end());
  aug.boundary.push_back(SparseIntMatrix(0, 1));
  SparseIntMatrix eps(1, c.dims[0]);
  for (int j = 0; j < c.dims[0]; ++j) eps.add(0, j, Int(1));
  aug.boundary.push_back(eps);
  for (size_t k = 1; k < c.dims.size(); ++k) aug.boundary.push_back(c.boundary[k]);
  HomologyResult full = homology(aug);
  HomologyResult h;
  h.free_rank.assign(full.free_rank.begin() + 1, full.free_rank.end());
  h.torsion.assign(full.torsion.begin() + 1, full.torsion.end());
  h.rational_rank.assign(full.rational_rank.begin() + 1, full.rational_rank.end());
  return h;
}

ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& c, const ChainComplex& d) {
  f.validate(c, d);
  ChainComplex g;
  int top = std::max(c.top_degree() + 1, d.top_degree());
  if (top < 0) return g;
  g.dims.resize(size_t(top) + 1);
  for (int k = 0; k <= top; ++k) g.dims[size_t(k)] = c.dim(k - 1) + d.dim(k);
  g.boundary.resize(size_t(top) + 1);
  for (int k = 0; k <= top; ++k) {
    SparseIntMatrix b(k == 0 ? 0 : g.dims[size_t(k) - 1], g.dims[size_t(k)]);
    if (k > 0) {
      int row_d = c.dim(k - 2);  // rows: C-part then D-part of degree k-1
      int col_d = c.dim(k - 1);  // cols: C-part then D-part of degree k
      sparse_block_add(&b, boundary_at(c, k - 1), 0, 0, -1);
      sparse_block_add(&b, map_at(f, c, d, k - 1), row_d, 0);
      sparse_block_add(&b, boundary_at(d, k), row_d, col_d);
    }
    g.boundary[size_t(k)] = b;
  }
  g.validate();
  return g;
}

const ChainMap& CubeDiagram::map_of(int mask, int dir) const {
  auto it = maps.find({mask, dir});
  if (it == maps.end()) throw std::logic_error("cube map missing");
  return it->second;
}

void CubeDiagram::validate() const {
  if (n < 0 || int(vertex.size()) != (1 << n)) throw std::logic_error("cube vertex count");
  for (const auto& v : vertex) v.validate();
  for (int mask = 0; mask < (1 << n); ++mask)
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1 << i))) continue;
      map_of(mask, i).validate(vertex[size_t(mask)], vertex[size_t(mask ^ (1 << i))]);
      for (int j = i + 1; j < n; ++j) {
        if (!(mask & (1 << j))) continue;
        // Both deletion orders around the square must agree.
        const ChainComplex& src = vertex[size_t(mask)];
        const ChainComplex& dst = vertex[size_t(mask ^ (1 << i) ^ (1 << j))];
        const ChainMap& fi = map_of(mask, i);
        const ChainMap& fj = map_of(mask, j);
        const ChainMap& gi = map_of(mask ^ (1 << j), i);
        const ChainMap& gj = map_of(mask ^ (1 << i), j);
        for (int k = 0; k <= src.top_degree(); ++k) {
          SparseIntMatrix a = sparse_mul(
              map_at(gj, vertex[size_t(mask ^ (1 << i))], dst, k),
              map_at(fi, src, vertex[size_t(mask ^ (1 << i))], k));
          SparseIntMatrix b2 = sparse_mul(
              map_at(gi, vertex[size_t(mask ^ (1 << j))], dst, k),
              map_at(fj, src, vertex[size_t(mask ^ (1 << j))], k));
          if (!sparse_equal(a, b2)) throw std::logic_error("cube square does not commute");
        }
      }
    }
}

ChainComplex total_cofiber(const CubeDiagram& cube) {
  std::vector<int> order(size_t(cube.n));
  std::iota(order.begin(), order.end(), 0);
  return total_cofiber(cube, order);
}

ChainComplex total_cofiber(const CubeDiagram& cube, const std::vector<int>& order) {
  cube.validate();
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> want(size_t(cube.n));
  std::iota(want.begin(), want.end(), 0);
  if (sorted != want) throw std::invalid_argument("direction order is not a permutation");

  std::map<int, ChainComplex> vertex;
  std::map<std::pair<int, int>, ChainMap> maps;
  for (int mask = 0; mask < (1 << cube.n); ++mask) vertex[mask] = cube.vertex[size_t(mask)];
  maps = cube.maps;

  for (int dir : order) {
    int bit = 1 << dir;
    std::map<int, ChainComplex> next_vertex;
    std::map<std::pair<int, int>, ChainMap> next_maps;
    for (const auto& [mask, cc] : vertex) {
      if (mask & bit) continue;
      next_vertex[mask] = mapping_cone(maps.at({mask | bit, dir}), vertex.at(mask | bit), cc);
    }
    for (const auto& [mask, cc] : vertex) {
      if (mask & bit) continue;
      for (int j = 0; j < cube.n; ++j) {
        if (j == dir || !(mask & (1 << j))) continue;
        // Cone of a commuting square: block diagonal on the two parts.
        const ChainComplex& src_c = vertex.at(mask | bit);
        const ChainComplex& dst_c = vertex.at((mask ^ (1 << j)) | bit);
        const ChainComplex& src_d = cc;
        const ChainComplex& dst_d = vertex.at(mask ^ (1 << j));
        const ChainMap& u = maps.at({mask | bit, j});
        const ChainMap& v = maps.at({mask, j});
        const ChainComplex& gsrc = next_vertex.at(mask);
        const ChainComplex& gdst = next_vertex.at(mask ^ (1 << j));
        ChainMap w;
        for (int k = 0; k <= gsrc.top_degree(); ++k) {
          SparseIntMatrix m(gdst.dim(k), gsrc.dims[size_t(k)]);
          sparse_block_add(&m, map_at(u, src_c, dst_c, k - 1), 0, 0);
          sparse_block_add(&m, map_at(v, src_d, dst_d, k), dst_c.dim(k - 1), src_c.dim(k - 1));
          w.maps.push_back(m);
        }
        next_maps[{mask, j}] = w;
      }
    }
    vertex = next_vertex;
    maps = next_maps;
  }
  ChainComplex out = vertex.at(0);
  out.validate();
  return out;
}

Int euler_characteristic(const ChainComplex& c) {
  Int chi = 0;
  for (size_t k = 0; k < c.dims.size(); ++k)
    chi += (k % 2 == 0) ? Int(c.dims[k]) : Int(-c.dims[k]);
  return chi;
}

}  // namespace scl
