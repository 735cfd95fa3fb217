#include "scl/flagcx.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scl {

namespace {

Int face_sign(int j) { return j % 2 == 0 ? Int(1) : Int(-1); }

// Column-indexed view is never needed: all block fills iterate source rows.
void check_sorted_simplex(const std::vector<int>& s, int vertices) {
  for (size_t a = 0; a < s.size(); ++a) {
    if (s[a] < 0 || s[a] >= vertices) throw std::logic_error("simplex vertex out of range");
    if (a > 0 && s[a - 1] >= s[a]) throw std::logic_error("simplex vertices not strictly sorted");
  }
}

}  // namespace

void FinitePoset::validate() const {
  if (n < 0 || int(rel.size()) != n) throw std::logic_error("poset relation size mismatch");
  for (const auto& row : rel)
    if (int(row.size()) != n) throw std::logic_error("poset relation size mismatch");
  for (int i = 0; i < n; ++i)
    if (!leq(i, i)) throw std::logic_error("poset relation not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      if (i != j && leq(j, i)) throw std::logic_error("poset relation not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (leq(j, k) && !leq(i, k)) throw std::logic_error("poset relation not transitive");
    }
}

std::vector<int> FinitePoset::maximal() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    bool top = true;
    for (int j = 0; j < n && top; ++j)
      if (j != i && leq(i, j)) top = false;
    if (top) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> poset_chains(const FinitePoset& p) {
  p.validate();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int last) -> void {
    out.push_back(cur);
    for (int j = 0; j < p.n; ++j) {
      if (j == last || !p.leq(last, j)) continue;
      cur.push_back(j);
      self(self, j);
      cur.pop_back();
    }
  };
  for (int i = 0; i < p.n; ++i) {
    cur = {i};
    extend(extend, i);
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ChainComplex OrderComplex::chains() const {
  ChainComplex cc;
  if (simplices.empty()) return cc;
  cc.dims.resize(simplices.size());
  std::vector<std::map<std::vector<int>, int>> index(simplices.size());
  for (size_t d = 0; d < simplices.size(); ++d) {
    cc.dims[d] = int(simplices[d].size());
    for (size_t i = 0; i < simplices[d].size(); ++i) {
      const auto& s = simplices[d][i];
      if (s.size() != d + 1) throw std::logic_error("simplex listed at the wrong dimension");
      check_sorted_simplex(s, vertices);
      index[d][s] = int(i);
    }
  }
  cc.boundary.resize(simplices.size());
  cc.boundary[0] = SparseIntMatrix(0, cc.dims[0]);
  for (size_t d = 1; d < simplices.size(); ++d) {
    SparseIntMatrix b(cc.dims[d - 1], cc.dims[d]);
    for (size_t i = 0; i < simplices[d].size(); ++i) {
      const auto& s = simplices[d][i];
      for (size_t j = 0; j < s.size(); ++j) {
        std::vector<int> face = s;
        face.erase(face.begin() + long(j));
        auto it = index[d - 1].find(face);
        if (it == index[d - 1].end()) throw std::logic_error("complex not closed under faces");
        b.add(it->second, int(i), face_sign(int(j)));
      }
    }
    cc.boundary[d] = b;
  }
  cc.validate();
  return cc;
}

OrderComplex order_complex(const FinitePoset& p) {
  OrderComplex c;
  c.vertices = p.n;
  for (auto ch : poset_chains(p)) {
    std::sort(ch.begin(), ch.end());
    size_t d = ch.size() - 1;
    if (c.simplices.size() <= d) c.simplices.resize(d + 1);
    c.simplices[d].push_back(ch);
  }
  for (auto& level : c.simplices) std::sort(level.begin(), level.end());
  return c;
}

OrderComplex unreduced_suspension(const OrderComplex& c) {
  OrderComplex s;
  int a = c.vertices;
  int b = c.vertices + 1;
  s.vertices = c.vertices + 2;
  size_t depth = c.simplices.size() + 1;
  s.simplices.resize(depth);
  if (!c.simplices.empty()) s.simplices[0] = c.simplices[0];
  s.simplices[0].push_back({a});
  s.simplices[0].push_back({b});
  for (size_t d = 1; d < depth; ++d) {
    if (d < c.simplices.size()) s.simplices[d] = c.simplices[d];
    // Pole indices exceed every original vertex, so appending keeps tuples
    // sorted.
    for (const auto& t : c.simplices[d - 1]) {
      std::vector<int> u = t;
      u.push_back(a);
      s.simplices[d].push_back(u);
      u.back() = b;
      s.simplices[d].push_back(u);
    }
  }
  for (auto& level : s.simplices) std::sort(level.begin(), level.end());
  return s;
}

FinitePoset SubspacePoset::relation() const {
  FinitePoset p;
  p.n = size();
  p.rel.assign(size_t(p.n), std::vector<char>(size_t(p.n), 0));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (leq(i, j)) p.rel[size_t(i)][size_t(j)] = 1;
  return p;
}

std::vector<int> SubspacePoset::geometric_dims() const {
  std::vector<int> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.dim() - 1);
  return out;
}

namespace {

// Linear dimension zero, or (affine chart) contained in the hyperplane at
// infinity x0 = 0: no geometric points.
bool empty_geometric(const Subspace& v, bool euclidean_chart) {
  if (v.dim() == 0) return true;
  if (!euclidean_chart) return false;
  for (int r = 0; r < v.basis.rows; ++r)
    if (v.basis.at(r, 0) != 0) return false;
  return true;
}

}  // namespace

SubspacePoset generate_poset(const std::vector<Subspace>& generators, const Subspace& ambient,
                             bool euclidean_chart) {
  if (empty_geometric(ambient, euclidean_chart))
    throw std::invalid_argument("ambient is an empty geometric subspace");
  for (const auto& g : generators) {
    if (g.ambient != ambient.ambient)
      throw std::invalid_argument("generator ambient dimension mismatch");
    if (!ambient.contains(g))
      throw std::invalid_argument("generator not contained in the ambient subspace");
    if (g == ambient) throw std::invalid_argument("generator is not a proper subspace");
    if (empty_geometric(g, euclidean_chart))
      throw std::invalid_argument("generator is an empty geometric subspace");
  }
  std::set<Subspace> family(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subspace> cur(family.begin(), family.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Subspace w = intersect(cur[i], cur[j]);
        if (empty_geometric(w, euclidean_chart) || family.count(w)) continue;
        family.insert(w);
        grew = true;
      }
  }
  SubspacePoset p;
  p.ambient = ambient;
  p.euclidean_chart = euclidean_chart;
  p.elements.assign(family.begin(), family.end());
  std::sort(p.elements.begin(), p.elements.end(), [](const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return x < y;
  });
  p.elements.push_back(ambient);
  return p;
}

std::pair<OrderComplex, OrderComplex> tits_and_st(const SubspacePoset& p) {
  FinitePoset full = p.relation();
  FinitePoset proper;
  proper.n = p.size() - 1;  // elements are sorted with the top last
  proper.rel.assign(size_t(proper.n), std::vector<char>(size_t(proper.n), 0));
  for (int i = 0; i < proper.n; ++i)
    for (int j = 0; j < proper.n; ++j) proper.rel[size_t(i)][size_t(j)] = full.rel[size_t(i)][size_t(j)];
  OrderComplex t = order_complex(proper);
  return {t, unreduced_suspension(t)};
}

const ChainMap& PosetDiagram::map_of(int i, int j) const {
  auto it = maps.find({i, j});
  if (it == maps.end()) throw std::logic_error("diagram map missing");
  return it->second;
}

void PosetDiagram::validate() const {
  poset.validate();
  if (int(value.size()) != poset.n) throw std::logic_error("diagram value count mismatch");
  int strict = 0;
  for (int i = 0; i < poset.n; ++i)
    for (int j = 0; j < poset.n; ++j) {
      if (i == j || !poset.leq(i, j)) continue;
      ++strict;
      map_of(i, j).validate(value[size_t(i)], value[size_t(j)]);
    }
  if (int(maps.size()) != strict) throw std::logic_error("diagram has maps off the relation");
  for (int i = 0; i < poset.n; ++i)
    for (int j = 0; j < poset.n; ++j) {
      if (i == j || !poset.leq(i, j)) continue;
      for (int k = 0; k < poset.n; ++k) {
        if (k == j || !poset.leq(j, k)) continue;
        const ChainMap& f = map_of(i, j);
        const ChainMap& g = map_of(j, k);
        const ChainMap& h = map_of(i, k);
        const ChainComplex& a = value[size_t(i)];
        const ChainComplex& mid = value[size_t(j)];
        const ChainComplex& c = value[size_t(k)];
        for (size_t q = 0; q < a.dims.size(); ++q) {
          SparseIntMatrix gm = q < g.maps.size() ? g.maps[q]
                                                 : SparseIntMatrix(c.dim(int(q)), mid.dim(int(q)));
          if (!sparse_equal(h.maps[q], sparse_mul(gm, f.maps[q])))
            throw std::logic_error("diagram does not compose strictly");
        }
      }
    }
}

PosetDiagram point_diagram(const FinitePoset& p) {
  p.validate();
  PosetDiagram d;
  d.poset = p;
  d.value.assign(size_t(p.n), ChainComplex::point());
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.leq(i, j)) d.maps[{i, j}] = ChainMap::identity(ChainComplex::point());
  return d;
}

namespace {

// One generator of the hocolim per (strict chain, cell of the value at the
// chain's minimum); total degree is chain length - 1 plus the cell degree.
struct HocolimData {
  std::vector<std::vector<int>> chains;
  std::map<std::vector<int>, int> chain_index;
  std::vector<std::vector<int>> offset;  // offset[ci][q] inside its degree
  ChainComplex cx;
};

HocolimData build_hocolim(const PosetDiagram& d) {
  d.validate();
  HocolimData h;
  h.chains = poset_chains(d.poset);
  for (size_t ci = 0; ci < h.chains.size(); ++ci) h.chain_index[h.chains[ci]] = int(ci);
  h.offset.resize(h.chains.size());
  int top = -1;
  for (const auto& ch : h.chains) {
    int vt = d.value[size_t(ch.front())].top_degree();
    if (vt >= 0) top = std::max(top, int(ch.size()) - 1 + vt);
  }
  if (top < 0) return h;
  h.cx.dims.assign(size_t(top) + 1, 0);
  for (size_t ci = 0; ci < h.chains.size(); ++ci) {
    const ChainComplex& v = d.value[size_t(h.chains[ci].front())];
    h.offset[ci].assign(v.dims.size(), 0);
    for (size_t q = 0; q < v.dims.size(); ++q) {
      size_t k = h.chains[ci].size() - 1 + q;
      h.offset[ci][q] = h.cx.dims[k];
      h.cx.dims[k] += v.dims[q];
    }
  }
  h.cx.boundary.resize(size_t(top) + 1);
  for (int k = 0; k <= top; ++k)
    h.cx.boundary[size_t(k)] =
        SparseIntMatrix(k == 0 ? 0 : h.cx.dims[size_t(k) - 1], h.cx.dims[size_t(k)]);
  for (size_t ci = 0; ci < h.chains.size(); ++ci) {
    const auto& ch = h.chains[ci];
    int len = int(ch.size());
    const ChainComplex& v = d.value[size_t(ch.front())];
    for (size_t q = 0; q < v.dims.size(); ++q) {
      int k = len - 1 + int(q);
      if (k == 0) continue;
      SparseIntMatrix& b = h.cx.boundary[size_t(k)];
      // Face terms drop one chain entry; dropping the minimum pushes the
      // cell forward along the diagram.
      for (int drop = 0; drop < len && len > 1; ++drop) {
        std::vector<int> face = ch;
        face.erase(face.begin() + drop);
        int fi = h.chain_index.at(face);
        Int s = face_sign(drop);
        if (drop == 0) {
          const SparseIntMatrix& m = d.map_of(ch[0], ch[1]).maps[q];
          for (int r = 0; r < m.rows; ++r)
            for (const auto& [cl, val] : m.entries[size_t(r)])
              if (val != 0) b.add(h.offset[size_t(fi)][q] + r, h.offset[ci][q] + cl, s * val);
        } else {
          for (int cell = 0; cell < v.dims[q]; ++cell)
            b.add(h.offset[size_t(fi)][q] + cell, h.offset[ci][q] + cell, s);
        }
      }
      if (q > 0) {
        const SparseIntMatrix& bd = v.boundary[q];
        Int s = face_sign(len - 1);
        for (int r = 0; r < bd.rows; ++r)
          for (const auto& [cl, val] : bd.entries[size_t(r)])
            if (val != 0) b.add(h.offset[ci][q - 1] + r, h.offset[ci][q] + cl, s * val);
      }
    }
  }
  h.cx.validate();
  return h;
}

}  // namespace

ChainComplex hocolim_complex(const PosetDiagram& d) { return build_hocolim(d).cx; }

ChainComplex total_cofiber_over_poset(const PosetDiagram& d) {
  d.validate();
  std::vector<int> tops = d.poset.maximal();
  if (tops.size() != 1) throw std::invalid_argument("poset needs a unique maximal element");
  int t = tops[0];
  std::vector<int> orig;
  for (int i = 0; i < d.poset.n; ++i)
    if (i != t) orig.push_back(i);
  PosetDiagram sub;
  sub.poset.n = int(orig.size());
  sub.poset.rel.assign(orig.size(), std::vector<char>(orig.size(), 0));
  for (size_t a = 0; a < orig.size(); ++a)
    for (size_t b = 0; b < orig.size(); ++b)
      sub.poset.rel[a][b] = d.poset.rel[size_t(orig[a])][size_t(orig[b])];
  for (int x : orig) sub.value.push_back(d.value[size_t(x)]);
  for (size_t a = 0; a < orig.size(); ++a)
    for (size_t b = 0; b < orig.size(); ++b)
      if (a != b && sub.poset.leq(int(a), int(b)))
        sub.maps[{int(a), int(b)}] = d.map_of(orig[a], orig[b]);
  HocolimData h = build_hocolim(sub);
  const ChainComplex& topv = d.value[size_t(t)];
  // The comparison map sends a single-element chain into the top value along
  // the diagram and kills longer chains; functoriality makes it a chain map.
  ChainMap phi;
  for (size_t k = 0; k < h.cx.dims.size(); ++k) {
    SparseIntMatrix m(topv.dim(int(k)), h.cx.dims[k]);
    for (size_t ci = 0; ci < h.chains.size(); ++ci) {
      if (h.chains[ci].size() != 1) continue;
      int x = orig[size_t(h.chains[ci][0])];
      if (k >= d.value[size_t(x)].dims.size()) continue;
      const SparseIntMatrix& fm = d.map_of(x, t).maps[k];
      for (int r = 0; r < fm.rows; ++r)
        for (const auto& [cl, val] : fm.entries[size_t(r)])
          if (val != 0) m.add(r, h.offset[ci][k] + cl, val);
    }
    phi.maps.push_back(m);
  }
  return mapping_cone(phi, h.cx, topv);
}

CubeDiagram cube_of(const PosetDiagram& d, const std::vector<int>& dims) {
  d.validate();
  const FinitePoset& p = d.poset;
  if (int(dims.size()) != p.n) throw std::invalid_argument("invalid dimension map");
  std::vector<int> tops = p.maximal();
  if (tops.size() != 1) throw std::invalid_argument("poset needs a unique maximal element");
  int t = tops[0];
  int n = dims[size_t(t)];
  if (n < 0) throw std::invalid_argument("invalid dimension map");
  for (int i = 0; i < p.n; ++i) {
    if (dims[size_t(i)] < 0) throw std::invalid_argument("invalid dimension map");
    if (i != t && dims[size_t(i)] >= n) throw std::invalid_argument("invalid dimension map");
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.leq(i, j) && dims[size_t(i)] >= dims[size_t(j)])
        throw std::invalid_argument("invalid dimension map");
  }

  // Flags of proper elements, grouped by the set of dimensions they hit; the
  // empty flag carries the top value.
  std::vector<int> orig;
  for (int i = 0; i < p.n; ++i)
    if (i != t) orig.push_back(i);
  FinitePoset proper;
  proper.n = int(orig.size());
  proper.rel.assign(orig.size(), std::vector<char>(orig.size(), 0));
  for (size_t a = 0; a < orig.size(); ++a)
    for (size_t b = 0; b < orig.size(); ++b)
      proper.rel[a][b] = p.rel[size_t(orig[a])][size_t(orig[b])];
  size_t masks = size_t(1) << n;
  std::vector<std::vector<std::vector<int>>> flags(masks);
  flags[0].push_back({});
  for (const auto& ch : poset_chains(proper)) {
    std::vector<int> flag;
    int mask = 0;
    for (int x : ch) {
      flag.push_back(orig[size_t(x)]);
      mask |= 1 << dims[size_t(orig[size_t(x)])];
    }
    flags[size_t(mask)].push_back(flag);
  }

  CubeDiagram cube;
  cube.n = n;
  cube.vertex.resize(masks);
  std::vector<std::vector<std::vector<int>>> off(masks);
  std::vector<std::map<std::vector<int>, int>> flag_index(masks);
  auto value_of = [&](const std::vector<int>& flag) -> const ChainComplex& {
    return d.value[size_t(flag.empty() ? t : flag.front())];
  };
  for (size_t mask = 0; mask < masks; ++mask) {
    for (size_t fi = 0; fi < flags[mask].size(); ++fi) flag_index[mask][flags[mask][fi]] = int(fi);
    off[mask].resize(flags[mask].size());
    int topdeg = -1;
    for (const auto& flag : flags[mask]) topdeg = std::max(topdeg, value_of(flag).top_degree());
    if (topdeg < 0) continue;
    ChainComplex& v = cube.vertex[mask];
    v.dims.assign(size_t(topdeg) + 1, 0);
    for (size_t fi = 0; fi < flags[mask].size(); ++fi) {
      const ChainComplex& val = value_of(flags[mask][fi]);
      off[mask][fi].assign(val.dims.size(), 0);
      for (size_t q = 0; q < val.dims.size(); ++q) {
        off[mask][fi][q] = v.dims[q];
        v.dims[q] += val.dims[q];
      }
    }
    v.boundary.resize(v.dims.size());
    for (size_t k = 0; k < v.dims.size(); ++k)
      v.boundary[k] = SparseIntMatrix(k == 0 ? 0 : v.dims[k - 1], v.dims[k]);
    for (size_t fi = 0; fi < flags[mask].size(); ++fi) {
      const ChainComplex& val = value_of(flags[mask][fi]);
      for (size_t q = 1; q < val.dims.size(); ++q)
        sparse_block_add(&v.boundary[q], val.boundary[q], off[mask][fi][q - 1], off[mask][fi][q]);
    }
  }

  for (size_t mask = 1; mask < masks; ++mask)
    for (int dir = 0; dir < n; ++dir) {
      if (!(mask & (size_t(1) << dir))) continue;
      size_t dmask = mask ^ (size_t(1) << dir);
      ChainMap w = ChainMap::zero(cube.vertex[mask], cube.vertex[dmask]);
      for (size_t fi = 0; fi < flags[mask].size(); ++fi) {
        const auto& flag = flags[mask][fi];
        int pos = -1;
        for (size_t a = 0; a < flag.size(); ++a)
          if (dims[size_t(flag[a])] == dir) pos = int(a);
        std::vector<int> down = flag;
        down.erase(down.begin() + pos);
        int gi = flag_index[dmask].at(down);
        const ChainComplex& sval = value_of(flag);
        if (pos == 0) {
          int dst_elem = down.empty() ? t : down.front();
          const ChainMap& f = d.map_of(flag[0], dst_elem);
          for (size_t q = 0; q < sval.dims.size(); ++q) {
            if (q >= off[dmask][size_t(gi)].size()) continue;
            sparse_block_add(&w.maps[q], f.maps[q], off[dmask][size_t(gi)][q], off[mask][fi][q]);
          }
        } else {
          // The minimum survives, so the block is the identity of its value.
          for (size_t q = 0; q < sval.dims.size(); ++q)
            for (int cell = 0; cell < sval.dims[q]; ++cell)
              w.maps[q].add(off[dmask][size_t(gi)][q] + cell, off[mask][fi][q] + cell, Int(1));
        }
      }
      cube.maps[{int(mask), dir}] = w;
    }
  cube.validate();
  return cube;
}

CompareReport barycentric_compare(const PosetDiagram& d) {
  CompareReport r;
  r.left = homology(hocolim_complex(d));
  std::vector<std::vector<int>> chains = poset_chains(d.poset);
  FinitePoset cp;
  cp.n = int(chains.size());
  cp.rel.assign(chains.size(), std::vector<char>(chains.size(), 0));
  std::vector<std::vector<int>> sorted(chains.size());
  for (size_t i = 0; i < chains.size(); ++i) {
    sorted[i] = chains[i];
    std::sort(sorted[i].begin(), sorted[i].end());
  }
  // Reverse inclusion: a longer chain sits below each of its subchains, so
  // taking the minimum entry is monotone.
  for (size_t i = 0; i < chains.size(); ++i)
    for (size_t j = 0; j < chains.size(); ++j)
      cp.rel[i][j] = std::includes(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                                   sorted[j].end())
                         ? 1
                         : 0;
  PosetDiagram bd;
  bd.poset = cp;
  for (const auto& ch : chains) bd.value.push_back(d.value[size_t(ch.front())]);
  for (size_t i = 0; i < chains.size(); ++i)
    for (size_t j = 0; j < chains.size(); ++j) {
      if (i == j || !cp.leq(int(i), int(j))) continue;
      int a = chains[i].front();
      int b = chains[j].front();
      bd.maps[{int(i), int(j)}] =
          a == b ? ChainMap::identity(d.value[size_t(a)]) : d.map_of(a, b);
    }
  r.right = homology(hocolim_complex(bd));
  r.equal = r.left.same_as(r.right);
  return r;
}

CompareReport cube_model_compare(const PosetDiagram& d, const std::vector<int>& dims) {
  CompareReport r;
  r.left = homology(total_cofiber_over_poset(d));
  r.right = homology(total_cofiber(cube_of(d, dims)));
  r.equal = r.left.same_as(r.right);
  return r;
}

namespace {

Int cross2(const QVector& a, const QVector& b) {
  Rational c = a[0] * b[1] - a[1] * b[0];
  return c > 0 ? Int(1) : (c < 0 ? Int(-1) : Int(0));
}

// Counterclockwise from (1, 0): upper half circle first, then the lower.
bool ray_circular_less(const QVector& a, const QVector& b) {
  auto half = [](const QVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0) ? 0 : 1; };
  int ha = half(a);
  int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

}  // namespace

PosetDiagram desk_diagram(const SubspacePoset& p, GeomKind kind, const std::vector<QVector>& rays) {
  PosetDiagram d;
  d.poset = p.relation();
  int m = p.size();
  if (kind == GeomKind::Euclidean) {
    d.value.assign(size_t(m), ChainComplex::point());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && d.poset.leq(i, j)) d.maps[{i, j}] = ChainMap::identity(ChainComplex::point());
    d.validate();
    return d;
  }
  if (kind != GeomKind::Spherical)
    throw std::invalid_argument("desk models cover Euclidean and spherical geometry");
  int amb = p.ambient.ambient;
  if (p.ambient.dim() != amb || amb < 1 || amb > 2)
    throw std::invalid_argument("spherical desk models cover S0 and S1 only");

  std::set<QVector> ray_set;
  for (const auto& r : rays) ray_set.insert(canonical_ray(r));
  if (amb == 1 && ray_set.empty()) {
    ray_set.insert({Rational(1)});
    ray_set.insert({Rational(-1)});
  }
  if (ray_set.empty()) throw std::invalid_argument("spherical desk needs declared rays");
  for (const auto& r : ray_set) {
    if (int(r.size()) != amb) throw std::invalid_argument("ray ambient dimension mismatch");
    QVector neg = r;
    for (auto& x : neg) x = -x;
    if (!ray_set.count(canonical_ray(neg)))
      throw std::invalid_argument("ray set not antipode-closed");
  }

  if (amb == 1) {
    // S0: the top is the two-point sphere itself and there are no proper
    // elements.
    d.value.assign(size_t(m), ChainComplex{});
    ChainComplex two;
    two.dims = {2};
    two.boundary = {SparseIntMatrix(0, 2)};
    d.value[size_t(p.top_index())] = two;
    d.validate();
    return d;
  }

  std::vector<QVector> circle(ray_set.begin(), ray_set.end());
  std::sort(circle.begin(), circle.end(), ray_circular_less);
  int nv = int(circle.size());
  ChainComplex top;
  top.dims = {nv, nv};
  top.boundary.resize(2);
  top.boundary[0] = SparseIntMatrix(0, nv);
  SparseIntMatrix edges(nv, nv);
  for (int i = 0; i < nv; ++i) {
    // Edge i runs from vertex i to the next one around the circle.
    edges.add((i + 1) % nv, i, Int(1));
    edges.add(i, i, Int(-1));
  }
  top.boundary[1] = edges;

  d.value.assign(size_t(m), ChainComplex{});
  d.value[size_t(p.top_index())] = top;
  std::vector<std::vector<int>> line_rays(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (i == p.top_index()) continue;
    for (int v = 0; v < nv; ++v)
      if (p.elements[size_t(i)].contains(circle[size_t(v)])) line_rays[size_t(i)].push_back(v);
    if (line_rays[size_t(i)].size() != 2)
      throw std::invalid_argument("a line of the poset has no declared ray pair");
    ChainComplex pts;
    pts.dims = {2};
    pts.boundary = {SparseIntMatrix(0, 2)};
    d.value[size_t(i)] = pts;
  }
  for (int i = 0; i < m; ++i) {
    if (i == p.top_index()) continue;
    SparseIntMatrix inc(nv, 2);
    inc.add(line_rays[size_t(i)][0], 0, Int(1));
    inc.add(line_rays[size_t(i)][1], 1, Int(1));
    ChainMap f;
    f.maps = {inc};
    d.maps[{i, p.top_index()}] = f;
  }
  d.validate();
  return d;
}

PtDesk pt_complex_desk(const SubspacePoset& p, GeomKind kind, const std::vector<QVector>& rays) {
  PtDesk out;
  PosetDiagram d = desk_diagram(p, kind, rays);
  out.cube = cube_of(d, p.geometric_dims());
  out.tcofib = total_cofiber(out.cube);
  out.reduced = homology(out.tcofib);
  return out;
}

SolomonTitsReport solomon_tits_check(const SubspacePoset& p, int degree) {
  SolomonTitsReport rep;
  rep.degree = degree;
  std::pair<OrderComplex, OrderComplex> both = tits_and_st(p);
  rep.st_homology = reduced_homology(both.second.chains());
  rep.concentrated = true;
  for (size_t k = 0; k < rep.st_homology.free_rank.size(); ++k) {
    if (!rep.st_homology.torsion[k].empty()) rep.concentrated = false;
    if (int(k) != degree && rep.st_homology.free_rank[k] != 0) rep.concentrated = false;
  }
  if (degree >= 0 && degree < int(rep.st_homology.free_rank.size()))
    rep.rank = rep.st_homology.free_rank[size_t(degree)];
  return rep;
}

}  // namespace scl
