#include "scl/cones.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace scl {

namespace {

QVector qv_add(const QVector& a, const QVector& b) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Rational qv_dot(const QVector& a, const QVector& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector qv_scale(const Rational& c, const QVector& v) {
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

QMatrix columns_matrix(const std::vector<QVector>& cols) {
  int amb = cols.empty() ? 0 : int(cols[0].size());
  QMatrix m(amb, int(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

QVector interior_sample(const Cone& c, int ambient) {
  QVector s(ambient, Rational(0));
  for (const auto& g : c.gens) s = qv_add(s, g);
  return s;
}

// Unoriented canonical form of a normal vector: primitive integers, first
// nonzero entry positive.
QVector canonical_normal(const QVector& n) {
  QVector k = canonical_ray(n);
  for (const auto& x : k) {
    int s = sgn(x);
    if (s > 0) return k;
    if (s < 0) break;
  }
  QVector neg(n.size());
  for (size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
  return canonical_ray(neg);
}

std::vector<Cone> refine_by(const Cone& c, const std::vector<QVector>& normals) {
  std::vector<Cone> pieces{c};
  for (const auto& n : normals) {
    std::vector<Cone> next;
    for (const auto& p : pieces) split_cone(p, n, next, next);
    pieces = std::move(next);
  }
  return pieces;
}

bool any_cone_member(const std::vector<Cone>& cs, const QVector& x) {
  for (const auto& c : cs)
    if (cone_member(c, x)) return true;
  return false;
}

bool any_cone_member_eps(const std::vector<Cone>& cs, const QVector& x, const QVector& d) {
  for (const auto& c : cs)
    if (cone_member_eps(c, x, d)) return true;
  return false;
}

// Full-dimensional cones in Q^k whose union may overlap; return interior-
// disjoint simplicial cones with the same union. Pieces are classified by
// their sign signature against all facet hyperplanes; an open arrangement
// cell that meets one input cone's interior is entirely inside it, so per
// signature the first claimant's pieces already tile the cell.
std::vector<Cone> normalize_cone_union(const std::vector<Cone>& cs) {
  if (cs.empty()) return {};
  int amb = cs[0].ambient();
  std::vector<QVector> normals = facet_normals(cs);
  std::vector<Cone> out;
  std::map<std::vector<int>, size_t> owner;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (auto& p : refine_by(cs[i], normals)) {
      QVector s = interior_sample(p, amb);
      std::vector<int> sig(normals.size());
      for (size_t j = 0; j < normals.size(); ++j) sig[j] = sgn(qv_dot(normals[j], s));
      auto [it, fresh] = owner.emplace(sig, i);
      if (fresh || it->second == i) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

std::vector<Cone> polytope_cones(const Polytope& p) {
  validate_polytope(p);
  if (p.geom.kind != GeomKind::Spherical)
    throw std::invalid_argument("polytope_cones needs a spherical polytope");
  std::vector<Cone> cs;
  for (const auto& s : p.simplices) cs.push_back(Cone{s.v});
  return cs;
}

Polytope cones_to_polytope(int sphere_dim, const std::vector<Cone>& cs) {
  Polytope p;
  p.geom = sphere_dim < 0 ? GeometryId::empty() : GeometryId::spherical(sphere_dim);
  for (const auto& c : cs) {
    Simplex s;
    for (const auto& g : c.gens) s.v.push_back(canonical_ray(g));
    p.simplices.push_back(std::move(s));
  }
  return p;
}

bool cone_member(const Cone& c, const QVector& x) {
  if (c.gens.empty()) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  auto lam = solve(columns_matrix(c.gens), x);
  if (!lam) return false;
  for (const auto& l : *lam)
    if (l < 0) return false;
  return true;
}

bool cone_member_eps(const Cone& c, const QVector& x, const QVector& d) {
  if (c.gens.empty()) return false;  // x + eps*d != 0 for generic eps unless d = 0
  QMatrix a = columns_matrix(c.gens);
  auto l0 = solve(a, x);
  if (!l0) return false;
  auto l1 = solve(a, d);
  if (!l1) return false;
  for (size_t i = 0; i < l0->size(); ++i) {
    int s0 = sgn((*l0)[i]);
    if (s0 < 0) return false;
    if (s0 == 0 && sgn((*l1)[i]) < 0) return false;
  }
  return true;
}

std::vector<Cone> triangulate_cone(const std::vector<QVector>& gens_in) {
  std::set<QVector> uniq;
  for (const auto& g : gens_in) {
    bool zero = true;
    for (const auto& x : g)
      if (x != 0) zero = false;
    if (!zero) uniq.insert(canonical_ray(g));
  }
  std::vector<QVector> gens(uniq.begin(), uniq.end());
  if (gens.empty()) return {};
  int amb = int(gens[0].size());
  Subspace span = Subspace::span_of(gens, amb);
  int r = span.dim();
  if (r == 1) {
    if (gens.size() > 1) throw std::invalid_argument("cone is not salient");
    return {Cone{gens}};
  }
  if (int(gens.size()) == r) return {Cone{gens}};

  // Coordinates within the span.
  QMatrix bt = span.basis.transpose();  // amb x r
  std::vector<QVector> y(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    auto sol = solve(bt, gens[i]);
    if (!sol) throw std::logic_error("generator outside its own span");
    y[i] = *sol;
  }

  // Facets: independent (r-1)-subsets whose hyperplane has all generators on
  // one side. Deduplicate by the full on-hyperplane generator set.
  std::set<std::vector<int>> facets;
  int n = int(gens.size());
  std::vector<int> sel(r - 1);
  for (int i = 0; i < r - 1; ++i) sel[i] = i;
  while (true) {
    QMatrix sub(r - 1, r);
    for (int i = 0; i < r - 1; ++i)
      for (int j = 0; j < r; ++j) sub.at(i, j) = y[sel[i]][j];
    auto ker = kernel_basis(sub);
    if (ker.size() == 1) {
      const QVector& nv = ker[0];
      int pos = 0, neg = 0;
      std::vector<int> on;
      for (int g = 0; g < n; ++g) {
        int s = sgn(qv_dot(nv, y[g]));
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
        else on.push_back(g);
      }
      if (pos == 0 || neg == 0) facets.insert(on);
    }
    // next combination
    int i = r - 2;
    while (i >= 0 && sel[i] == n - (r - 1) + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < r - 1; ++j) sel[j] = sel[j - 1] + 1;
  }

  std::vector<Cone> out;
  for (const auto& f : facets) {
    if (std::find(f.begin(), f.end(), 0) != f.end()) continue;  // apex on facet
    std::vector<QVector> fgens;
    for (int i : f) fgens.push_back(gens[i]);
    for (const auto& sub : triangulate_cone(fgens)) {
      Cone c;
      c.gens = sub.gens;
      c.gens.push_back(gens[0]);
      std::sort(c.gens.begin(), c.gens.end());
      out.push_back(std::move(c));
    }
  }
  if (out.empty()) throw std::logic_error("pulling triangulation produced nothing");
  return out;
}

void split_cone(const Cone& c, const QVector& n, std::vector<Cone>& nonneg,
                std::vector<Cone>& nonpos) {
  std::vector<int> sign(c.gens.size());
  int pos = 0, neg = 0;
  for (size_t i = 0; i < c.gens.size(); ++i) {
    sign[i] = sgn(qv_dot(n, c.gens[i]));
    if (sign[i] > 0) ++pos;
    if (sign[i] < 0) ++neg;
  }
  if (neg == 0) {
    nonneg.push_back(c);
    return;
  }
  if (pos == 0) {
    nonpos.push_back(c);
    return;
  }
  std::vector<QVector> up, down, cut;
  for (size_t i = 0; i < c.gens.size(); ++i) {
    if (sign[i] >= 0) up.push_back(c.gens[i]);
    if (sign[i] <= 0) down.push_back(c.gens[i]);
  }
  for (size_t i = 0; i < c.gens.size(); ++i)
    for (size_t j = 0; j < c.gens.size(); ++j)
      if (sign[i] > 0 && sign[j] < 0) {
        Rational a = qv_dot(n, c.gens[i]);
        Rational b = qv_dot(n, c.gens[j]);
        // a * g_j - b * g_i lies on the hyperplane and inside the cone
        QVector w = qv_add(qv_scale(a, c.gens[j]), qv_scale(-b, c.gens[i]));
        cut.push_back(canonical_ray(w));
      }
  std::vector<QVector> upg = up, downg = down;
  upg.insert(upg.end(), cut.begin(), cut.end());
  downg.insert(downg.end(), cut.begin(), cut.end());
  for (auto& p : triangulate_cone(upg)) nonneg.push_back(std::move(p));
  for (auto& p : triangulate_cone(downg)) nonpos.push_back(std::move(p));
}

std::vector<QVector> cone_hyperplane_section(const Cone& c, const QVector& n) {
  std::vector<QVector> zero, cut;
  std::vector<std::pair<QVector, Rational>> pos, neg;
  for (const auto& g : c.gens) {
    Rational d = qv_dot(n, g);
    int s = sgn(d);
    if (s == 0) zero.push_back(g);
    else if (s > 0) pos.emplace_back(g, d);
    else neg.emplace_back(g, d);
  }
  for (const auto& [gi, a] : pos)
    for (const auto& [gj, b] : neg)
      cut.push_back(canonical_ray(qv_add(qv_scale(a, gj), qv_scale(-b, gi))));
  zero.insert(zero.end(), cut.begin(), cut.end());
  return zero;
}

std::vector<QVector> facet_normals(const std::vector<Cone>& cs) {
  std::set<QVector> out;
  for (const auto& c : cs) {
    int k = c.dim();
    int amb = c.ambient();
    if (k == 1) {
      // Facet is the origin; its hyperplanes are all of them, but only the
      // ambient line case has a canonical one.
      if (amb == 1) out.insert(QVector{Rational(1)});
      continue;
    }
    for (int drop = 0; drop < k; ++drop) {
      QMatrix m(k - 1, amb);
      int r = 0;
      for (int i = 0; i < k; ++i) {
        if (i == drop) continue;
        for (int j = 0; j < amb; ++j) m.at(r, j) = c.gens[i][j];
        ++r;
      }
      auto ker = kernel_basis(m);
      if (ker.size() != 1) continue;  // cone not full-dimensional in ambient
      out.insert(canonical_normal(ker[0]));
    }
  }
  return std::vector<QVector>(out.begin(), out.end());
}

bool spherical_subset_any_dim(const Polytope& a, const Polytope& b) {
  if (!(a.geom == b.geom)) throw std::invalid_argument("subset geometry mismatch");
  std::vector<Cone> ca = polytope_cones(a), cb = polytope_cones(b);
  if (ca.empty()) return true;
  if (cb.empty()) return false;
  std::vector<Cone> all = ca;
  all.insert(all.end(), cb.begin(), cb.end());
  std::vector<QVector> normals = facet_normals(all);
  int amb = a.geom.ambient();
  for (const auto& c : ca)
    for (const auto& p : refine_by(c, normals))
      if (!any_cone_member(cb, interior_sample(p, amb))) return false;
  return true;
}

bool spherical_set_equal_any_dim(const Polytope& a, const Polytope& b) {
  return spherical_subset_any_dim(a, b) && spherical_subset_any_dim(b, a);
}

Polytope join_with_sphere(const Polytope& p, const Subspace& v) {
  int m = v.ambient;
  int k = v.dim();
  if (p.simplices.empty()) {
    if (k != 0)
      throw std::invalid_argument("empty polytope joins only from the zero subspace");
  } else {
    if (p.geom.kind != GeomKind::Spherical || p.geom.dim != k - 1)
      throw std::invalid_argument("polytope geometry does not match the subspace sphere");
    for (const auto& s : p.simplices) {
      if (int(s.v.size()) != k)
        throw std::invalid_argument("simplex is not top-dimensional in the subspace sphere");
      std::vector<QVector> rays;
      for (const auto& r : s.v) {
        if (int(r.size()) != m) throw std::invalid_argument("ray has wrong ambient dimension");
        if (!v.contains(r)) throw std::invalid_argument("ray outside the subspace");
        rays.push_back(canonical_ray(r));
      }
      if (Subspace::span_of(rays, m).dim() != k)
        throw std::invalid_argument("degenerate simplex in the subspace sphere");
    }
  }
  Subspace perp = orthogonal_complement(v);
  int t = perp.dim();
  std::vector<QVector> pbasis;
  for (int i = 0; i < t; ++i) pbasis.push_back(perp.basis.row(i));

  std::vector<std::vector<QVector>> bases;  // cone generator lists from p
  if (p.simplices.empty()) {
    bases.push_back({});
  } else {
    for (const auto& s : p.simplices) {
      std::vector<QVector> rays;
      for (const auto& r : s.v) rays.push_back(canonical_ray(r));
      bases.push_back(std::move(rays));
    }
  }

  std::vector<Cone> pieces;
  for (const auto& base : bases) {
    for (unsigned long mask = 0; mask < (1ul << t); ++mask) {
      Cone c;
      c.gens = base;
      for (int i = 0; i < t; ++i) {
        QVector b = pbasis[i];
        if (mask & (1ul << i))
          for (auto& x : b) x = -x;
        c.gens.push_back(canonical_ray(b));
      }
      if (c.gens.empty()) continue;  // v full and p has an empty simplex list
      std::sort(c.gens.begin(), c.gens.end());
      pieces.push_back(std::move(c));
    }
  }
  if (pieces.empty()) throw std::invalid_argument("join of empty polytope with empty sphere");
  return cones_to_polytope(m - 1, pieces);
}

SuspensionAnalysis minimal_suspension_subspace(const Polytope& q) {
  std::vector<Cone> cs = polytope_cones(q);
  if (cs.empty()) throw std::invalid_argument("empty polytope has no suspension analysis");
  int m = q.geom.ambient();
  std::vector<QVector> normals = facet_normals(cs);

  SuspensionAnalysis out;
  for (const auto& n : normals) {
    // Facet cones of the union lying inside ker(n).
    std::vector<Cone> fcones;
    for (const auto& c : cs) {
      for (int drop = 0; drop < c.dim(); ++drop) {
        bool on = sgn(qv_dot(n, c.gens[drop])) != 0;
        for (int i = 0; on && i < c.dim(); ++i)
          if (i != drop && sgn(qv_dot(n, c.gens[i])) != 0) on = false;
        if (!on) continue;
        Cone f;
        for (int i = 0; i < c.dim(); ++i)
          if (i != drop) f.gens.push_back(c.gens[i]);
        fcones.push_back(std::move(f));
      }
    }
    bool active = false;
    for (const auto& f : fcones) {
      std::vector<QVector> others;
      for (const auto& n2 : normals) {
        if (n2 == n) continue;
        bool inside = true;
        for (const auto& g : f.gens)
          if (sgn(qv_dot(n2, g)) != 0) inside = false;
        if (!inside) others.push_back(n2);
      }
      for (const auto& piece : refine_by(f, others)) {
        QVector s = interior_sample(piece, m);
        QVector nneg(n.size());
        for (size_t i = 0; i < n.size(); ++i) nneg[i] = -n[i];
        if (any_cone_member_eps(cs, s, n) != any_cone_member_eps(cs, s, nneg)) {
          active = true;
          break;
        }
      }
      if (active) break;
    }
    if (active) out.active_normals.push_back(n);
  }

  out.u = Subspace::span_of(out.active_normals, m);
  int k = out.u.dim();
  if (k == 0) {
    out.compressed.geom = GeometryId::empty();
    return out;
  }

  // Sections of the top cones with u, in u coordinates, then normalized to an
  // interior-disjoint union.
  Subspace uperp = orthogonal_complement(out.u);
  QMatrix bt = out.u.basis.transpose();  // m x k
  std::vector<Cone> secs;
  for (const auto& c : cs) {
    std::vector<QVector> g = c.gens;
    for (int i = 0; i < uperp.dim(); ++i) {
      Cone tmp;
      tmp.gens = g;
      g = cone_hyperplane_section(tmp, uperp.basis.row(i));
    }
    for (auto& piece : triangulate_cone(g)) {
      if (piece.dim() != k) continue;
      Cone yc;
      for (const auto& gen : piece.gens) {
        auto y = solve(bt, gen);
        if (!y) throw std::logic_error("section ray escaped the suspension subspace");
        yc.gens.push_back(canonical_ray(*y));
      }
      secs.push_back(std::move(yc));
    }
  }
  std::vector<Cone> disjoint = normalize_cone_union(secs);
  std::vector<Cone> ambient_cones;
  for (const auto& c : disjoint) {
    Cone ac;
    for (const auto& y : c.gens) ac.gens.push_back(canonical_ray(mul(bt, y)));
    ambient_cones.push_back(std::move(ac));
  }
  out.compressed = cones_to_polytope(k - 1, ambient_cones);
  return out;
}

}  // namespace scl
