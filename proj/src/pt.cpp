#include "scl/pt.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "scl/cones.hpp"

namespace scl {

namespace {

bool all_zero(const std::vector<Int>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Nonzero-labeled top cells of e as single-simplex polytopes.
void support_cells(const PtElement& e, std::vector<Polytope>* polys, std::vector<Int>* coeffs) {
  if (e.tri.cells.empty()) return;
  int d = e.tri.top_dim();
  const auto& tops = e.tri.top_cells();
  for (size_t i = 0; i < tops.size(); ++i) {
    if (e.labels[i] == 0) continue;
    Polytope p;
    p.geom = e.geom;
    p.simplices.push_back(e.tri.cell_simplex(d, int(i)));
    polys->push_back(p);
    coeffs->push_back(e.labels[i]);
  }
}

// Interiors disjoint iff the union volume splits additively.
bool interiors_disjoint(const Polytope& a, const Polytope& b) {
  Polytope u;
  u.geom = a.geom;
  u.simplices = a.simplices;
  u.simplices.insert(u.simplices.end(), b.simplices.begin(), b.simplices.end());
  return polytope_volume(u) == polytope_volume(a) + polytope_volume(b);
}

}  // namespace

bool PtElement::is_zero() const { return all_zero(labels); }

PtElement pt_class(const FormalPolytopeSum& s) {
  PtElement out;
  out.geom = s.geom;
  out.tri.geom = s.geom;
  std::vector<Polytope> supports;
  std::vector<Int> coeffs;
  for (const auto& term : s.terms) {
    if (!(term.second.geom == s.geom)) throw std::invalid_argument("formal sum mixes geometries");
    validate_polytope(term.second);
    if (term.second.simplices.empty()) continue;
    supports.push_back(term.second);
    coeffs.push_back(term.first);
  }
  if (supports.empty()) return out;
  out.tri = triangulate(supports);
  out.labels.assign(out.tri.top_cells().size(), Int(0));
  for (size_t i = 0; i < supports.size(); ++i)
    for (int c : out.tri.piece_cells[i]) out.labels[size_t(c)] += coeffs[i];
  return out;
}

PtElement pt_class(const Polytope& p) {
  FormalPolytopeSum s;
  s.geom = p.geom;
  s.terms.push_back({Int(1), p});
  return pt_class(s);
}

bool pt_equal(const PtElement& a, const PtElement& b) {
  if (!(a.geom == b.geom)) throw std::invalid_argument("pt_equal needs one geometry");
  std::vector<Polytope> polys;
  std::vector<Int> coeffs;
  support_cells(a, &polys, &coeffs);
  size_t na = polys.size();
  support_cells(b, &polys, &coeffs);
  if (polys.empty()) return true;
  Triangulation t = triangulate(polys);
  std::vector<Int> diff(t.top_cells().size(), Int(0));
  for (size_t i = 0; i < polys.size(); ++i) {
    Int c = i < na ? coeffs[i] : -coeffs[i];
    for (int cell : t.piece_cells[i]) diff[size_t(cell)] += c;
  }
  return all_zero(diff);
}

PtElement g_act(const Isometry& g, const PtElement& a, bool twisted) {
  if (!(g.geom == a.geom)) throw std::invalid_argument("isometry and class geometry differ");
  Int tw = (twisted && g.linear_sign() < 0) ? Int(-1) : Int(1);
  FormalPolytopeSum s;
  s.geom = a.geom;
  std::vector<Polytope> polys;
  std::vector<Int> coeffs;
  support_cells(a, &polys, &coeffs);
  for (size_t i = 0; i < polys.size(); ++i)
    s.terms.push_back({coeffs[i] * tw, apply_isometry(polys[i], g)});
  return pt_class(s);
}

ColimitReport verify_colimit_presentation(const SubdivisionChain& chain) {
  if (chain.geom.kind != GeomKind::Euclidean)
    throw std::invalid_argument("subdivision chains live in a Euclidean geometry");
  ColimitReport rep;
  rep.stages = int(chain.stages.size());
  for (size_t t = 0; t < chain.stages.size(); ++t) {
    const auto& stage = chain.stages[t];
    for (const auto& p : stage) {
      if (!(p.geom == chain.geom)) throw std::invalid_argument("chain mixes geometries");
      validate_polytope(p);
      if (p.simplices.size() != 1)
        throw std::invalid_argument("chain stages hold single simplices");
    }
    for (size_t i = 0; i < stage.size(); ++i)
      for (size_t j = i + 1; j < stage.size(); ++j)
        if (!interiors_disjoint(stage[i], stage[j]))
          throw std::invalid_argument("stage simplices are not almost-disjoint");
  }
  for (size_t t = 0; t + 1 < chain.stages.size(); ++t) {
    const auto& old_stage = chain.stages[t];
    const auto& new_stage = chain.stages[t + 1];
    // Each new simplex refines exactly one old simplex or avoids them all.
    std::vector<std::vector<Polytope>> children(old_stage.size());
    for (const auto& q : new_stage) {
      int parent = -1;
      for (size_t i = 0; i < old_stage.size(); ++i)
        if (polytope_subset(q, old_stage[i])) {
          parent = int(i);
          break;
        }
      if (parent >= 0) {
        children[size_t(parent)].push_back(q);
        continue;
      }
      for (const auto& p : old_stage)
        if (!interiors_disjoint(q, p))
          throw std::invalid_argument(
              "a new simplex neither refines an old one nor avoids them all");
      rep.added_simplices += 1;
    }
    for (size_t i = 0; i < old_stage.size(); ++i) {
      if (children[i].empty())
        throw std::invalid_argument("a simplex disappears along the chain");
      Cover c;
      c.target = old_stage[i];
      c.pieces = children[i];
      SubdivisionReport sr = is_weak_subdivision(c);
      if (!sr.valid)
        throw std::invalid_argument("a stage does not refine the previous one: " + sr.reason);
      // The diagonal transition map sends the generator to the sum of its
      // pieces; both must present the same class.
      FormalPolytopeSum pieces;
      pieces.geom = chain.geom;
      for (const auto& q : children[i]) pieces.terms.push_back({Int(1), q});
      rep.refined_generators += 1;
      if (!pt_equal(pt_class(old_stage[i]), pt_class(pieces))) {
        rep.ok = false;
        std::ostringstream os;
        os << "stage " << t << " simplex " << i << " differs from the sum of its refinement";
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

namespace {

Rational cross2(const QVector& u, const QVector& w) { return u[0] * w[1] - u[1] * w[0]; }

// Circular order starting at the positive x axis, counterclockwise.
bool ray_circular_less(const QVector& a, const QVector& b) {
  auto half = [](const QVector& v) {
    int sy = sgn(v[1]);
    if (sy > 0 || (sy == 0 && sgn(v[0]) > 0)) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross2(a, b)) > 0;
}

QVector rot90(const QVector& v) { return QVector{-v[1], v[0]}; }

// Interior sample of the counterclockwise gap from u to w. For a gap of less
// than a half turn the midpoint direction works; a wider gap (or the full
// circle when u == w) always contains the quarter turn past u.
QVector gap_sample(const QVector& u, const QVector& w) {
  if (sgn(cross2(u, w)) > 0) return canonical_ray(QVector{u[0] + w[0], u[1] + w[1]});
  return canonical_ray(rot90(u));
}

Rational dot2(const QVector& u, const QVector& w) { return u[0] * w[0] + u[1] * w[1]; }

}  // namespace

bool StElement::is_zero() const { return all_zero(rep); }

StElement steinberg_class(const PtElement& a, const std::vector<Subspace>& subspaces,
                          const std::vector<QVector>& rays) {
  if (a.geom.kind != GeomKind::Spherical || a.geom.dim > 1)
    throw std::invalid_argument("the Steinberg desk supports S0 and S1 only");
  int amb = a.geom.ambient();
  StElement out;
  out.geom = a.geom;

  std::set<Subspace> subs;
  for (const auto& v : subspaces) {
    if (v.ambient != amb) throw std::invalid_argument("subspace ambient dimension mismatch");
    if (v.dim() >= amb) throw std::invalid_argument("a listed subspace is not proper");
    subs.insert(v);
  }
  for (auto i = subs.begin(); i != subs.end(); ++i)
    for (auto j = std::next(i); j != subs.end(); ++j)
      if (!subs.count(intersect(*i, *j)))
        throw std::invalid_argument("subspace list not closed under intersection");
  out.subspaces.assign(subs.begin(), subs.end());

  std::set<QVector> ray_set;
  for (const auto& r : rays) {
    if (int(r.size()) != amb) throw std::invalid_argument("ray ambient dimension mismatch");
    ray_set.insert(canonical_ray(r));
  }
  out.rays.assign(ray_set.begin(), ray_set.end());
  if (amb == 2) std::sort(out.rays.begin(), out.rays.end(), ray_circular_less);

  // Desk cells and an interior sample of each. On S0 the cells are the
  // declared points themselves; on S1 they are the gaps between circularly
  // consecutive rays (one full-circle cell when no ray is declared).
  std::vector<QVector> samples;
  int cells = 0;
  if (amb == 1) {
    cells = int(out.rays.size());
    samples = out.rays;
  } else if (out.rays.empty()) {
    cells = 1;
    samples.push_back(QVector{Rational(1), Rational(0)});
  } else {
    cells = int(out.rays.size());
    for (int j = 0; j < cells; ++j)
      samples.push_back(gap_sample(out.rays[size_t(j)], out.rays[size_t((j + 1) % cells)]));
  }

  // Value of a on each cell. Support vertices must be declared rays, which
  // makes the labels constant on every cell.
  std::vector<Int> value(size_t(cells), Int(0));
  if (!a.tri.cells.empty()) {
    int d = a.tri.top_dim();
    const auto& tops = a.tri.top_cells();
    for (size_t i = 0; i < tops.size(); ++i) {
      if (a.labels[i] == 0) continue;
      Simplex s = a.tri.cell_simplex(d, int(i));
      for (const auto& v : s.v)
        if (!ray_set.count(canonical_ray(v)))
          throw std::invalid_argument("ray set not closed under the needed operations");
      if (amb == 1) {
        for (int j = 0; j < cells; ++j)
          if (samples[size_t(j)] == canonical_ray(s.v[0])) value[size_t(j)] += a.labels[i];
      } else {
        Cone c;
        c.gens = s.v;
        for (int j = 0; j < cells; ++j)
          if (cone_member(c, samples[size_t(j)])) value[size_t(j)] += a.labels[i];
      }
    }
  }

  // Suspension subgroup generators in cell coordinates. The zero subspace
  // contributes the full sphere; a line contributes its two closed
  // half-circles, bounded by the perpendicular ray pair.
  std::vector<std::vector<Int>> rows;
  for (const auto& v : out.subspaces) {
    if (v.dim() == 0) {
      rows.push_back(std::vector<Int>(size_t(cells), Int(1)));
      continue;
    }
    // amb == 2 and dim == 1: the only remaining proper case.
    QVector dir = canonical_ray(v.basis.row(0));
    QVector p1 = canonical_ray(rot90(dir));
    QVector p2 = canonical_ray(QVector{dir[1], -dir[0]});
    if (!ray_set.count(p1) || !ray_set.count(p2))
      throw std::invalid_argument("ray set not closed under the needed operations");
    std::vector<Int> plus(size_t(cells), Int(0)), minus(size_t(cells), Int(0));
    for (int j = 0; j < cells; ++j) {
      int side = sgn(dot2(samples[size_t(j)], dir));
      if (side > 0) plus[size_t(j)] = 1;
      if (side < 0) minus[size_t(j)] = 1;
    }
    rows.push_back(plus);
    rows.push_back(minus);
  }
  IMatrix gens(int(rows.size()), cells);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cells; ++j) gens.at(int(i), j) = rows[i][size_t(j)];

  IMatrix h = hnf_rows(gens);
  out.rep = reduce_mod_hnf(value, h);
  out.pt_rank = cells;
  out.susp_rank = h.rows;
  out.st_rank = cells - h.rows;
  out.torsion_free = true;
  for (const auto& d : elementary_divisors(gens))
    if (d != 1) out.torsion_free = false;
  return out;
}

}  // namespace scl
