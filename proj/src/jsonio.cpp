#include "scl/jsonio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scl {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field: ") + key);
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) bad(std::string("field is not a string: ") + key);
  return f.get<std::string>();
}

Json int_json(const Int& n) { return Json(n.get_str()); }

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (!j.is_string()) bad("integer must be a string or a number");
  const std::string s = j.get<std::string>();
  Int n;
  if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) bad("bad integer: " + s);
  return n;
}

Json kgroup_rows_json(const std::vector<KGroupRow>& rows) {
  Json out = Json::array();
  for (const KGroupRow& r : rows) {
    Json row;
    row["degree"] = r.degree;
    row["free_dim"] = r.free_dim;
    if (r.wedge_exponent >= 0) row["wedge_exponent"] = r.wedge_exponent;
    Json tors = Json::array();
    for (const Int& t : r.torsion) tors.push_back(int_json(t));
    row["torsion"] = tors;
    out.push_back(row);
  }
  return out;
}

Json symbol_combo_json(const std::map<std::string, Rational>& combo) {
  Json out = Json::object();
  for (const auto& [sym, coeff] : combo) out[sym] = rational_json(coeff);
  return out;
}

std::map<std::string, Rational> symbol_combo_from_json(const Json& j) {
  if (!j.is_object()) bad("relation must be an object mapping symbol to coefficient");
  std::map<std::string, Rational> combo;
  for (const auto& [sym, coeff] : j.items()) combo[sym] = rational_from_json(coeff);
  return combo;
}

}  // namespace

Json rational_json(const Rational& r) { return Json(r.get_str()); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("rational must be a string or an integer");
  const std::string s = j.get<std::string>();
  Rational r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) bad("bad rational: " + s);
  if (sgn(r.get_den()) == 0) bad("bad rational: " + s);
  r.canonicalize();
  return r;
}

Json qvector_json(const QVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(rational_json(x));
  return out;
}

QVector qvector_from_json(const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  QVector v;
  for (const Json& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json qmatrix_json(const QMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows; ++i) out.push_back(qvector_json(m.row(i)));
  return out;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<QVector> rows;
  for (const Json& r : j) rows.push_back(qvector_from_json(r));
  int cols = rows.empty() ? 0 : int(rows[0].size());
  for (const QVector& r : rows)
    if (int(r.size()) != cols) bad("matrix rows have unequal lengths");
  QMatrix m(int(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = rows[size_t(i)][size_t(k)];
  return m;
}

Json polytope_json(const Polytope& p) {
  Json out;
  out["geometry"] = p.geom.str();
  Json simplices = Json::array();
  const bool spherical = p.geom.kind == GeomKind::Spherical;
  for (const Simplex& s : p.simplices) {
    Json cell = Json::array();
    for (const Point& v : s.v) cell.push_back(qvector_json(spherical ? canonical_ray(v) : v));
    simplices.push_back(cell);
  }
  out["simplices"] = simplices;
  return out;
}

Polytope polytope_from_json(const Json& j) {
  Polytope p;
  p.geom = GeometryId::parse(string_field(j, "geometry"));
  const Json& simplices = field(j, "simplices");
  if (!simplices.is_array()) bad("simplices must be an array");
  for (const Json& cell : simplices) {
    if (!cell.is_array()) bad("simplex must be an array of vertices");
    Simplex s;
    for (const Json& v : cell) s.v.push_back(qvector_from_json(v));
    if (p.geom.kind == GeomKind::Spherical)
      for (Point& v : s.v) v = canonical_ray(v);
    p.simplices.push_back(std::move(s));
  }
  validate_polytope(p);
  return p;
}

Json cover_json(const Cover& c) {
  Json out;
  out["target"] = polytope_json(c.target);
  Json pieces = Json::array();
  for (const Polytope& p : c.pieces) pieces.push_back(polytope_json(p));
  out["pieces"] = pieces;
  return out;
}

Cover cover_from_json(const Json& j) {
  Cover c;
  c.target = polytope_from_json(field(j, "target"));
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) bad("pieces must be an array");
  for (const Json& p : pieces) c.pieces.push_back(polytope_from_json(p));
  return c;
}

Json sum_json(const FormalPolytopeSum& s) {
  Json out;
  out["geometry"] = s.geom.str();
  Json terms = Json::array();
  for (const auto& [coeff, poly] : s.terms) {
    Json term;
    term["coefficient"] = int_json(coeff);
    term["polytope"] = polytope_json(poly);
    terms.push_back(term);
  }
  out["terms"] = terms;
  return out;
}

FormalPolytopeSum sum_from_json(const Json& j) {
  FormalPolytopeSum s;
  s.geom = GeometryId::parse(string_field(j, "geometry"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const Json& t : terms)
    s.terms.push_back({int_from_json(field(t, "coefficient")),
                       polytope_from_json(field(t, "polytope"))});
  return s;
}

Json subspace_json(const Subspace& s) { return qmatrix_json(s.basis); }

Subspace subspace_from_json(const Json& j, int ambient) {
  QMatrix basis = qmatrix_from_json(j);
  if (basis.rows > 0 && basis.cols != ambient) bad("subspace basis has the wrong ambient dimension");
  std::vector<QVector> rows;
  for (int i = 0; i < basis.rows; ++i) rows.push_back(basis.row(i));
  return Subspace::span_of(rows, ambient);
}

SubspacePoset poset_from_json(const Json& j) {
  const Json& amb = field(j, "ambient");
  Subspace ambient = Subspace::zero(0);
  if (amb.is_number_integer()) {
    ambient = Subspace::full(amb.get<int>());
  } else {
    QMatrix rows = qmatrix_from_json(amb);
    if (rows.rows == 0) bad("ambient basis is empty");
    std::vector<QVector> vs;
    for (int i = 0; i < rows.rows; ++i) vs.push_back(rows.row(i));
    ambient = Subspace::span_of(vs, rows.cols);
  }
  std::vector<Subspace> gens;
  const Json& gj = field(j, "generators");
  if (!gj.is_array()) bad("generators must be an array of bases");
  for (const Json& g : gj) gens.push_back(subspace_from_json(g, ambient.ambient));
  bool chart = j.contains("euclidean_chart") && j.at("euclidean_chart").is_boolean() &&
               j.at("euclidean_chart").get<bool>();
  return generate_poset(gens, ambient, chart);
}

Json poset_json(const SubspacePoset& p) {
  Json out;
  out["ambient"] = subspace_json(p.ambient);
  out["euclidean_chart"] = p.euclidean_chart;
  Json elems = Json::array();
  for (const Subspace& s : p.elements) elems.push_back(subspace_json(s));
  out["elements"] = elems;
  return out;
}

Json witness_json(const DecompositionWitness& w) {
  Json out;
  out["source"] = polytope_json(w.source);
  out["target"] = polytope_json(w.target);
  Json pieces = Json::array();
  for (const auto& [poly, move] : w.pieces) {
    Json piece;
    piece["polytope"] = polytope_json(poly);
    piece["matrix"] = qmatrix_json(move.m);
    pieces.push_back(piece);
  }
  out["pieces"] = pieces;
  out["group"] = move_group_str(w.group);
  return out;
}

DecompositionWitness witness_from_json(const Json& j) {
  DecompositionWitness w;
  w.source = polytope_from_json(field(j, "source"));
  w.target = polytope_from_json(field(j, "target"));
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) bad("pieces must be an array");
  for (const Json& piece : pieces) {
    Polytope poly = polytope_from_json(field(piece, "polytope"));
    Isometry move = Isometry::from_matrix(poly.geom, qmatrix_from_json(field(piece, "matrix")));
    w.pieces.push_back({std::move(poly), std::move(move)});
  }
  w.group = parse_move_group(string_field(j, "group"));
  return w;
}

Json measured_polytope_json(const MeasuredPolytope& mp) {
  Json edges = Json::array();
  for (const MeasuredEdge& e : mp.edges) {
    Json edge;
    edge["length"] = e.length;
    edge["angle"] = e.angle;
    edge["multiplicity"] = rational_json(e.multiplicity);
    edges.push_back(edge);
  }
  Json out;
  out["edges"] = edges;
  return out;
}

MeasuredPolytope measured_polytope_from_json(const Json& j) {
  MeasuredPolytope mp;
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (const Json& e : edges)
    mp.edges.push_back({string_field(e, "length"), string_field(e, "angle"),
                        rational_from_json(field(e, "multiplicity"))});
  return mp;
}

Json relation_set_json(const AngleRelationSet& rel) {
  Json out;
  out["length_symbols"] = rel.length_symbols;
  out["angle_symbols"] = rel.angle_symbols;
  Json lr = Json::array();
  for (const auto& combo : rel.length_relations) lr.push_back(symbol_combo_json(combo));
  out["length_relations"] = lr;
  Json ar = Json::array();
  for (const auto& combo : rel.angle_relations) ar.push_back(symbol_combo_json(combo));
  out["angle_relations"] = ar;
  return out;
}

AngleRelationSet relation_set_from_json(const Json& j) {
  AngleRelationSet rel;
  for (const Json& s : field(j, "length_symbols")) rel.length_symbols.push_back(s.get<std::string>());
  for (const Json& s : field(j, "angle_symbols")) rel.angle_symbols.push_back(s.get<std::string>());
  const Json& lr = field(j, "length_relations");
  if (!lr.is_array()) bad("length_relations must be an array");
  for (const Json& combo : lr) rel.length_relations.push_back(symbol_combo_from_json(combo));
  const Json& ar = field(j, "angle_relations");
  if (!ar.is_array()) bad("angle_relations must be an array");
  for (const Json& combo : ar) rel.angle_relations.push_back(symbol_combo_from_json(combo));
  return rel;
}

Json rays_from_file_json(const std::vector<QVector>& rays) {
  Json out = Json::array();
  for (const QVector& r : rays) out.push_back(qvector_json(canonical_ray(r)));
  return out;
}

std::vector<QVector> rays_from_json(const Json& j) {
  if (!j.is_array()) bad("rays must be an array of vectors");
  std::vector<QVector> rays;
  for (const Json& r : j) rays.push_back(canonical_ray(qvector_from_json(r)));
  return rays;
}

Json homology_json(const HomologyResult& h) {
  Json out;
  out["free_rank"] = h.free_rank;
  Json tors = Json::array();
  for (const auto& degree : h.torsion) {
    Json factors = Json::array();
    for (const Int& t : degree) factors.push_back(int_json(t));
    tors.push_back(factors);
  }
  out["torsion"] = tors;
  out["rational_rank"] = h.rational_rank;
  return out;
}

Json triangulation_json(const Triangulation& t) {
  Json out;
  out["geometry"] = t.geom.str();
  Json verts = Json::array();
  const bool spherical = t.geom.kind == GeomKind::Spherical;
  for (const Point& v : t.vertices) verts.push_back(qvector_json(spherical ? canonical_ray(v) : v));
  out["vertices"] = verts;
  out["cells"] = t.cells;
  out["piece_cells"] = t.piece_cells;
  return out;
}

Json subdivision_report_json(const SubdivisionReport& r) {
  Json out;
  out["valid"] = r.valid;
  if (!r.valid) {
    out["reason"] = r.reason;
    if (!r.witness.empty()) out["witness"] = r.witness;
  }
  return out;
}

Json refined_cover_json(const RefinedCover& rc) {
  Json out;
  out["cover"] = cover_json(rc.cover);
  Json prov = Json::array();
  for (const auto& [i, j] : rc.provenance) prov.push_back(Json::array({i, j}));
  out["piece_sources"] = prov;
  return out;
}

Json pt_element_json(const PtElement& e) {
  Json out;
  out["geometry"] = e.geom.str();
  out["arrangement"] = triangulation_json(e.tri);
  Json labels = Json::array();
  for (const Int& l : e.labels) labels.push_back(int_json(l));
  out["labels"] = labels;
  out["is_zero"] = e.is_zero();
  return out;
}

Json st_element_json(const StElement& e) {
  Json out;
  out["geometry"] = e.geom.str();
  Json subs = Json::array();
  for (const Subspace& s : e.subspaces) subs.push_back(subspace_json(s));
  out["subspaces"] = subs;
  out["rays"] = rays_from_file_json(e.rays);
  Json rep = Json::array();
  for (const Int& c : e.rep) rep.push_back(int_json(c));
  out["representative"] = rep;
  out["pt_rank"] = e.pt_rank;
  out["suspension_rank"] = e.susp_rank;
  out["st_rank"] = e.st_rank;
  out["torsion_free"] = e.torsion_free;
  out["is_zero"] = e.is_zero();
  return out;
}

Json colimit_json(const ColimitReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["stages"] = r.stages;
  out["refined_generators"] = r.refined_generators;
  out["added_simplices"] = r.added_simplices;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json compare_json(const CompareReport& r) {
  Json out;
  out["equal"] = r.equal;
  out["left"] = homology_json(r.left);
  out["right"] = homology_json(r.right);
  return out;
}

Json solomon_tits_json(const SolomonTitsReport& r) {
  Json out;
  out["degree"] = r.degree;
  out["concentrated"] = r.concentrated;
  out["rank"] = r.rank;
  out["homology"] = homology_json(r.st_homology);
  return out;
}

Json suspension_json(const SuspensionAnalysis& a) {
  Json out;
  out["subspace"] = subspace_json(a.u);
  out["compressed"] = polytope_json(a.compressed);
  Json normals = Json::array();
  for (const QVector& n : a.active_normals) normals.push_back(qvector_json(n));
  out["active_normals"] = normals;
  return out;
}

Json kgroup_json(const KGroupReport& r) {
  Json out;
  out["geometry"] = r.geometry;
  out["group"] = r.group;
  out["desk_dim"] = r.desk_dim;
  out["integral"] = r.integral;
  out["provenance"] = r.provenance;
  out["rows"] = kgroup_rows_json(r.rows);
  return out;
}

Json reduced_circle_json(const ReducedCircleReport& r) {
  Json out;
  out["modulus"] = r.modulus;
  out["desk_dim"] = r.desk_dim;
  out["group_rows"] = kgroup_rows_json(r.group_rows);
  out["k_rows"] = kgroup_rows_json(r.k_rows);
  out["o2_rational"] = r.o2_rational;
  out["rank_consistent"] = r.rank_consistent;
  return out;
}

Json dupont_json(const DupontSplit& s) {
  Json out;
  out["m"] = s.m;
  out["kernel_dim"] = s.kernel_dim;
  out["cokernel_dim"] = s.cokernel_dim;
  out["k_dim"] = s.k_dim();
  return out;
}

Json eigen_json(const EigenReport& r) {
  Json out;
  out["scalar"] = rational_json(r.scalar);
  out["summand_dim"] = r.summand_dim;
  out["annihilated"] = r.annihilated;
  return out;
}

Json decision_json(const ScissorsDecision& d) {
  Json out;
  out["congruent"] = d.congruent;
  out["measure"] = d.measure;
  out["source_value"] = rational_json(d.source_value);
  out["target_value"] = rational_json(d.target_value);
  if (d.witness) out["pieces"] = int(d.witness->pieces.size());
  return out;
}

Json invariants_json(const TranslationInvariants& inv) {
  Json out;
  out["area"] = rational_json(inv.area);
  Json weights = Json::array();
  for (const auto& [dir, wt] : inv.edge_weights) {
    Json w;
    w["direction"] = qvector_json(dir);
    w["weight"] = rational_json(wt);
    weights.push_back(w);
  }
  out["edge_weights"] = weights;
  return out;
}

Json dehn_json(const DehnElement& e) {
  Json out;
  out["length_symbols"] = e.length_symbols;
  out["angle_symbols"] = e.angle_symbols;
  out["coordinates"] = qmatrix_json(e.coords);
  out["is_zero"] = e.is_zero();
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write file: " + path);
  out << dump_json(j);
}

}  // namespace scl
