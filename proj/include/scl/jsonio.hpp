#pragma once

#include <string>

#include "json.hpp"
#include "scl/cones.hpp"
#include "scl/flagcx.hpp"
#include "scl/geometry.hpp"
#include "scl/kcalc.hpp"
#include "scl/pt.hpp"
#include "scl/qlinalg.hpp"
#include "scl/witness.hpp"

// JSON formats: rationals are "p/q" strings with "/q" omitted when the
// denominator is 1; matrices are row-major arrays of rows; spherical
// vertices are primitive integer ray vectors. Parsers throw
// std::invalid_argument with a short path-free message on malformed input.
namespace scl {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json qvector_json(const QVector& v);
QVector qvector_from_json(const Json& j);

Json qmatrix_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json polytope_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json cover_json(const Cover& c);
Cover cover_from_json(const Json& j);

Json sum_json(const FormalPolytopeSum& s);
FormalPolytopeSum sum_from_json(const Json& j);

Json subspace_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, int ambient);

// Input form {ambient, generators, euclidean_chart?}: ambient is a basis
// (list of vectors) or an integer dimension meaning the full space; the
// poset itself is generated by intersection closure.
SubspacePoset poset_from_json(const Json& j);
Json poset_json(const SubspacePoset& p);

Json witness_json(const DecompositionWitness& w);
DecompositionWitness witness_from_json(const Json& j);

Json measured_polytope_json(const MeasuredPolytope& mp);
MeasuredPolytope measured_polytope_from_json(const Json& j);

// Relation files: each relation is one rational linear combination written
// as an object mapping symbol -> coefficient.
Json relation_set_json(const AngleRelationSet& rel);
AngleRelationSet relation_set_from_json(const Json& j);

Json rays_from_file_json(const std::vector<QVector>& rays);
std::vector<QVector> rays_from_json(const Json& j);

Json homology_json(const HomologyResult& h);
Json triangulation_json(const Triangulation& t);
Json subdivision_report_json(const SubdivisionReport& r);
Json refined_cover_json(const RefinedCover& rc);
Json pt_element_json(const PtElement& e);
Json st_element_json(const StElement& e);
Json colimit_json(const ColimitReport& r);
Json compare_json(const CompareReport& r);
Json solomon_tits_json(const SolomonTitsReport& r);
Json suspension_json(const SuspensionAnalysis& a);
Json kgroup_json(const KGroupReport& r);
Json reduced_circle_json(const ReducedCircleReport& r);
Json dupont_json(const DupontSplit& s);
Json eigen_json(const EigenReport& r);
Json decision_json(const ScissorsDecision& d);
Json invariants_json(const TranslationInvariants& inv);
Json dehn_json(const DehnElement& e);

// Canonical dump: two-space indentation and a trailing newline, so equal
// inputs produce byte-identical files.
std::string dump_json(const Json& j);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace scl
