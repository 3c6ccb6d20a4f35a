#include "polyface/serialize.hpp"

namespace polyface {

namespace {

Json scalars(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

Scalar read_scalar(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  throw Error(ErrorCode::ParseError, "coordinate must be a \"p/q\" string or an integer");
}

}  // namespace

Json polytope_to_json(const Polytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.ambient_vertices()) vertices.push_back(scalars(v));
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", vertices}};
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorCode::ParseError, "polytope JSON needs a \"vertices\" array");
  }
  std::vector<Vector> points;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "vertex must be an array");
    std::vector<Scalar> coords;
    for (const auto& c : row) coords.push_back(read_scalar(c));
    points.emplace_back(std::move(coords));
  }
  if (j.contains("ambient_dim")) {
    const auto n = j["ambient_dim"].get<std::size_t>();
    for (const auto& p : points) {
      if (p.dim() != n) throw Error(ErrorCode::MixedDimensions, "vertex length differs from ambient_dim");
    }
  }
  return hull_from_points(points);
}

Json to_json(const IndexSet& set) { return members(set); }

Json to_json(const FVector& f) { return f.counts(); }

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"f_k", row.f_k},
                    {"ratio_vertices", format_scalar(row.ratio_vertices)},
                    {"rho_vertices", format_scalar(row.rho_vertices)},
                    {"ratio_facets", format_scalar(row.ratio_facets)},
                    {"rho_facets", format_scalar(row.rho_facets)},
                    {"satisfied_vertices", row.satisfied_vertices},
                    {"satisfied_facets", row.satisfied_facets},
                    {"equality_vertices", row.equality_vertices},
                    {"equality_facets", row.equality_facets},
                    {"predicted_vertices", row.predicted_vertices},
                    {"predicted_facets", row.predicted_facets},
                    {"ok", row.ok()}});
  }
  return {{"dim", r.dim}, {"f_vector", to_json(r.f)}, {"simple", r.simple},
          {"simplicial", r.simplicial}, {"rows", rows}, {"ok", r.ok()}};
}

Json to_json(const BaranyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"f_k", row.f_k},
                    {"at_least_min", row.at_least_min},
                    {"applies_vertices", row.applies_vertices},
                    {"at_least_vertices", row.at_least_vertices},
                    {"applies_facets", row.applies_facets},
                    {"at_least_facets", row.at_least_facets}});
  }
  return {{"min", r.min_count}, {"rows", rows}, {"ok", r.ok}};
}

Json to_json(const XueReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(b.str());
  return {{"applicable", r.applicable}, {"s", r.s}, {"bounds", bounds}, {"ok", r.ok}};
}

Json to_json(const BjornerReport& r) {
  Json links = Json::array();
  for (const auto& l : r.links) {
    links.push_back({{"i", l.index}, {"relation", std::string(to_string(l.relation))}, {"holds", l.holds}});
  }
  return {{"applicable", r.applicable},
          {"simplicial", r.checked_simplicial},
          {"simple", r.checked_simple},
          {"links", links},
          {"ok", r.ok}};
}

Json to_json(const IndexSet& face, const AngleEstimate& e, Verdict verdict) {
  return {{"face", to_json(face)},
          {"mean", e.mean},
          {"stderr", e.std_error},
          {"samples", e.samples},
          {"seed", e.seed},
          {"exact", e.exact},
          {"verdict", std::string(to_string(verdict))}};
}

Json to_json(const AngleSumReport& r) {
  Json faces = Json::array();
  for (const auto& [face, est] : r.per_face) faces.push_back(to_json(face, est, Verdict::Pass));
  return {{"k", r.k}, {"sum", r.sum}, {"stderr", r.std_error}, {"faces", faces}};
}

Json to_json(const CurvatureReport& r) {
  Json facets = Json::array();
  for (const auto& [f, est] : r.per_facet) {
    facets.push_back({{"facet", f}, {"mean", est.mean}, {"stderr", est.std_error}, {"exact", est.exact}});
  }
  const Verdict v = r.within_bound ? Verdict::Pass : Verdict::Fail;
  return {{"face", to_json(r.face)},  {"face_dim", r.face_dim},
          {"sum", r.sum},             {"stderr", r.std_error},
          {"exact", r.exact},         {"facets", facets},
          {"equality", r.flagged_equality}, {"verdict", std::string(to_string(v))}};
}

Json to_json(const PropositionReport& r) {
  return {{"k", r.k},
          {"d", r.d},
          {"sum", r.sum},
          {"stderr", r.std_error},
          {"bound", format_scalar(r.bound)},
          {"equality", r.equality},
          {"verdict", std::string(to_string(r.pass ? Verdict::Pass : Verdict::Fail))}};
}

Json to_json(const PerlesReport& r) {
  return {{"k", r.k},
          {"sum", r.angle_sum},
          {"stderr", r.std_error},
          {"f_k", r.f_k},
          {"shadow_counts", r.shadow_counts},
          {"max_shadow", r.max_shadow},
          {"bound", r.bound},
          {"equality", r.equality},
          {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const DiagramVertex& dv) {
  return {{"point", scalars(dv.point)},
          {"x_plus", to_json(dv.x_plus)},
          {"x_minus", to_json(dv.x_minus)},
          {"l_plus", dv.l_plus},
          {"l_minus", dv.l_minus},
          {"interior", dv.interior}};
}

Json to_json(const GapReport& r) {
  return {{"k", r.k},
          {"d", r.d},
          {"f_k", r.f_k},
          {"shadow_f_k", r.shadow_f_k},
          {"bound", format_scalar(r.bound)},
          {"pass", r.pass}};
}

Json to_json(const QuotientWitness& w) {
  Json rows = Json::array();
  for (const auto& row : w.rows) {
    rows.push_back({{"k", row.k},
                    {"through_plus", row.faces_through_plus},
                    {"needed_plus", row.needed_plus.str()},
                    {"through_minus", row.faces_through_minus},
                    {"needed_minus", row.needed_minus.str()},
                    {"ok", row.ok}});
  }
  return {{"dim_quotient_plus", w.dim_quotient_plus},
          {"dim_quotient_minus", w.dim_quotient_minus},
          {"dims_ok", w.dims_ok},
          {"rows", rows},
          {"ok", w.ok}};
}

Json projection_to_json(const Direction& v, const ShadowPolytope& sh, const ShadowComplexes& cx,
                        std::span<const DiagramVertex> vertices, std::span<const GapReport> gaps) {
  Json dv = Json::array();
  for (const auto& x : vertices) dv.push_back(to_json(x));
  Json gap = Json::array();
  for (const auto& g : gaps) gap.push_back(to_json(g));
  Json shadow_f = Json::array();
  for (int k = 0; k < sh.poly.dim(); ++k) shadow_f.push_back(sh.proper_face_count(k));
  return {{"direction", scalars(v.v)},
          {"verified", v.verified},
          {"upper_facets", to_json(cx.upper)},
          {"lower_facets", to_json(cx.lower)},
          {"boundary_matches_shadow", cx.boundary_matches_shadow},
          {"shadow_dim", sh.poly.dim()},
          {"shadow_f_vector", shadow_f},
          {"diagram_vertices", dv},
          {"gap", gap}};
}

}  // namespace polyface
