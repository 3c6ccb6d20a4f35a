#pragma once

// JSON forms of polytopes and reports. Rationals are written as "p/q" strings.

#include <json.hpp>

#include <span>
#include <vector>

#include "polyface/bounds.hpp"
#include "polyface/polytope.hpp"
#include "polyface/projection.hpp"
#include "polyface/solid_angles.hpp"

namespace polyface {

using Json = nlohmann::json;

/// {"ambient_dim": n, "vertices": [["p/q", ...], ...]} in ambient coordinates.
Json polytope_to_json(const Polytope& p);
/// Reads the format above. Coordinates may be strings or JSON integers.
/// Facets and the lattice are always recomputed. Throws ParseError.
Polytope polytope_from_json(const Json& j);

Json to_json(const IndexSet& set);
Json to_json(const FVector& f);
Json to_json(const BoundReport& r);
Json to_json(const BaranyReport& r);
Json to_json(const XueReport& r);
Json to_json(const BjornerReport& r);
Json to_json(const IndexSet& face, const AngleEstimate& e, Verdict verdict);
Json to_json(const AngleSumReport& r);
Json to_json(const CurvatureReport& r);
Json to_json(const PropositionReport& r);
Json to_json(const PerlesReport& r);
Json to_json(const DiagramVertex& dv);
Json to_json(const GapReport& r);
Json to_json(const QuotientWitness& w);

/// Direction, facet partition, shadow f-vector, diagram vertices and gap rows.
Json projection_to_json(const Direction& v, const ShadowPolytope& sh, const ShadowComplexes& cx,
                        std::span<const DiagramVertex> vertices, std::span<const GapReport> gaps);

}  // namespace polyface
