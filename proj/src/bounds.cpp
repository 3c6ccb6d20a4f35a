#include "polyface/bounds.hpp"

#include "polyface/serialize.hpp"

namespace polyface {

Scalar rho(int d, int k) {
  if (k < 0 || k >= d) {
    throw Error(ErrorCode::OutOfRange, "rho(" + std::to_string(d) + ", " + std::to_string(k) + ") needs 0 <= k < d");
  }
  const Integer sum = binomial((d + 1) / 2, k) + binomial(d / 2, k);
  return Scalar(sum, 2);
}

bool convexity_lemma_check(long long a, long long b, long long c) {
  const Integer lhs = binomial(a, c) + binomial(b, c);
  const Integer rhs = binomial((a + b + 1) / 2, c) + binomial((a + b) / 2, c);
  return lhs >= rhs;
}

bool BoundReport::ok() const {
  for (const auto& r : rows) {
    if (!r.ok()) return false;
  }
  return true;
}

BoundReport evaluate_main_bounds(const FVector& f, bool simple, bool simplicial) {
  const int d = f.dim();
  if (d < 1) throw Error(ErrorCode::OutOfRange, "bounds need a polytope of dimension >= 1");
  BoundReport report;
  report.dim = d;
  report.f = f;
  report.simple = simple;
  report.simplicial = simplicial;
  const Scalar f0 = f[0];
  const Scalar facets = f[d - 1];
  for (int k = 0; k < d; ++k) {
    BoundRow row;
    row.k = k;
    row.f_k = f[k];
    row.ratio_vertices = Scalar(f[k]) / f0;
    row.rho_vertices = rho(d, k);
    row.ratio_facets = Scalar(f[k]) / facets;
    row.rho_facets = rho(d, d - k - 1);
    row.satisfied_vertices = row.ratio_vertices >= row.rho_vertices;
    row.satisfied_facets = row.ratio_facets >= row.rho_facets;
    row.equality_vertices = row.ratio_vertices == row.rho_vertices;
    row.equality_facets = row.ratio_facets == row.rho_facets;
    row.predicted_vertices = k == 0 || (k == 1 && simple);
    row.predicted_facets = k == d - 1 || (k == d - 2 && simplicial);
    report.rows.push_back(std::move(row));
  }
  return report;
}

BoundReport verify_main_bounds(const Polytope& polytope) {
  auto report = evaluate_main_bounds(f_vector(polytope), is_simple(polytope), is_simplicial(polytope));
  if (!report.ok()) {
    nlohmann::json dump;
    dump["polytope"] = polytope_to_json(polytope);
    dump["report"] = to_json(report);
    throw Error(ErrorCode::BoundViolated, dump.dump());
  }
  return report;
}

BaranyReport barany_check(const FVector& f) {
  const int d = f.dim();
  BaranyReport report;
  report.min_count = std::min(f[0], f[d - 1]);
  report.ok = true;
  for (int k = 0; k < d; ++k) {
    BaranyRow row;
    row.k = k;
    row.f_k = f[k];
    row.at_least_min = f[k] >= report.min_count;
    row.applies_vertices = k <= d / 2;
    row.at_least_vertices = f[k] >= f[0];
    row.applies_facets = k >= (d + 1) / 2 - 1;
    row.at_least_facets = f[k] >= f[d - 1];
    report.ok = report.ok && row.at_least_min && (!row.applies_vertices || row.at_least_vertices) &&
                (!row.applies_facets || row.at_least_facets);
    report.rows.push_back(row);
  }
  return report;
}

BaranyReport barany_check(const Polytope& polytope) { return barany_check(f_vector(polytope)); }

Integer xue_bound(int d, int s, int k) {
  if (s < 1 || s > d) throw Error(ErrorCode::OutOfRange, "xue_bound needs 1 <= s <= d");
  if (k < 0 || k >= d) throw Error(ErrorCode::OutOfRange, "xue_bound needs 0 <= k < d");
  return binomial(d + 1, k + 1) + binomial(d, k + 1) - binomial(d + 1 - s, k + 1);
}

XueReport xue_check(const FVector& f) {
  const int d = f.dim();
  XueReport report;
  report.s = static_cast<int>(f[0]) - d;
  report.applicable = report.s >= 1 && report.s <= d;
  if (!report.applicable) return report;
  for (int k = 0; k < d; ++k) {
    report.bounds.push_back(xue_bound(d, report.s, k));
    report.ok = report.ok && Integer(f[k]) >= report.bounds.back();
  }
  return report;
}

XueReport xue_check(const Polytope& polytope) { return xue_check(f_vector(polytope)); }

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

namespace {

void add_link(BjornerReport& report, const FVector& f, int i, Relation rel) {
  const long long a = f[i];
  const long long b = f[i + 1];
  bool holds = false;
  switch (rel) {
    case Relation::Less: holds = a < b; break;
    case Relation::LessEq: holds = a <= b; break;
    case Relation::Greater: holds = a > b; break;
    case Relation::GreaterEq: holds = a >= b; break;
  }
  report.links.push_back({i, rel, holds});
  report.ok = report.ok && holds;
}

}  // namespace

BjornerReport bjorner_check(const FVector& f, bool simple, bool simplicial) {
  const int d = f.dim();
  BjornerReport report;
  // The chains are stated for d >= 3; for polygons the decreasing chain
  // would demand f_0 > f_1.
  report.applicable = d >= 3 && (simple || simplicial);
  if (!report.applicable) return report;
  if (simplicial) {
    report.checked_simplicial = true;
    const int top = d / 2;
    for (int i = 0; i + 1 < top; ++i) add_link(report, f, i, Relation::Less);
    add_link(report, f, top - 1, Relation::LessEq);
    for (int i = 3 * (d - 1) / 4; i + 1 <= d - 1; ++i) add_link(report, f, i, Relation::Greater);
  }
  if (simple) {
    report.checked_simple = true;
    const int rise = (d - 1 + 3) / 4;  // ceil((d-1)/4)
    for (int i = 0; i < rise; ++i) add_link(report, f, i, Relation::Less);
    const int half = (d + 1) / 2;  // ceil(d/2)
    add_link(report, f, half - 1, Relation::GreaterEq);
    for (int i = half; i + 1 <= d - 1; ++i) add_link(report, f, i, Relation::Greater);
  }
  return report;
}

BjornerReport bjorner_check(const Polytope& polytope) {
  return bjorner_check(f_vector(polytope), is_simple(polytope), is_simplicial(polytope));
}

}  // namespace polyface
