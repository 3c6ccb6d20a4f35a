#include "polyface/solid_angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyface/bounds.hpp"
#include "polyface/parallel.hpp"
#include "polyface/rng.hpp"

namespace polyface {

namespace {

const Face& require_face(const Polytope& p, const IndexSet& face) {
  const auto idx = p.lattice().find(face);
  if (!idx) throw Error(ErrorCode::NotAFace, "vertex set is not a face");
  const Face& g = p.lattice().faces()[*idx];
  if (g.dim < 0) throw Error(ErrorCode::NotAFace, "solid angles are undefined at the empty face");
  return g;
}

AngleEstimate exact_estimate(double value, std::uint64_t samples, std::uint64_t seed) {
  return {value, 0.0, samples, seed, true};
}

/// Inner product of two covectors in the dual of the diagonal metric.
double dual_inner(const Vector& a, const Vector& b, const std::vector<Scalar>& metric) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i] / metric[i];
  return to_double(s);
}

double metric_inner(const Vector& a, const Vector& b, const std::vector<Scalar>& metric) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i] * metric[i];
  return to_double(s);
}

double angle_between(double inner, double na, double nb) {
  return std::acos(std::clamp(inner / std::sqrt(na * nb), -1.0, 1.0));
}

/// Interior dihedral angle of P along the ridge shared by facets f and g.
double dihedral(const Polytope& p, std::size_t f, std::size_t g) {
  const auto& w = p.embedding().weights;
  const Vector& a = p.facets()[f].supporting.normal;
  const Vector& b = p.facets()[g].supporting.normal;
  return std::numbers::pi - angle_between(dual_inner(a, b, w), dual_inner(a, a, w), dual_inner(b, b, w));
}

IndexSet local_face(const Polytope& p, std::size_t facet_index, const IndexSet& face) {
  const auto idx = facet_vertex_indices(p, facet_index);
  IndexSet local(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (face.test(idx[j])) local.set(j);
  }
  return local;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Warn: return "WARN";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

TangentCone tangent_cone(const Polytope& p, const IndexSet& face) {
  require_face(p, face);
  TangentCone cone;
  cone.metric = p.embedding().weights;
  cone.apex = Vector(static_cast<std::size_t>(p.dim()));
  const auto idx = members(face);
  for (auto i : idx) cone.apex += p.vertices()[i];
  cone.apex *= Scalar(1, static_cast<long long>(idx.size()));
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    if (face.is_subset_of(p.facets()[f].vertex_set)) {
      cone.normals.push_back(p.facets()[f].supporting.normal);
      cone.facet_indices.push_back(f);
    }
  }
  return cone;
}

AngleEstimate sample_cone_fraction(const TangentCone& cone, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorCode::OutOfRange, "need at least one sample");
  const std::size_t dim = cone.metric.size();
  const std::size_t count = cone.normals.size();
  // Isotropic u in true metric has coordinates g_i / sqrt(w_i); fold the
  // scaling into the normals and sample plain standard normals.
  std::vector<double> normals(count * dim);
  for (std::size_t j = 0; j < count; ++j) {
    double scale = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double c = to_double(cone.normals[j][i]) / std::sqrt(to_double(cone.metric[i]));
      normals[j * dim + i] = c;
      scale = std::max(scale, std::abs(c));
    }
    for (std::size_t i = 0; i < dim; ++i) normals[j * dim + i] /= scale;
  }

  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    const std::uint64_t n = std::min<std::uint64_t>(kChunkSize, samples - c * kChunkSize);
    std::vector<double> u(dim);
    std::uint64_t h = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
      for (auto& x : u) x = rng.normal();
      bool in = true;
      for (std::size_t j = 0; j < count && in; ++j) {
        double acc = 0.0;
        const double* a = normals.data() + j * dim;
        for (std::size_t i = 0; i < dim; ++i) acc += a[i] * u[i];
        in = acc <= 0.0;
      }
      h += in ? 1 : 0;
    }
    hits[c] = h;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double mean = static_cast<double>(total) / static_cast<double>(samples);
  return {mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(samples)), samples, seed, false};
}

AngleEstimate solid_angle(const Polytope& p, const IndexSet& face, std::uint64_t samples, std::uint64_t seed) {
  const TangentCone cone = tangent_cone(p, face);
  if (cone.normals.empty()) return exact_estimate(1.0, samples, seed);
  if (cone.normals.size() == 1) return exact_estimate(0.5, samples, seed);
  return sample_cone_fraction(cone, samples, seed);
}

double solid_angle_exact_lowdim(const Polytope& p, const IndexSet& face) {
  if (p.dim() > 3) throw Error(ErrorCode::UnsupportedDimension, "closed-form angles need intrinsic dim <= 3");
  const Face& g = require_face(p, face);
  const int m = p.dim();
  if (g.dim == m) return 1.0;
  if (g.dim == m - 1) return 0.5;
  const auto& lattice = p.lattice();
  const auto& w = p.embedding().weights;
  const auto containing = members(p.facets_containing(face));

  if (m == 2) {
    // Corner of a polygon: angle between the two edges.
    const std::size_t v = members(face).front();
    std::vector<Vector> legs;
    for (auto f : containing) {
      for (auto u : members(p.facets()[f].vertex_set)) {
        if (u != v) legs.push_back(p.vertices()[u] - p.vertices()[v]);
      }
    }
    const double angle = angle_between(metric_inner(legs[0], legs[1], w), metric_inner(legs[0], legs[0], w),
                                       metric_inner(legs[1], legs[1], w));
    return angle / (2.0 * std::numbers::pi);
  }

  // m == 3
  if (g.dim == 1) return dihedral(p, containing[0], containing[1]) / (2.0 * std::numbers::pi);

  double excess = 0.0;
  int edges = 0;
  for (auto e : lattice.faces_of_dim(1)) {
    const IndexSet& edge = lattice.faces()[e].vertex_set;
    if (!face.is_subset_of(edge)) continue;
    const auto pair = members(p.facets_containing(edge));
    excess += dihedral(p, pair[0], pair[1]);
    ++edges;
  }
  excess -= (edges - 2) * std::numbers::pi;
  return excess / (4.0 * std::numbers::pi);
}

AngleEstimate facet_angle(const Polytope& p, std::size_t facet_index, const IndexSet& face, std::uint64_t samples,
                          std::uint64_t seed) {
  if (facet_index >= p.facets().size()) {
    throw Error(ErrorCode::IndexOutOfRange, "facet " + std::to_string(facet_index));
  }
  if (!face.is_subset_of(p.facets()[facet_index].vertex_set)) return exact_estimate(0.0, samples, seed);
  const Polytope f = facet_as_polytope(p, facet_index);
  return solid_angle(f, local_face(p, facet_index, face), samples, seed);
}

AngleSumReport angle_sum(const Polytope& p, int k, std::uint64_t samples, std::uint64_t seed) {
  if (k < 0 || k > p.dim()) throw Error(ErrorCode::OutOfRange, "angle sum needs 0 <= k <= dim");
  AngleSumReport report;
  report.k = k;
  double var = 0.0;
  for (auto i : p.lattice().faces_of_dim(k)) {
    const IndexSet& g = p.lattice().faces()[i].vertex_set;
    auto est = solid_angle(p, g, samples, derive_seed(seed, i));
    report.sum += est.mean;
    var += est.std_error * est.std_error;
    report.per_face.emplace_back(g, est);
  }
  report.std_error = std::sqrt(var);
  return report;
}

std::vector<Polytope> facet_polytopes(const Polytope& p) {
  std::vector<Polytope> out;
  out.reserve(p.facets().size());
  for (std::size_t f = 0; f < p.facets().size(); ++f) out.push_back(facet_as_polytope(p, f));
  return out;
}

CurvatureReport curvature_check(const Polytope& p, std::span<const Polytope> facets, const IndexSet& face,
                                std::uint64_t samples, std::uint64_t seed, double sigma) {
  const Face& g = require_face(p, face);
  if (g.dim > p.dim() - 2) {
    throw Error(ErrorCode::OutOfRange, "curvature check needs dim G <= dim P - 2");
  }
  CurvatureReport r;
  r.face = face;
  r.face_dim = g.dim;
  const auto containing = members(p.facets_containing(face));
  if (g.dim == p.dim() - 2) {
    // Both facets through a ridge see it as one of their own facets: 1/2 + 1/2.
    for (auto f : containing) r.per_facet.emplace_back(f, exact_estimate(0.5, samples, seed));
    r.sum = 1.0;
    r.exact = true;
  } else {
    double var = 0.0;
    for (auto f : containing) {
      auto est = solid_angle(facets[f], local_face(p, f, face), samples, derive_seed(seed, f));
      r.sum += est.mean;
      var += est.std_error * est.std_error;
      r.per_facet.emplace_back(f, est);
    }
    r.std_error = std::sqrt(var);
  }
  r.within_bound = r.sum <= 1.0 + sigma * r.std_error;
  r.flagged_equality = std::abs(r.sum - 1.0) <= sigma * r.std_error;
  return r;
}

CurvatureReport curvature_check(const Polytope& p, const IndexSet& face, std::uint64_t samples, std::uint64_t seed,
                                double sigma) {
  const Face& g = require_face(p, face);
  if (g.dim > p.dim() - 2) throw Error(ErrorCode::OutOfRange, "curvature check needs dim G <= dim P - 2");
  // Only the facets through G are needed.
  std::vector<Polytope> facets(p.facets().size());
  for (auto f : members(p.facets_containing(face))) facets[f] = facet_as_polytope(p, f);
  return curvature_check(p, facets, face, samples, seed, sigma);
}

PropositionReport prop_angle_sum_check(const Polytope& q, const AngleSumReport& sum, double sigma) {
  if (q.dim() < 1 || sum.k < 0 || sum.k > q.dim() - 1) {
    throw Error(ErrorCode::OutOfRange, "proposition check needs 0 <= k <= dim Q - 1");
  }
  PropositionReport r;
  r.k = sum.k;
  r.d = q.dim() + 1;
  r.sum = sum.sum;
  r.std_error = sum.std_error;
  r.bound = rho(r.d, r.d - r.k - 1);
  const double bound = to_double(r.bound);
  r.pass = r.sum >= bound - sigma * r.std_error;
  r.equality = std::abs(r.sum - bound) <= sigma * r.std_error;
  return r;
}

PropositionReport prop_angle_sum_check(const Polytope& q, int k, std::uint64_t samples, std::uint64_t seed,
                                       double sigma) {
  if (q.dim() < 1 || k < 0 || k > q.dim() - 1) {
    throw Error(ErrorCode::OutOfRange, "proposition check needs 0 <= k <= dim Q - 1");
  }
  return prop_angle_sum_check(q, angle_sum(q, k, samples, seed), sigma);
}

PerlesReport perles_check(const Polytope& p, int k, std::span<const ShadowPolytope> shadows,
                          const AngleSumReport& sum, double sigma) {
  if (k < 0 || k > p.dim() - 1) throw Error(ErrorCode::OutOfRange, "Perles check needs 0 <= k <= dim - 1");
  if (shadows.empty()) throw Error(ErrorCode::OutOfRange, "Perles check needs at least one direction");
  PerlesReport r;
  r.k = k;
  r.angle_sum = sum.sum;
  r.std_error = sum.std_error;
  r.f_k = f_vector(p)[k];
  for (const auto& sh : shadows) r.shadow_counts.push_back(sh.proper_face_count(k));
  r.max_shadow = *std::max_element(r.shadow_counts.begin(), r.shadow_counts.end());
  r.bound = 0.5 * static_cast<double>(r.f_k - r.max_shadow);
  r.verdict = r.angle_sum >= r.bound - sigma * r.std_error ? Verdict::Pass : Verdict::Warn;
  r.equality = std::abs(r.angle_sum - r.bound) <= sigma * r.std_error;
  return r;
}

PerlesReport perles_check(const Polytope& p, int k, std::span<const Direction> directions, std::uint64_t samples,
                          std::uint64_t seed, double sigma) {
  if (k < 0 || k > p.dim() - 1) throw Error(ErrorCode::OutOfRange, "Perles check needs 0 <= k <= dim - 1");
  std::vector<ShadowPolytope> shadows;
  for (const auto& d : directions) shadows.push_back(shadow(p, d));
  return perles_check(p, k, shadows, angle_sum(p, k, samples, seed), sigma);
}

}  // namespace polyface
