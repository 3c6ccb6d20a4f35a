#pragma once

// Solid angles phi(P, G) as the spherical measure of the tangent cone of P at
// G. Sampling is the only floating-point code in the library.
//
// Reproducibility: a run of `samples` draws is split into chunks of
// kChunkSize; chunk c uses Rng(derive_seed(seed, c)) (mt19937_64 plus
// Marsaglia-polar normals, see rng.hpp). Hit counts are integers, so the
// result does not depend on how chunks are scheduled across threads.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polyface/polytope.hpp"
#include "polyface/projection.hpp"

namespace polyface {

inline constexpr std::uint64_t kDefaultSamples = 1'000'000;
inline constexpr double kDefaultSigma = 4.0;
inline constexpr std::uint64_t kChunkSize = 1u << 16;

struct TangentCone {
  Vector apex;                        // centroid of G, intrinsic coordinates
  std::vector<Vector> normals;        // outward normals of the facets containing G
  std::vector<std::size_t> facet_indices;
  std::vector<Scalar> metric;         // diagonal metric of the intrinsic coordinates
};

struct AngleEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// True when the value is known in closed form (empty cone = 1,
  /// half-space = 1/2, face not contained in facet = 0); std_error is 0.
  bool exact = false;
};

TangentCone tangent_cone(const Polytope& p, const IndexSet& face);

/// Monte Carlo fraction of isotropic directions u with normal . u <= 0 for all
/// cone normals. Always samples, even for cones with 0 or 1 normals.
AngleEstimate sample_cone_fraction(const TangentCone& cone, std::uint64_t samples, std::uint64_t seed);

/// phi(P, G). Cones with no normals (G = P) and one normal (G a facet) are
/// returned exactly; everything else is sampled.
AngleEstimate solid_angle(const Polytope& p, const IndexSet& face, std::uint64_t samples = kDefaultSamples,
                          std::uint64_t seed = 0);

/// Closed-form angle for intrinsic dimension <= 3: endpoints of segments,
/// polygon corners, polyhedral edges (dihedral) and vertices (sum of the
/// dihedral angles minus (deg - 2) pi, over 4 pi). Throws UnsupportedDimension.
double solid_angle_exact_lowdim(const Polytope& p, const IndexSet& face);

/// phi(F, G) measured inside the facet F; exactly 0 when G is not in F.
AngleEstimate facet_angle(const Polytope& p, std::size_t facet_index, const IndexSet& face,
                          std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0);

struct AngleSumReport {
  int k = 0;
  double sum = 0.0;
  double std_error = 0.0;
  std::vector<std::pair<IndexSet, AngleEstimate>> per_face;
};

/// phi_k(P). Face i of dimension k (in lattice order) uses seed derive_seed(seed, i).
AngleSumReport angle_sum(const Polytope& p, int k, std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0);

struct CurvatureReport {
  IndexSet face;
  int face_dim = 0;
  double sum = 0.0;
  double std_error = 0.0;
  bool exact = false;
  std::vector<std::pair<std::size_t, AngleEstimate>> per_facet;
  bool within_bound = false;     // sum <= 1 + sigma * std_error
  bool flagged_equality = false; // |sum - 1| <= sigma * std_error
};

/// Sum of phi(F, G) over facets F containing G, for 0 <= dim G <= dim P - 2.
/// dim G = dim P - 2 returns exactly 1.
CurvatureReport curvature_check(const Polytope& p, const IndexSet& face, std::uint64_t samples = kDefaultSamples,
                                std::uint64_t seed = 0, double sigma = kDefaultSigma);

/// Facet polytopes of P, for callers running many curvature checks.
std::vector<Polytope> facet_polytopes(const Polytope& p);
CurvatureReport curvature_check(const Polytope& p, std::span<const Polytope> facets, const IndexSet& face,
                                std::uint64_t samples, std::uint64_t seed, double sigma = kDefaultSigma);

struct PropositionReport {
  int k = 0;
  int d = 0;  // dim Q + 1
  double sum = 0.0;
  double std_error = 0.0;
  Scalar bound;  // rho(d, d - k - 1)
  bool pass = false;
  bool equality = false;  // |sum - bound| <= sigma * std_error
};

/// phi_k(Q) >= rho(dim Q + 1, dim Q - k) for 0 <= k <= dim Q - 1.
PropositionReport prop_angle_sum_check(const Polytope& q, int k, std::uint64_t samples = kDefaultSamples,
                                       std::uint64_t seed = 0, double sigma = kDefaultSigma);
/// Same check on a precomputed angle sum of Q.
PropositionReport prop_angle_sum_check(const Polytope& q, const AngleSumReport& sum, double sigma = kDefaultSigma);

enum class Verdict { Pass, Warn, Fail };
std::string_view to_string(Verdict v);

struct PerlesReport {
  int k = 0;
  double angle_sum = 0.0;
  double std_error = 0.0;
  long long f_k = 0;
  std::vector<long long> shadow_counts;  // proper k-faces of each shadow
  long long max_shadow = 0;
  double bound = 0.0;  // (f_k - max_shadow) / 2
  Verdict verdict = Verdict::Warn;
  bool equality = false;
};

/// phi_k(P) >= (f_k(P) - max_v f_k(pi_v P)) / 2 with the max over the given
/// directions. Since the sampled max can only undershoot the true max, a
/// failure is reported as Warn, never Fail.
PerlesReport perles_check(const Polytope& p, int k, std::span<const Direction> directions,
                          std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0,
                          double sigma = kDefaultSigma);
PerlesReport perles_check(const Polytope& p, int k, std::span<const ShadowPolytope> shadows,
                          const AngleSumReport& sum, double sigma = kDefaultSigma);

}  // namespace polyface
