#pragma once

// Orthogonal projections of a polytope Q along a direction v, the induced
// split of the boundary into upper and lower facet complexes, and the
// vertices of the common refinement of the two projected complexes.
//
// All coordinates are Q's intrinsic coordinates. Combinatorics of the shadow
// and the upper/lower split are affine invariants, so the intrinsic standard
// inner product is used for the projection.

#include <cstdint>
#include <optional>
#include <vector>

#include "polyface/polytope.hpp"

namespace polyface {

struct Direction {
  Vector v;
  bool verified = false;
};

/// Normals of every hyperplane spanned by dim Q affinely independent vertices
/// of Q. A direction is in general position iff it is orthogonal to none.
class GeneralPositionOracle {
 public:
  explicit GeneralPositionOracle(const Polytope& q);

  bool is_general(const Vector& v) const;
  const std::vector<Vector>& normals() const noexcept { return normals_; }

 private:
  std::size_t dim_;
  std::vector<Vector> normals_;
};

inline constexpr std::int64_t kDirectionRange = 10'000;

Direction verify_direction(const Polytope& q, Vector v);
Direction verify_direction(const GeneralPositionOracle& oracle, Vector v);

/// Integer coordinates uniform in [-10^4, 10^4], resampled until verified.
Direction sample_direction(const Polytope& q, std::uint64_t seed, int max_retries = 64);
Direction sample_direction(const GeneralPositionOracle& oracle, std::size_t dim, std::uint64_t seed,
                           int max_retries = 64);
/// `count` directions, the i-th drawn from sub-stream i of `seed`.
std::vector<Direction> sample_directions(const Polytope& q, std::size_t count, std::uint64_t seed,
                                         int max_retries = 64);

struct ShadowPolytope {
  Polytope poly;
  /// Rational basis of the complement of v; shadow coordinates are dot products with it.
  std::vector<Vector> basis;
  /// Projection of every vertex of Q, in shadow coordinates.
  std::vector<Vector> projected;
  /// Shadow vertex index for each vertex of Q that projects to a shadow vertex.
  std::vector<std::optional<std::size_t>> vertex_map;

  /// Number of proper k-faces of the shadow (0 for k = dim of the shadow).
  long long proper_face_count(int k) const;
};

Vector project(const std::vector<Vector>& basis, const Vector& x);

ShadowPolytope shadow(const Polytope& q, const Direction& v);

struct ShadowComplexes {
  IndexSet upper;  // facets with v . normal > 0
  IndexSet lower;  // facets with v . normal < 0
  /// Lattice indices of the nonempty faces lying in both generated subcomplexes.
  std::vector<std::size_t> shadow_boundary;
  /// Projected boundary faces are exactly the proper faces of the shadow,
  /// dimension by dimension.
  bool boundary_matches_shadow = false;
};

ShadowComplexes upper_lower(const Polytope& q, const Direction& v);
ShadowComplexes upper_lower(const Polytope& q, const Direction& v, const ShadowPolytope& sh);

struct DiagramVertex {
  Vector point;  // shadow coordinates
  IndexSet x_plus;
  IndexSet x_minus;
  int l_plus = 0;
  int l_minus = 0;
  bool interior = false;
};

/// Points where a projected face of the upper complex meets a projected face
/// of the lower complex of complementary dimension (l_plus + l_minus =
/// dim Q - 1) in exactly one point. Points reached by several pairs are
/// reported once. Requires dim Q >= 2.
std::vector<DiagramVertex> diagram_vertices(const Polytope& q, const Direction& v);
std::vector<DiagramVertex> diagram_vertices(const Polytope& q, const Direction& v, const ShadowPolytope& sh,
                                            const ShadowComplexes& cx);

/// True iff the refinement has at least one interior vertex.
bool diagram_lemma_check(const Polytope& q, const Direction& v);

struct QuotientCountRow {
  int k = 0;
  long long faces_through_plus = 0;   // k-faces of Q containing X+
  Integer needed_plus;                // C(l_minus + 1, d - k - 1)
  long long faces_through_minus = 0;  // k-faces of Q containing X-
  Integer needed_minus;               // C(l_plus + 1, d - k - 1)
  bool ok = false;
};

struct QuotientWitness {
  int dim_quotient_plus = 0;
  int dim_quotient_minus = 0;
  bool dims_ok = false;
  std::vector<QuotientCountRow> rows;
  bool ok = false;
};

/// Checks dim Q/X+ = l_minus, dim Q/X- = l_plus and the face-count lower
/// bounds on both quotients. Throws NotInterior for boundary vertices.
QuotientWitness quotient_dim_witness(const Polytope& q, const DiagramVertex& dv);

struct GapReport {
  int k = 0;
  int d = 0;  // dim Q + 1
  long long f_k = 0;
  long long shadow_f_k = 0;  // proper k-faces of the shadow
  Scalar bound;              // 2 rho(d, d-k-1)
  bool pass = false;
};

/// f_k(Q) - f_k(shadow) >= 2 rho(dim Q + 1, dim Q - k), exact.
GapReport gap_check(const Polytope& q, const Direction& v, int k);
GapReport gap_check(const Polytope& q, const ShadowPolytope& sh, int k);

struct RefinementCell {
  std::size_t upper_facet = 0;
  std::size_t lower_facet = 0;
  std::vector<Vector> vertices;  // shadow coordinates
};

/// Full-dimensional cells of the common refinement, for dim Q in {2, 3}.
std::vector<RefinementCell> refinement_cells(const Polytope& q, const Direction& v);

}  // namespace polyface
