#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polyface/polytope.hpp"

namespace polyface {

enum class Family { Simplex, Cube, Cross, Cyclic, Pyramid, Prism, RandomSphere };

std::string_view to_string(Family family);
/// Accepts the CLI names: simplex, cube, cross, cyclic, pyramid, prism, random-sphere.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Simplex;
  int dim = 1;
  /// Vertex count for cyclic and random-sphere; ignored elsewhere.
  std::optional<int> n;
  std::uint64_t seed = 0;
};

/// Family members:
///   simplex       regular simplex e_1..e_{d+1} in R^{d+1}
///   cube          {0,1}^d
///   cross         +-e_i in R^d
///   cyclic        moment curve (t, t^2, ..., t^d), t = 1..n
///   pyramid       pyramid over the (d-1)-cube
///   prism         prism over the (d-1)-simplex
///   random-sphere n seeded points near the unit sphere, hull vertices only
Polytope generate(const FamilySpec& spec);

Polytope simplex(int dim);
Polytope cube(int dim);
Polytope cross_polytope(int dim);
Polytope cyclic(int dim, int n);
Polytope random_sphere(int dim, int n, std::uint64_t seed);

/// Apex above the centroid, in the base's intrinsic coordinates.
Polytope pyramid(const Polytope& base);
/// Base x {0, 1}.
Polytope prism(const Polytope& base);

}  // namespace polyface
