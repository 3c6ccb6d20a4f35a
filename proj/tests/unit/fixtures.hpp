#pragma once

#include <array>
#include <vector>

#include "polyface/generators.hpp"
#include "polyface/polytope.hpp"

namespace fixtures {

using polyface::Polytope;
using polyface::Vector;

/// Regular hexagon: the permutations of (1, -1, 0), inside the plane x + y + z = 0.
inline Polytope hexagon() {
  std::vector<Vector> pts;
  for (auto p : {std::array{1, -1, 0}, std::array{1, 0, -1}, std::array{0, 1, -1}, std::array{-1, 1, 0},
                 std::array{-1, 0, 1}, std::array{0, -1, 1}})
    pts.push_back(Vector::from_ints({p[0], p[1], p[2]}));
  return polyface::hull_from_points(pts);
}

/// Regular tetrahedron on alternate corners of the cube [-1, 1]^3.
inline Polytope tetrahedron() {
  return polyface::hull_from_points(std::vector<Vector>{Vector::from_ints({1, 1, 1}), Vector::from_ints({1, -1, -1}),
                                                        Vector::from_ints({-1, 1, -1}),
                                                        Vector::from_ints({-1, -1, 1})});
}

inline Polytope square() { return polyface::cube(2); }
inline Polytope segment() { return polyface::cube(1); }
/// Equilateral: e1, e2, e3.
inline Polytope triangle() { return polyface::simplex(2); }

inline polyface::IndexSet face_of(const Polytope& p, std::initializer_list<std::size_t> vs) {
  polyface::IndexSet s(p.vertex_count());
  for (auto v : vs) s.set(v);
  return s;
}

}  // namespace fixtures
