#include "polyface/generators.hpp"

#include <algorithm>
#include <cmath>

#include "polyface/rng.hpp"

namespace polyface {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Simplex: return "simplex";
    case Family::Cube: return "cube";
    case Family::Cross: return "cross";
    case Family::Cyclic: return "cyclic";
    case Family::Pyramid: return "pyramid";
    case Family::Prism: return "prism";
    case Family::RandomSphere: return "random-sphere";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::Simplex, Family::Cube, Family::Cross, Family::Cyclic, Family::Pyramid, Family::Prism,
                 Family::RandomSphere}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::BadSpec, "unknown family '" + std::string(name) + "'");
}

namespace {

void require_dim(int dim) {
  if (dim < 1) throw Error(ErrorCode::BadSpec, "dimension must be >= 1, got " + std::to_string(dim));
  if (dim > kMaxDim) throw Error(ErrorCode::TooLarge, "dimension " + std::to_string(dim) + " exceeds 7");
}

Vector lifted(const Vector& x, const Scalar& last) {
  std::vector<Scalar> c(x.begin(), x.end());
  c.push_back(last);
  return Vector(std::move(c));
}

}  // namespace

Polytope simplex(int dim) {
  if (dim < 0 || dim > kMaxDim) throw Error(ErrorCode::BadSpec, "simplex dimension out of range");
  std::vector<Vector> pts;
  for (int i = 0; i <= dim; ++i) pts.push_back(Vector::unit(static_cast<std::size_t>(dim + 1), static_cast<std::size_t>(i)));
  return hull_from_points(pts);
}

Polytope cube(int dim) {
  require_dim(dim);
  if ((std::size_t{1} << dim) > kMaxPoints) {
    throw Error(ErrorCode::TooLarge, "the " + std::to_string(dim) + "-cube has more than 32 vertices");
  }
  std::vector<Vector> pts;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Vector p(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    pts.push_back(std::move(p));
  }
  return hull_from_points(pts);
}

Polytope cross_polytope(int dim) {
  require_dim(dim);
  std::vector<Vector> pts;
  for (int i = 0; i < dim; ++i) {
    Vector e = Vector::unit(static_cast<std::size_t>(dim), static_cast<std::size_t>(i));
    pts.push_back(e);
    pts.push_back(e * Scalar(-1));
  }
  return hull_from_points(pts);
}

Polytope cyclic(int dim, int n) {
  require_dim(dim);
  if (n <= dim) throw Error(ErrorCode::BadSpec, "cyclic polytope needs n > dim");
  if (static_cast<std::size_t>(n) > kMaxPoints) throw Error(ErrorCode::TooLarge, "too many points");
  std::vector<Vector> pts;
  for (int t = 1; t <= n; ++t) {
    Vector p(static_cast<std::size_t>(dim));
    Scalar power = 1;
    for (int j = 0; j < dim; ++j) {
      power *= t;
      p[static_cast<std::size_t>(j)] = power;
    }
    pts.push_back(std::move(p));
  }
  return hull_from_points(pts);
}

Polytope random_sphere(int dim, int n, std::uint64_t seed) {
  require_dim(dim);
  if (n <= dim) throw Error(ErrorCode::BadSpec, "random-sphere needs n > dim");
  if (static_cast<std::size_t>(n) > kMaxPoints) throw Error(ErrorCode::TooLarge, "too many points");
  constexpr long long kGrid = 1LL << 16;
  Rng rng(seed);
  std::vector<Vector> pts;
  while (pts.size() < static_cast<std::size_t>(n)) {
    std::vector<double> g(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (auto& x : g) {
      x = rng.normal();
      norm2 += x * x;
    }
    const double norm = std::sqrt(norm2);
    if (norm < 1e-9) continue;
    Vector p(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      p[static_cast<std::size_t>(j)] = Scalar(std::llround(g[static_cast<std::size_t>(j)] / norm * kGrid), kGrid);
    }
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return hull_from_points(pts);
}

Polytope pyramid(const Polytope& base) {
  std::vector<Vector> pts;
  Vector centroid(static_cast<std::size_t>(base.dim()));
  for (const auto& v : base.vertices()) {
    pts.push_back(lifted(v, 0));
    centroid += v;
  }
  centroid *= Scalar(1, static_cast<long long>(base.vertex_count()));
  pts.push_back(lifted(centroid, 1));
  return hull_from_points(pts);
}

Polytope prism(const Polytope& base) {
  std::vector<Vector> pts;
  for (const auto& v : base.vertices()) pts.push_back(lifted(v, 0));
  for (const auto& v : base.vertices()) pts.push_back(lifted(v, 1));
  return hull_from_points(pts);
}

Polytope generate(const FamilySpec& spec) {
  require_dim(spec.dim);
  switch (spec.family) {
    case Family::Simplex: return simplex(spec.dim);
    case Family::Cube: return cube(spec.dim);
    case Family::Cross: return cross_polytope(spec.dim);
    case Family::Cyclic: return cyclic(spec.dim, spec.n.value_or(spec.dim + 3));
    case Family::Pyramid:
      return pyramid(spec.dim == 1 ? simplex(0) : cube(spec.dim - 1));
    case Family::Prism:
      if (spec.dim == 1) return cube(1);
      return prism(simplex(spec.dim - 1));
    case Family::RandomSphere: return random_sphere(spec.dim, spec.n.value_or(2 * spec.dim + 2), spec.seed);
  }
  throw Error(ErrorCode::BadSpec, "unhandled family");
}

}  // namespace polyface
