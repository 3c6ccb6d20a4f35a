#include "polyface/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "polyface/bounds.hpp"
#include "polyface/rng.hpp"

namespace polyface {

namespace {

Vector canonical_normal(const Vector& n) {
  Vector p = primitive(n);
  for (const auto& c : p) {
    if (c == 0) continue;
    if (c < 0) p *= Scalar(-1);
    break;
  }
  return p;
}

bool inside(const Polytope& q, const Vector& y) {
  return std::all_of(q.facets().begin(), q.facets().end(),
                     [&](const FacetRecord& f) { return f.supporting.side(y) <= 0; });
}

bool strictly_inside(const Polytope& q, const Vector& y) {
  return std::all_of(q.facets().begin(), q.facets().end(),
                     [&](const FacetRecord& f) { return f.supporting.side(y) < 0; });
}

void require_verified(const Polytope& q, const Direction& v) {
  if (!v.verified) throw Error(ErrorCode::NotGeneralPosition, "direction " + format_vector(v.v) + " is not verified");
  if (v.v.dim() != static_cast<std::size_t>(q.dim())) {
    throw Error(ErrorCode::MixedDimensions, "direction dimension differs from the polytope's intrinsic dimension");
  }
}

}  // namespace

GeneralPositionOracle::GeneralPositionOracle(const Polytope& q) : dim_(static_cast<std::size_t>(q.dim())) {
  if (q.dim() < 1) return;
  std::set<Vector> seen;
  std::vector<IndexSet> planes;
  const auto& verts = q.vertices();
  const std::size_t n = verts.size();
  for_each_spanning_hyperplane(std::span<const Vector>(verts),
                               [&](const std::vector<std::size_t>& subset, const Vector& normal) {
    const IndexSet chosen = make_index_set(n, subset);
    for (const auto& p : planes) {
      if (chosen.is_subset_of(p)) return true;
    }
    IndexSet on(n);
    const Scalar ref = dot(normal, verts[subset.front()]);
    for (std::size_t i = 0; i < n; ++i) {
      if (dot(normal, verts[i]) == ref) on.set(i);
    }
    planes.push_back(std::move(on));
    seen.insert(canonical_normal(normal));
    return true;
  });
  normals_.assign(seen.begin(), seen.end());
}

bool GeneralPositionOracle::is_general(const Vector& v) const {
  if (v.dim() != dim_) throw Error(ErrorCode::MixedDimensions, "direction dimension");
  if (v.is_zero()) return false;
  return std::none_of(normals_.begin(), normals_.end(), [&](const Vector& n) { return dot(n, v) == 0; });
}

Direction verify_direction(const GeneralPositionOracle& oracle, Vector v) {
  const bool ok = oracle.is_general(v);
  return {std::move(v), ok};
}

Direction verify_direction(const Polytope& q, Vector v) { return verify_direction(GeneralPositionOracle(q), std::move(v)); }

Direction sample_direction(const GeneralPositionOracle& oracle, std::size_t dim, std::uint64_t seed, int max_retries) {
  if (dim < 1) throw Error(ErrorCode::DimensionTooLow, "directions need dim >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.uniform_int(-kDirectionRange, kDirectionRange);
    if (oracle.is_general(v)) return {std::move(v), true};
  }
  throw Error(ErrorCode::RetriesExhausted, "no general-position direction after " + std::to_string(max_retries) +
                                               " retries");
}

Direction sample_direction(const Polytope& q, std::uint64_t seed, int max_retries) {
  if (q.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "directions need dim >= 1");
  return sample_direction(GeneralPositionOracle(q), static_cast<std::size_t>(q.dim()), seed, max_retries);
}

std::vector<Direction> sample_directions(const Polytope& q, std::size_t count, std::uint64_t seed, int max_retries) {
  if (q.dim() < 1) throw Error(ErrorCode::DimensionTooLow, "directions need dim >= 1");
  const GeneralPositionOracle oracle(q);
  std::vector<Direction> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sample_direction(oracle, static_cast<std::size_t>(q.dim()), derive_seed(seed, i), max_retries));
  }
  return out;
}

Vector project(const std::vector<Vector>& basis, const Vector& x) {
  if (basis.empty()) return Vector(1);  // projecting a line gives a point; keep it 1-dimensional
  Vector y(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) y[j] = dot(basis[j], x);
  return y;
}

long long ShadowPolytope::proper_face_count(int k) const {
  if (k < 0 || k >= poly.dim()) return 0;
  return f_vector(poly)[k];
}

ShadowPolytope shadow(const Polytope& q, const Direction& v) {
  require_verified(q, v);
  ShadowPolytope sh{Polytope{}, orthogonal_complement_basis(v.v), {}, {}};
  for (const auto& x : q.vertices()) sh.projected.push_back(project(sh.basis, x));
  sh.poly = hull_from_points(sh.projected);
  sh.vertex_map.assign(q.vertex_count(), std::nullopt);
  for (std::size_t j = 0; j < sh.poly.source_index().size(); ++j) sh.vertex_map[sh.poly.source_index()[j]] = j;
  return sh;
}

ShadowComplexes upper_lower(const Polytope& q, const Direction& v, const ShadowPolytope& sh) {
  require_verified(q, v);
  const auto& facets = q.facets();
  ShadowComplexes cx{IndexSet(facets.size()), IndexSet(facets.size()), {}, false};
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Scalar s = dot(facets[f].supporting.normal, v.v);
    if (s == 0) throw Error(ErrorCode::ZeroDotProduct, "facet " + std::to_string(f) + " is parallel to the direction");
    (s > 0 ? cx.upper : cx.lower).set(f);
  }
  const auto& lattice = q.lattice();
  const auto& shadow_lattice = sh.poly.lattice();
  bool matches = true;
  std::vector<long long> per_dim(static_cast<std::size_t>(std::max(q.dim(), 1)), 0);
  for (std::size_t i = 0; i < lattice.faces().size(); ++i) {
    const Face& g = lattice.faces()[i];
    if (g.dim < 0 || g.dim == q.dim()) continue;
    const IndexSet containing = q.facets_containing(g.vertex_set);
    if (!containing.intersects(cx.upper) || !containing.intersects(cx.lower)) continue;
    cx.shadow_boundary.push_back(i);
    ++per_dim[static_cast<std::size_t>(g.dim)];
    IndexSet image(sh.poly.vertex_count());
    for (auto u : members(g.vertex_set)) {
      if (!sh.vertex_map[u]) {
        matches = false;
        break;
      }
      image.set(*sh.vertex_map[u]);
    }
    if (!matches) continue;
    const auto found = shadow_lattice.find(image);
    if (!found || shadow_lattice.faces()[*found].dim != g.dim) matches = false;
  }
  for (int k = 0; k < q.dim(); ++k) {
    if (per_dim[static_cast<std::size_t>(k)] != sh.proper_face_count(k)) matches = false;
  }
  cx.boundary_matches_shadow = matches;
  return cx;
}

ShadowComplexes upper_lower(const Polytope& q, const Direction& v) { return upper_lower(q, v, shadow(q, v)); }

namespace {

struct FaceFrame {
  IndexSet vertex_set;
  int dim = 0;
  Vector base;
  std::vector<Vector> dirs;       // intrinsic coordinates of Q
  std::vector<Vector> proj_dirs;  // shadow coordinates
  Vector proj_base;
  // Bounding box of the projected vertices, padded for rounding.
  std::vector<double> lo, hi;
  // Floating-point copies for the prefilter.
  std::vector<double> base_f, proj_base_f;
  std::vector<std::vector<double>> dirs_f, proj_dirs_f;
};

std::vector<double> doubles(const Vector& v) { return to_doubles(v); }

// Facet inequalities of Q with unit normals, for the prefilter.
struct FloatFacets {
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;

  explicit FloatFacets(const Polytope& q) {
    for (const auto& f : q.facets()) {
      auto a = to_doubles(f.supporting.normal);
      double norm = 0.0;
      for (double x : a) norm += x * x;
      norm = std::sqrt(norm);
      for (auto& x : a) x /= norm;
      normals.push_back(std::move(a));
      offsets.push_back(to_double(f.supporting.offset) / norm);
    }
  }

  /// False only when y is outside Q by a margin far above rounding error.
  bool maybe_inside(const std::vector<double>& y) const {
    double scale = 1.0;
    for (double x : y) scale = std::max(scale, std::abs(x));
    const double slack = 1e-6 * scale;
    for (std::size_t f = 0; f < normals.size(); ++f) {
      double s = -offsets[f];
      for (std::size_t i = 0; i < y.size(); ++i) s += normals[f][i] * y[i];
      if (s > slack) return false;
    }
    return true;
  }
};

enum class FloatSolve { Solved, Uncertain };

// Gaussian elimination with partial pivoting on an n x n system (row major).
// Reports Uncertain when the pivots indicate near-singularity.
FloatSolve solve_float(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  double max_pivot = 0.0, min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[best * n + c])) best = r;
    }
    if (best != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[best * n + k]);
      std::swap(b[c], b[best]);
    }
    const double piv = a[c * n + c];
    max_pivot = std::max(max_pivot, std::abs(piv));
    min_pivot = std::min(min_pivot, std::abs(piv));
    if (piv == 0.0) return FloatSolve::Uncertain;
    for (std::size_t r = c + 1; r < n; ++r) {
      const double factor = a[r * n + c] / piv;
      if (factor == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= factor * a[c * n + k];
      b[r] -= factor * b[c];
    }
  }
  if (min_pivot < 1e-8 * max_pivot) return FloatSolve::Uncertain;
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c * n + k] * b[k];
    b[c] = s / a[c * n + c];
  }
  return FloatSolve::Solved;
}

// True unless the floating-point solve shows the pair cannot meet in a point of Q.
bool pair_may_meet(const FaceFrame& xp, const FaceFrame& xm, std::size_t n, const FloatFacets& facets) {
  std::vector<double> a(n * n, 0.0), b(n);
  const std::size_t np = xp.proj_dirs_f.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < np; ++c) a[r * n + c] = xp.proj_dirs_f[c][r];
    for (std::size_t c = 0; c < xm.proj_dirs_f.size(); ++c) a[r * n + np + c] = -xm.proj_dirs_f[c][r];
    b[r] = xm.proj_base_f[r] - xp.proj_base_f[r];
  }
  if (solve_float(a, b, n) == FloatSolve::Uncertain) return true;
  std::vector<double> yp = xp.base_f;
  for (std::size_t c = 0; c < np; ++c) {
    for (std::size_t i = 0; i < yp.size(); ++i) yp[i] += xp.dirs_f[c][i] * b[c];
  }
  if (!facets.maybe_inside(yp)) return false;
  std::vector<double> ym = xm.base_f;
  for (std::size_t c = 0; c < xm.dirs_f.size(); ++c) {
    for (std::size_t i = 0; i < ym.size(); ++i) ym[i] += xm.dirs_f[c][i] * b[np + c];
  }
  return facets.maybe_inside(ym);
}

bool boxes_overlap(const FaceFrame& a, const FaceFrame& b) {
  for (std::size_t i = 0; i < a.lo.size(); ++i) {
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  }
  return true;
}

FaceFrame make_frame(const Polytope& q, const Face& g, const ShadowPolytope& sh) {
  const auto& basis = sh.basis;
  FaceFrame fr;
  fr.vertex_set = g.vertex_set;
  fr.dim = g.dim;
  const auto idx = members(g.vertex_set);
  fr.base = q.vertices()[idx.front()];
  RowEchelon ech(static_cast<std::size_t>(q.dim()));
  for (std::size_t j = 1; j < idx.size() && static_cast<int>(fr.dirs.size()) < g.dim; ++j) {
    Vector d = q.vertices()[idx[j]] - fr.base;
    if (ech.try_add(d)) fr.dirs.push_back(std::move(d));
  }
  fr.proj_base = project(basis, fr.base);
  for (const auto& d : fr.dirs) fr.proj_dirs.push_back(project(basis, d));
  fr.base_f = doubles(fr.base);
  fr.proj_base_f = doubles(fr.proj_base);
  for (const auto& d : fr.dirs) fr.dirs_f.push_back(doubles(d));
  for (const auto& d : fr.proj_dirs) fr.proj_dirs_f.push_back(doubles(d));
  const std::size_t n = basis.size();
  fr.lo.assign(n, std::numeric_limits<double>::infinity());
  fr.hi.assign(n, -std::numeric_limits<double>::infinity());
  for (auto u : idx) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = to_double(sh.projected[u][i]);
      fr.lo[i] = std::min(fr.lo[i], x);
      fr.hi[i] = std::max(fr.hi[i], x);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double pad = 1e-9 * (1.0 + std::max(std::abs(fr.lo[i]), std::abs(fr.hi[i])));
    fr.lo[i] -= pad;
    fr.hi[i] += pad;
  }
  return fr;
}

}  // namespace

std::vector<DiagramVertex> diagram_vertices(const Polytope& q, const Direction& /*v*/, const ShadowPolytope& sh,
                                            const ShadowComplexes& cx) {
  if (q.dim() < 2) throw Error(ErrorCode::DimensionTooLow, "diagram vertices need dim Q >= 2");
  const int m = q.dim();
  const auto& lattice = q.lattice();
  std::vector<std::vector<FaceFrame>> upper(static_cast<std::size_t>(m)), lower(static_cast<std::size_t>(m));
  for (const auto& g : lattice.faces()) {
    if (g.dim < 0 || g.dim == m) continue;
    const IndexSet containing = q.facets_containing(g.vertex_set);
    const bool in_upper = containing.intersects(cx.upper);
    const bool in_lower = containing.intersects(cx.lower);
    if (in_upper) upper[static_cast<std::size_t>(g.dim)].push_back(make_frame(q, g, sh));
    if (in_lower) lower[static_cast<std::size_t>(g.dim)].push_back(make_frame(q, g, sh));
  }

  const std::size_t n = static_cast<std::size_t>(m - 1);
  const FloatFacets float_facets(q);
  std::vector<DiagramVertex> out;
  std::map<Vector, std::size_t> seen;
  for (int lp = 0; lp <= m - 1; ++lp) {
    const int lm = m - 1 - lp;
    for (const auto& xp : upper[static_cast<std::size_t>(lp)]) {
      for (const auto& xm : lower[static_cast<std::size_t>(lm)]) {
        // Faces sharing a vertex w can only meet at the projection of w.
        const IndexSet common = xp.vertex_set & xm.vertex_set;
        if (common.any() && seen.count(sh.projected[common.find_first()])) continue;
        if (!boxes_overlap(xp, xm)) continue;
        if (!pair_may_meet(xp, xm, n, float_facets)) continue;
        // Solve proj(base+) + sum a_i proj(d+_i) = proj(base-) + sum b_j proj(d-_j).
        std::vector<Vector> rows(n, Vector(n));
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < xp.proj_dirs.size(); ++c) rows[r][c] = xp.proj_dirs[c][r];
          for (std::size_t c = 0; c < xm.proj_dirs.size(); ++c) rows[r][xp.proj_dirs.size() + c] = -xm.proj_dirs[c][r];
        }
        const auto sol = solve_unique(rows, xm.proj_base - xp.proj_base);
        if (!sol) continue;
        Vector yp = xp.base;
        for (std::size_t c = 0; c < xp.dirs.size(); ++c) yp += xp.dirs[c] * (*sol)[c];
        Vector point = project(sh.basis, yp);
        if (seen.count(point)) continue;
        if (!inside(q, yp)) continue;
        Vector ym = xm.base;
        for (std::size_t c = 0; c < xm.dirs.size(); ++c) ym += xm.dirs[c] * (*sol)[xp.dirs.size() + c];
        if (!inside(q, ym)) continue;
        seen.emplace(point, out.size());
        const bool interior = strictly_inside(sh.poly, point);
        out.push_back({std::move(point), xp.vertex_set, xm.vertex_set, lp, lm, interior});
      }
    }
  }
  return out;
}

std::vector<DiagramVertex> diagram_vertices(const Polytope& q, const Direction& v) {
  if (q.dim() < 2) throw Error(ErrorCode::DimensionTooLow, "diagram vertices need dim Q >= 2");
  const auto sh = shadow(q, v);
  return diagram_vertices(q, v, sh, upper_lower(q, v, sh));
}

bool diagram_lemma_check(const Polytope& q, const Direction& v) {
  const auto dvs = diagram_vertices(q, v);
  return std::any_of(dvs.begin(), dvs.end(), [](const DiagramVertex& d) { return d.interior; });
}

QuotientWitness quotient_dim_witness(const Polytope& q, const DiagramVertex& dv) {
  if (!dv.interior) throw Error(ErrorCode::NotInterior, "diagram vertex lies on the shadow boundary");
  const int m = q.dim();
  const int d = m + 1;
  const auto& lattice = q.lattice();
  const FaceLattice qp = quotient(lattice, dv.x_plus);
  const FaceLattice qm = quotient(lattice, dv.x_minus);
  QuotientWitness w;
  w.dim_quotient_plus = qp.dim();
  w.dim_quotient_minus = qm.dim();
  w.dims_ok = qp.dim() == dv.l_minus && qm.dim() == dv.l_plus;
  const FVector fp = f_vector(qp);
  const FVector fm = f_vector(qm);
  w.ok = w.dims_ok;
  for (int k = 0; k <= m - 1; ++k) {
    QuotientCountRow row;
    row.k = k;
    // k-faces of Q through X+ are the (k - l_plus - 1)-faces of Q/X+.
    row.faces_through_plus = k >= dv.l_plus ? fp[k - dv.l_plus - 1] : 0;
    row.faces_through_minus = k >= dv.l_minus ? fm[k - dv.l_minus - 1] : 0;
    row.needed_plus = binomial(dv.l_minus + 1, d - k - 1);
    row.needed_minus = binomial(dv.l_plus + 1, d - k - 1);
    row.ok = Integer(row.faces_through_plus) >= row.needed_plus && Integer(row.faces_through_minus) >= row.needed_minus;
    w.ok = w.ok && row.ok;
    w.rows.push_back(std::move(row));
  }
  return w;
}

GapReport gap_check(const Polytope& q, const ShadowPolytope& sh, int k) {
  const int m = q.dim();
  if (m < 2) throw Error(ErrorCode::DimensionTooLow, "gap check needs dim Q >= 2");
  if (k < 0 || k > m - 1) throw Error(ErrorCode::OutOfRange, "gap check needs 0 <= k <= dim Q - 1");
  GapReport r;
  r.k = k;
  r.d = m + 1;
  r.f_k = f_vector(q)[k];
  r.shadow_f_k = sh.proper_face_count(k);
  r.bound = 2 * rho(r.d, r.d - k - 1);
  r.pass = Scalar(r.f_k - r.shadow_f_k) >= r.bound;
  return r;
}

GapReport gap_check(const Polytope& q, const Direction& v, int k) { return gap_check(q, shadow(q, v), k); }

namespace {

std::optional<Vector> segment_intersection(const Vector& p, const Vector& q, const Vector& r, const Vector& s) {
  const Vector a = q - p;
  const Vector b = s - r;
  const std::vector<Vector> rows{Vector{a[0], -b[0]}, Vector{a[1], -b[1]}};
  const auto sol = solve_unique(rows, r - p);
  if (!sol) return std::nullopt;
  const Scalar& t = (*sol)[0];
  const Scalar& u = (*sol)[1];
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return p + a * t;
}

}  // namespace

std::vector<RefinementCell> refinement_cells(const Polytope& q, const Direction& v) {
  if (q.dim() < 2 || q.dim() > 3) throw Error(ErrorCode::UnsupportedDimension, "refinement cells need dim Q in {2, 3}");
  const auto sh = shadow(q, v);
  const auto cx = upper_lower(q, v, sh);
  const std::size_t sd = static_cast<std::size_t>(q.dim() - 1);

  auto projected_facet = [&](std::size_t f) {
    std::vector<Vector> pts;
    for (auto u : members(q.facets()[f].vertex_set)) pts.push_back(sh.projected[u]);
    return hull_from_points(pts);
  };

  std::vector<RefinementCell> cells;
  for (auto fu : members(cx.upper)) {
    const Polytope a = projected_facet(fu);
    for (auto fl : members(cx.lower)) {
      const Polytope b = projected_facet(fl);
      std::vector<Vector> cand;
      auto add = [&](const Vector& p) {
        if (std::find(cand.begin(), cand.end(), p) == cand.end()) cand.push_back(p);
      };
      for (const auto& p : a.vertices()) {
        if (inside(b, p)) add(p);
      }
      for (const auto& p : b.vertices()) {
        if (inside(a, p)) add(p);
      }
      if (sd == 2) {
        for (const auto& ea : a.facets()) {
          const auto ia = members(ea.vertex_set);
          for (const auto& eb : b.facets()) {
            const auto ib = members(eb.vertex_set);
            if (auto x = segment_intersection(a.vertices()[ia[0]], a.vertices()[ia[1]], b.vertices()[ib[0]],
                                              b.vertices()[ib[1]])) {
              add(*x);
            }
          }
        }
      }
      if (affine_dim(cand) != static_cast<int>(sd)) continue;
      const Polytope cell = hull_from_points(cand);
      cells.push_back({fu, fl, cell.vertices()});
    }
  }
  return cells;
}

}  // namespace polyface
