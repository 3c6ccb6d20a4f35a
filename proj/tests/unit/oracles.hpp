#pragma once

// Test-side oracles. None of these call into the code they check: they use
// cofactor determinants, Pascal's triangle and plain 2D geometry instead of
// the library's row reduction, lattice builder and projection code.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <vector>

#include "polyface/exact.hpp"

namespace oracle {

using polyface::Scalar;
using polyface::Vector;

/// Determinant by Laplace expansion along the first row.
inline Scalar det(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    const Scalar term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

/// Rank as the size of the largest nonzero minor. Exponential; fine for the
/// tiny matrices the tests feed it.
inline std::size_t rank_by_minors(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].dim();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<Scalar>> m;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          std::vector<Scalar> row;
          for (std::size_t j = 0; j < c; ++j)
            if (csel[j]) row.push_back(rows[i][j]);
          m.push_back(std::move(row));
        }
        if (det(m) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

inline int affine_dim_by_minors(const std::vector<Vector>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return static_cast<int>(rank_by_minors(diffs));
}

/// Generalized cross product of d-1 vectors in R^d.
inline Vector cofactor_normal(const std::vector<Vector>& rows) {
  const std::size_t d = rows.size() + 1;
  Vector n(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<Scalar>> m;
    for (const auto& r : rows) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) row.push_back(r[j]);
      m.push_back(std::move(row));
    }
    const Scalar c = det(m);
    n[i] = (i % 2 == 0) ? c : Scalar(-c);
  }
  return n;
}

/// Facets of a full-dimensional point set as sorted index sets: every
/// d-subset whose hyperplane supports all points.
inline std::set<std::vector<std::size_t>> support_facets(const std::vector<Vector>& pts) {
  const std::size_t d = pts[0].dim();
  const std::size_t n = pts.size();
  std::set<std::vector<std::size_t>> out;
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(d), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (sel[i]) idx.push_back(i);
    std::vector<Vector> rows;
    for (std::size_t i = 1; i < idx.size(); ++i) rows.push_back(pts[idx[i]] - pts[idx[0]]);
    const Vector normal = cofactor_normal(rows);
    if (normal.is_zero()) continue;
    const Scalar off = polyface::dot(normal, pts[idx[0]]);
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar s = polyface::dot(normal, pts[i]) - off;
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) on.push_back(i);
    }
    if (pos && neg) continue;
    out.insert(on);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

/// Every intersection of facets, plus the empty face and the whole set.
inline std::set<std::vector<std::size_t>> closure_faces(const std::set<std::vector<std::size_t>>& facets,
                                                         std::size_t n) {
  std::set<std::vector<std::size_t>> faces(facets.begin(), facets.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> cur(faces.begin(), faces.end());
    for (const auto& a : cur)
      for (const auto& b : facets) {
        std::vector<std::size_t> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (faces.insert(c).second) grew = true;
      }
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  faces.insert(all);
  faces.insert({});
  return faces;
}

/// Pascal's triangle, exact for the small arguments used in tests.
inline long long choose(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  static std::vector<std::vector<long long>> table;
  while (static_cast<long long>(table.size()) <= n) {
    const std::size_t r = table.size();
    std::vector<long long> row(r + 1, 1);
    for (std::size_t j = 1; j < r; ++j) row[j] = table[r - 1][j - 1] + table[r - 1][j];
    table.push_back(std::move(row));
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// rho(d,k) as numerator over 2.
inline Scalar rho(int d, int k) { return Scalar(choose((d + 1) / 2, k) + choose(d / 2, k), 2); }

/// Facets of C(n,d) by Gale's evenness condition, over parameters 0..n-1.
inline std::vector<std::vector<int>> gale_facets(int n, int d) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask >> i & 1) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if (mask >> j & 1) continue;
        int between = 0;
        for (int t = i + 1; t < j; ++t) between += (mask >> t) & 1;
        if (between % 2) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) f.push_back(i);
    out.push_back(f);
  }
  return out;
}

/// Solid angle (steradians) of the triangular cone spanned by a, b, c.
inline double van_oosterom_strackee(std::array<double, 3> a, std::array<double, 3> b, std::array<double, 3> c) {
  auto dotp = [](const auto& x, const auto& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; };
  auto norm = [&](const auto& x) { return std::sqrt(dotp(x, x)); };
  const std::array<double, 3> bxc{b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2], b[0] * c[1] - b[1] * c[0]};
  const double num = std::abs(dotp(a, bxc));
  const double la = norm(a), lb = norm(b), lc = norm(c);
  const double den = la * lb * lc + dotp(a, b) * lc + dotp(a, c) * lb + dotp(b, c) * la;
  double omega = 2.0 * std::atan2(num, den);
  if (omega < 0) omega += 2.0 * std::numbers::pi;
  return omega;
}

/// 2D convex hull (Andrew's monotone chain), strict: collinear points dropped.
inline std::vector<Vector> hull2d(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vector& o, const Vector& a, const Vector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

/// Sign of the point against a counter-clockwise convex polygon: 1 strictly
/// inside, 0 on the boundary, -1 outside.
inline int polygon_side(const std::vector<Vector>& ccw, const Vector& p) {
  int result = 1;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Vector& a = ccw[i];
    const Vector& b = ccw[(i + 1) % ccw.size()];
    const Scalar c = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    if (c < 0) return -1;
    if (c == 0) result = 0;
  }
  return result;
}

/// Intersection point of two closed segments that cross in exactly one point.
inline std::optional<Vector> segments_meet(const Vector& p, const Vector& q, const Vector& r, const Vector& s) {
  const Scalar a0 = q[0] - p[0], a1 = q[1] - p[1];
  const Scalar b0 = s[0] - r[0], b1 = s[1] - r[1];
  const Scalar den = a0 * b1 - a1 * b0;
  if (den == 0) return std::nullopt;
  const Scalar c0 = r[0] - p[0], c1 = r[1] - p[1];
  const Scalar t = (c0 * b1 - c1 * b0) / den;
  const Scalar u = (c0 * a1 - c1 * a0) / den;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return Vector{p[0] + t * a0, p[1] + t * a1};
}

}  // namespace oracle
