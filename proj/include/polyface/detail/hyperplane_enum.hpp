#pragma once

// Depth-first enumeration of affinely independent point subsets spanning a
// hyperplane. Partial subsets that are already dependent are pruned, so only
// independent prefixes are extended.

#include <vector>

namespace polyface {

namespace detail {

template <typename Fn>
bool spanning_dfs(std::span<const Vector> points, std::size_t dim, std::size_t start,
                  std::vector<std::size_t>& chosen, const RowEchelon& ech, Fn& fn) {
  if (chosen.size() == dim) {
    const auto normals = ech.nullspace();
    return fn(static_cast<const std::vector<std::size_t>&>(chosen), normals.front());
  }
  const std::size_t needed = dim - chosen.size();
  for (std::size_t i = start; i + needed <= points.size(); ++i) {
    if (chosen.empty()) {
      chosen.push_back(i);
      if (!spanning_dfs(points, dim, i + 1, chosen, ech, fn)) return false;
      chosen.pop_back();
      continue;
    }
    RowEchelon next = ech;
    if (!next.try_add(points[i] - points[chosen.front()])) continue;
    chosen.push_back(i);
    const bool go_on = spanning_dfs(points, dim, i + 1, chosen, next, fn);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

template <typename Fn>
void for_each_spanning_hyperplane(std::span<const Vector> points, Fn&& fn) {
  if (points.empty()) return;
  const std::size_t dim = points.front().dim();
  if (dim == 0 || points.size() < dim) return;
  std::vector<std::size_t> chosen;
  chosen.reserve(dim);
  RowEchelon ech(dim);
  detail::spanning_dfs(points, dim, 0, chosen, ech, fn);
}

}  // namespace polyface
