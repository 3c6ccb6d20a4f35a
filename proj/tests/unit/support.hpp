#pragma once

#include <optional>
#include <vector>

#include "polyface/error.hpp"
#include "polyface/exact.hpp"
#include "polyface/rng.hpp"

namespace support {

/// Code of the polyface::Error thrown by fn, or nullopt if nothing was thrown.
template <typename Fn>
std::optional<polyface::ErrorCode> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const polyface::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Small random integer vector, a test-data generator for property checks.
inline polyface::Vector random_vector(polyface::Rng& rng, std::size_t dim, long long range = 5) {
  polyface::Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.uniform_int(-range, range);
  return v;
}

inline polyface::Vector ints(std::initializer_list<long long> xs) { return polyface::Vector::from_ints(xs); }

}  // namespace support
