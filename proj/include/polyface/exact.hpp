#pragma once

// Exact rational linear algebra. Every combinatorial decision in the library
// (side of hyperplane, rank, general position) goes through this header.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyface/error.hpp"

namespace polyface {

using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (optional sign). Throws ParseError.
Scalar parse_scalar(const std::string& text);
/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);
double to_double(const Scalar& value);

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Vector unit(std::size_t dim, std::size_t axis);
  static Vector from_ints(std::initializer_list<long long> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Scalar& factor);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Scalar& s) { return a *= s; }
  friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
  friend bool operator==(const Vector& a, const Vector& b) = default;
  friend bool operator<(const Vector& a, const Vector& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Scalar> coords_;
};

Scalar dot(const Vector& a, const Vector& b);
/// Positive multiple of v with coprime integer coordinates. v must be nonzero.
Vector primitive(const Vector& v);
std::vector<double> to_doubles(const Vector& v);
std::string format_vector(const Vector& v);

/// Oriented hyperplane {x : normal . x = offset}; the inside is normal . x <= offset.
struct Hyperplane {
  Vector normal;
  Scalar offset;

  Scalar evaluate(const Vector& x) const { return dot(normal, x) - offset; }
  /// -1 strictly inside, 0 on the hyperplane, +1 strictly outside.
  int side(const Vector& x) const;
};

/// Reduced row echelon form, built one row at a time. Used by the facet
/// enumerator to test affine independence incrementally.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Adds the row if it is independent of the current rows; returns whether it was.
  bool try_add(Vector row);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Basis of {x : row . x = 0 for every row}.
  std::vector<Vector> nullspace() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(std::span<const Vector> rows);
/// -1 for no points, 0 for one point, otherwise the rank of the differences.
int affine_dim(std::span<const Vector> points);
std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t cols);
/// Unique solution of the square system A x = b, or nullopt if A is singular.
std::optional<Vector> solve_unique(std::span<const Vector> rows, const Vector& rhs);

/// dim - 1 mutually orthogonal primitive integer vectors orthogonal to v.
std::vector<Vector> orthogonal_complement_basis(const Vector& v);

/// Unnormalized Gram-Schmidt; zero vectors (dependent inputs) are dropped.
std::vector<Vector> gram_schmidt(std::span<const Vector> vectors);

Integer binomial(long long n, long long k);

}  // namespace polyface
