#include "polyface/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyface {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::ZeroDotProduct: return "ZeroDotProduct";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_same_dim(std::span<const Vector> rows) {
  for (const auto& row : rows) {
    if (row.dim() != rows.front().dim()) {
      throw Error(ErrorCode::MixedDimensions, "rows of dimension " + std::to_string(rows.front().dim()) +
                                                  " and " + std::to_string(row.dim()));
    }
  }
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + text + "'");
  }
  Integer p(num[0] == '+' ? num.substr(1) : num);
  Integer q(den[0] == '+' ? den.substr(1) : den);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Scalar(p, q);
}

std::string format_scalar(const Scalar& value) {
  const auto& num = boost::multiprecision::numerator(value);
  const auto& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Scalar& value) { return value.convert_to<double>(); }

Vector Vector::unit(std::size_t dim, std::size_t axis) {
  Vector v(dim);
  v[axis] = 1;
  return v;
}

Vector Vector::from_ints(std::initializer_list<long long> coords) {
  Vector v(coords.size());
  std::size_t i = 0;
  for (long long c : coords) v[i++] = c;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; });
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.dim() != dim()) throw Error(ErrorCode::MixedDimensions, "vector addition");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += other[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.dim() != dim()) throw Error(ErrorCode::MixedDimensions, "vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= other[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::MixedDimensions, "dot product");
  Scalar sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

Vector primitive(const Vector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "primitive of the zero vector");
  Integer lcm_den = 1;
  for (const auto& c : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(c)));
  std::vector<Integer> ints;
  ints.reserve(v.dim());
  Integer g = 0;
  for (const auto& c : v) {
    Integer n = Integer(boost::multiprecision::numerator(c)) * (lcm_den / Integer(boost::multiprecision::denominator(c)));
    g = boost::multiprecision::gcd(g, n);
    ints.push_back(std::move(n));
  }
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Scalar(ints[i] / g);
  return out;
}

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.dim());
  for (const auto& c : v) out.push_back(to_double(c));
  return out;
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << format_scalar(v[i]);
  os << ')';
  return os.str();
}

int Hyperplane::side(const Vector& x) const {
  const Scalar e = evaluate(x);
  return e < 0 ? -1 : (e > 0 ? 1 : 0);
}

bool RowEchelon::try_add(Vector row) {
  if (row.dim() != cols_) throw Error(ErrorCode::MixedDimensions, "row echelon insert");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = row[pivots_[r]];
    if (f != 0) row -= rows_[r] * f;
  }
  std::size_t pivot = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c] != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot == cols_) return false;
  row *= Scalar(1) / row[pivot];
  for (auto& existing : rows_) {
    const Scalar f = existing[pivot];
    if (f != 0) existing -= row * f;
  }
  // Keep rows ordered by pivot so the layout is canonical.
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + offset, std::move(row));
  return true;
}

std::vector<Vector> RowEchelon::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(std::span<const Vector> rows) {
  if (rows.empty()) return 0;
  require_same_dim(rows);
  RowEchelon ech(rows.front().dim());
  for (const auto& row : rows) {
    ech.try_add(row);
    if (ech.rank() == ech.cols()) break;
  }
  return ech.rank();
}

int affine_dim(std::span<const Vector> points) {
  if (points.empty()) return -1;
  require_same_dim(points);
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs));
}

std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& row : rows) ech.try_add(row);
  return ech.nullspace();
}

std::optional<Vector> solve_unique(std::span<const Vector> rows, const Vector& rhs) {
  const std::size_t n = rows.size();
  if (rhs.dim() != n) throw Error(ErrorCode::MixedDimensions, "right-hand side length");
  // Gaussian elimination on the augmented matrix.
  std::vector<Vector> aug;
  aug.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].dim() != n) throw Error(ErrorCode::MixedDimensions, "system is not square");
    std::vector<Scalar> c(rows[r].begin(), rows[r].end());
    c.push_back(rhs[r]);
    aug.emplace_back(std::move(c));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    aug[col] *= Scalar(1) / aug[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar f = aug[r][col];
      if (f != 0) aug[r] -= aug[col] * f;
    }
  }
  Vector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
  return x;
}

std::vector<Vector> gram_schmidt(std::span<const Vector> vectors) {
  std::vector<Vector> basis;
  std::vector<Scalar> norms;
  for (const auto& v : vectors) {
    Vector w = v;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Scalar c = dot(v, basis[j]);
      if (c != 0) w -= basis[j] * (c / norms[j]);
    }
    if (w.is_zero()) continue;
    norms.push_back(dot(w, w));
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Vector> orthogonal_complement_basis(const Vector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "complement of the zero vector");
  std::vector<Vector> seeds{v};
  for (std::size_t i = 0; i < v.dim(); ++i) seeds.push_back(Vector::unit(v.dim(), i));
  auto basis = gram_schmidt(seeds);
  std::vector<Vector> out;
  for (std::size_t i = 1; i < basis.size(); ++i) out.push_back(primitive(basis[i]));
  return out;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace polyface
