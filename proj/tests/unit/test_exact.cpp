#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polyface/exact.hpp"
#include "polyface/rng.hpp"
#include "support.hpp"

using namespace polyface;
using support::error_code;
using support::ints;

TEST_SUITE("exact") {
  TEST_CASE("scalar text round trip") {
    CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
    CHECK(format_scalar(parse_scalar("-7")) == "-7");
    CHECK(format_scalar(parse_scalar("+10/5")) == "2");
    CHECK(parse_scalar("1/-3") == Scalar(-1, 3));
    CHECK(error_code([] { parse_scalar("1/0"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_scalar("0.5"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_scalar(""); }) == ErrorCode::ParseError);
  }

  TEST_CASE("scalars stay in lowest terms") {
    const Scalar s = Scalar(4, 6) + Scalar(1, 3);
    CHECK(s == 1);
    // boost's (long, long) constructor mangles negative denominators, so go
    // through Integer like the parser does
    const Scalar t = parse_scalar("10/-4");
    CHECK(boost::multiprecision::denominator(t) == 2);
    CHECK(boost::multiprecision::numerator(t) == -5);
    CHECK(Scalar(polyface::Integer(10), polyface::Integer(-4)) == t);
  }

  TEST_CASE("rank examples") {
    const std::vector<Vector> id{ints({1, 0}), ints({0, 1})};
    CHECK(rank(id) == 2);
    const std::vector<Vector> prop{ints({1, 2}), ints({2, 4})};
    CHECK(rank(prop) == 1);
    const std::vector<Vector> m{ints({1, 2, 3}), ints({4, 5, 6}), ints({7, 8, 9})};
    CHECK(oracle::rank_by_minors(m) == 2);
    CHECK(rank(m) == 2);
    CHECK(rank(std::vector<Vector>{}) == 0);
  }

  TEST_CASE("rank rejects mixed dimensions") {
    const std::vector<Vector> rows{ints({1, 0}), ints({1, 0, 0})};
    CHECK(error_code([&] { rank(rows); }) == ErrorCode::MixedDimensions);
    CHECK(error_code([&] { affine_dim(rows); }) == ErrorCode::MixedDimensions);
  }

  TEST_CASE("affine_dim examples") {
    CHECK(affine_dim(std::vector<Vector>{}) == -1);
    CHECK(affine_dim(std::vector<Vector>{ints({3, 4})}) == 0);
    CHECK(affine_dim(std::vector<Vector>{ints({0, 0}), ints({1, 0}), ints({2, 0})}) == 1);
    CHECK(affine_dim(std::vector<Vector>{ints({0, 0}), ints({1, 0}), ints({0, 1})}) == 2);
  }

  TEST_CASE("orthogonal complement examples") {
    const auto axis = orthogonal_complement_basis(ints({0, 0, 1}));
    REQUIRE(axis.size() == 2);
    CHECK(((axis[0] == ints({1, 0, 0}) && axis[1] == ints({0, 1, 0})) ||
           (axis[0] == ints({0, 1, 0}) && axis[1] == ints({1, 0, 0}))));

    const auto perp = orthogonal_complement_basis(ints({1, 1}));
    REQUIRE(perp.size() == 1);
    CHECK(perp[0][0] == -perp[0][1]);
    CHECK(!perp[0].is_zero());

    const Vector v = ints({1, 2, 3});
    const auto b = orthogonal_complement_basis(v);
    REQUIRE(b.size() == 2);
    CHECK(dot(b[0], v) == 0);
    CHECK(dot(b[1], v) == 0);
    CHECK(dot(b[0], b[1]) == 0);

    CHECK(error_code([] { orthogonal_complement_basis(Vector(3)); }) == ErrorCode::ZeroVector);
  }

  TEST_CASE("hyperplane sides") {
    const Hyperplane h{ints({1, 1}), 2};
    CHECK(h.side(ints({0, 0})) == -1);
    CHECK(h.side(ints({1, 1})) == 0);
    CHECK(h.side(ints({3, 0})) == 1);
  }

  TEST_CASE("solve_unique agrees with Cramer's rule") {
    Rng rng(11);
    int solved = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < n; ++i) rows.push_back(support::random_vector(rng, n, 4));
      const Vector rhs = support::random_vector(rng, n, 9);
      std::vector<std::vector<Scalar>> a;
      for (const auto& r : rows) a.push_back(r.coords());
      const Scalar d = oracle::det(a);
      const auto x = solve_unique(rows, rhs);
      CHECK(x.has_value() == (d != 0));
      if (!x) continue;
      ++solved;
      for (std::size_t c = 0; c < n; ++c) {
        auto ac = a;
        for (std::size_t r = 0; r < n; ++r) ac[r][c] = rhs[r];
        CHECK((*x)[c] == oracle::det(ac) / d);
      }
    }
    CHECK(solved > 30);
  }

  TEST_CASE("nullspace is annihilated and has complementary rank") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t cols = 2 + static_cast<std::size_t>(trial % 4);
      const std::size_t r = 1 + static_cast<std::size_t>(trial % 3);
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < r; ++i) rows.push_back(support::random_vector(rng, cols, 2));
      const auto ns = nullspace(rows, cols);
      CHECK(ns.size() + oracle::rank_by_minors(rows) == cols);
      for (const auto& x : ns)
        for (const auto& row : rows) CHECK(dot(row, x) == 0);
    }
  }

  TEST_CASE("binomial matches Pascal's triangle") {
    for (int n = 0; n <= 30; ++n)
      for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  }

  TEST_CASE("primitive gives coprime integer multiple") {
    const Vector p = primitive(Vector{Scalar(2, 3), Scalar(-4, 9), Scalar(0)});
    CHECK(p == ints({3, -2, 0}));
    CHECK(error_code([] { primitive(Vector(2)); }) == ErrorCode::ZeroVector);
  }

  // Property checks over seeded random integer matrices.
  TEST_CASE("rank is invariant under row swaps and scaling") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + static_cast<std::size_t>(rng.uniform_int(0, 4));
      const std::size_t c = 1 + static_cast<std::size_t>(rng.uniform_int(0, 4));
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < r; ++i) rows.push_back(support::random_vector(rng, c, 2));
      const std::size_t base = rank(rows);
      CHECK(base == oracle::rank_by_minors(rows));
      auto swapped = rows;
      std::reverse(swapped.begin(), swapped.end());
      CHECK(rank(swapped) == base);
      auto scaled = rows;
      for (auto& row : scaled) {
        long long f = 0;
        while (f == 0) f = rng.uniform_int(-7, 7);
        row *= Scalar(f, 3);
      }
      CHECK(rank(scaled) == base);
    }
  }

  TEST_CASE("complement basis is orthogonal with rank dim - 1") {
    Rng rng(77);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t d = 2 + static_cast<std::size_t>(rng.uniform_int(0, 5));
      Vector v = support::random_vector(rng, d, 6);
      if (v.is_zero()) continue;
      const auto b = orthogonal_complement_basis(v);
      REQUIRE(b.size() == d - 1);
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(dot(b[i], v) == 0);
        for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(dot(b[i], b[j]) == 0);
      }
      CHECK(rank(b) == d - 1);
    }
  }

  TEST_CASE("affine_dim is monotone under subsets") {
    Rng rng(9);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t d = 1 + static_cast<std::size_t>(rng.uniform_int(0, 3));
      const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform_int(0, 6));
      std::vector<Vector> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(support::random_vector(rng, d, 1));
      const int full = affine_dim(pts);
      CHECK(full == oracle::affine_dim_by_minors(pts));
      std::vector<Vector> sub;
      for (const auto& p : pts)
        if (rng.uniform() < 0.5) sub.push_back(p);
      CHECK(affine_dim(sub) <= full);
    }
  }
}
