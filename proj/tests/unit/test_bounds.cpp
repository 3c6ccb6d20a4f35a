#include <doctest.h>

#include "oracles.hpp"
#include "polyface/bounds.hpp"
#include "polyface/generators.hpp"
#include "support.hpp"

using namespace polyface;
using support::error_code;

namespace {

const BoundRow& row(const BoundReport& r, int k) { return r.rows.at(static_cast<std::size_t>(k)); }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("rho examples") {
    for (int d = 1; d <= 20; ++d) {
      CHECK(rho(d, 0) == 1);
      if (d >= 2) CHECK(rho(d, 1) == Scalar(d, 2));
    }
    CHECK(rho(5, 2) == 2);
    CHECK(rho(4, 2) == 1);
    CHECK(error_code([] { rho(3, 3); }) == ErrorCode::OutOfRange);
    CHECK(error_code([] { rho(3, -1); }) == ErrorCode::OutOfRange);
  }

  TEST_CASE("rho matches direct binomial evaluation") {
    for (int d = 1; d <= 24; ++d)
      for (int k = 0; k < d; ++k) {
        CHECK(rho(d, k) == oracle::rho(d, k));
        CHECK((rho(d, k) == 0) == (k > (d + 1) / 2));
        if (k <= d / 2) CHECK(rho(d, k) >= 1);
        if (k >= (d + 1) / 2 - 1) CHECK(rho(d, d - k - 1) >= 1);
      }
    for (int d = 3; d <= 19; d += 2) CHECK(rho(d, (d - 1) / 2) == Scalar(d - 1, 4) + 1);
  }

  TEST_CASE("convexity lemma") {
    CHECK(convexity_lemma_check(4, 0, 2));
    CHECK(convexity_lemma_check(3, 3, 2));
    CHECK(convexity_lemma_check(3, 2, 1));
    for (int a = 0; a <= 40; ++a)
      for (int b = 0; b <= 40; ++b)
        for (int c = 0; c <= 40; ++c) {
          const bool lhs = oracle::choose(a, c) + oracle::choose(b, c) >=
                           oracle::choose((a + b + 1) / 2, c) + oracle::choose((a + b) / 2, c);
          REQUIRE(lhs);
          REQUIRE(convexity_lemma_check(a, b, c));
        }
  }

  TEST_CASE("main bounds on the cube and octahedron") {
    const auto cube3 = verify_main_bounds(cube(3));
    CHECK(row(cube3, 1).ratio_vertices == Scalar(3, 2));
    CHECK(row(cube3, 1).rho_vertices == Scalar(3, 2));
    CHECK(row(cube3, 1).equality_vertices);
    CHECK(row(cube3, 1).predicted_vertices);
    CHECK(cube3.simple);

    const auto oct = verify_main_bounds(cross_polytope(3));
    CHECK(oct.simplicial);
    CHECK(row(oct, 1).ratio_facets == Scalar(12, 8));
    CHECK(row(oct, 1).equality_facets);
    CHECK(row(oct, 2).equality_facets);
    CHECK(!row(oct, 0).equality_facets);
    CHECK(row(oct, 0).equality_vertices);
    CHECK(!row(oct, 1).equality_vertices);
    CHECK(oct.ok());

    const auto c64 = verify_main_bounds(cyclic(4, 6));
    CHECK(row(c64, 1).ratio_vertices == Scalar(5, 2));
    CHECK(row(c64, 1).rho_vertices == 2);
    CHECK(!row(c64, 1).equality_vertices);
  }

  TEST_CASE("equality outside the predicted set is reported, not hidden") {
    // Simplex f-vector but claimed non-simple: k = 1 hits equality unpredicted.
    const auto r = evaluate_main_bounds(FVector(3, {4, 6, 4}), false, true);
    CHECK(row(r, 1).equality_vertices);
    CHECK(!row(r, 1).predicted_vertices);
    CHECK(!r.ok());
    // A fake f-vector below the bound.
    const auto bad = evaluate_main_bounds(FVector(3, {8, 9, 6}), true, false);
    CHECK(!row(bad, 1).satisfied_vertices);
    CHECK(!bad.ok());
  }

  TEST_CASE("main bounds hold with predicted equality over generated families") {
    std::vector<Polytope> ps;
    for (int d = 1; d <= 5; ++d) {
      ps.push_back(simplex(d));
      ps.push_back(cube(d));
      ps.push_back(cross_polytope(d));
      ps.push_back(generate({Family::Pyramid, d}));
      ps.push_back(generate({Family::Prism, d}));
      if (d >= 2) ps.push_back(cyclic(d, d + 3));
      if (d >= 2 && d <= 4)
        for (std::uint64_t s = 0; s < 4; ++s) ps.push_back(random_sphere(d, 2 * d + 2, s));
    }
    for (const auto& p : ps) {
      const auto f = f_vector(p);
      const int d = p.dim();
      const auto r = evaluate_main_bounds(f, is_simple(p), is_simplicial(p));
      CHECK(r.ok());
      for (int k = 0; k < d; ++k) {
        // Independent recomputation of both ratios and equality predictions.
        const Scalar rv(f[k], f[0]);
        const Scalar rf(f[k], f[d - 1]);
        CHECK(row(r, k).ratio_vertices == rv);
        CHECK(row(r, k).ratio_facets == rf);
        CHECK(rv >= oracle::rho(d, k));
        CHECK(rf >= oracle::rho(d, d - k - 1));
        CHECK((rv == oracle::rho(d, k)) == (k == 0 || (k == 1 && is_simple(p))));
        CHECK((rf == oracle::rho(d, d - k - 1)) == (k == d - 1 || (k == d - 2 && is_simplicial(p))));
      }
      CHECK_NOTHROW(verify_main_bounds(p));
    }
  }

  TEST_CASE("barany corollary") {
    const auto c = barany_check(cube(3));
    CHECK(c.min_count == 6);
    CHECK(c.ok);
    CHECK(barany_check(simplex(3)).min_count == 4);
    const auto r = barany_check(cyclic(4, 6));
    CHECK(r.ok);
    CHECK(r.min_count == 6);
    for (const auto& row : r.rows) {
      CHECK(row.at_least_min);
      CHECK(row.applies_vertices == (row.k <= 2));
      CHECK(row.applies_facets == (row.k >= 1));
    }
    const auto bad = barany_check(FVector(3, {8, 5, 6}));
    CHECK(!bad.ok);
  }

  TEST_CASE("xue comparator") {
    for (int d = 1; d <= 7; ++d)
      for (int k = 0; k < d; ++k) CHECK(xue_bound(d, 1, k) == oracle::choose(d + 1, k + 1));
    CHECK(xue_bound(4, 2, 1) == 13);
    for (int d = 1; d <= 7; ++d)
      for (int s = 1; s <= d; ++s)
        for (int k = 0; k < d; ++k)
          CHECK(xue_bound(d, s, k) ==
                oracle::choose(d + 1, k + 1) + oracle::choose(d, k + 1) - oracle::choose(d + 1 - s, k + 1));
    CHECK(error_code([] { xue_bound(3, 0, 1); }) == ErrorCode::OutOfRange);
    CHECK(error_code([] { xue_bound(3, 4, 1); }) == ErrorCode::OutOfRange);
    CHECK(!xue_check(cube(3)).applicable);
    const auto s = xue_check(simplex(4));
    CHECK(s.applicable);
    CHECK(s.s == 1);
    CHECK(s.ok);
    const auto x = xue_check(cross_polytope(4));
    CHECK(x.applicable);
    CHECK(x.s == 4);
    CHECK(x.ok);
  }

  TEST_CASE("bjorner chains") {
    const auto x = bjorner_check(cross_polytope(4));
    CHECK(x.applicable);
    CHECK(x.checked_simplicial);
    CHECK(x.ok);
    REQUIRE(x.links.size() == 3);
    CHECK(x.links[0].relation == Relation::Less);
    CHECK(x.links[1].relation == Relation::LessEq);
    CHECK(x.links[2].relation == Relation::Greater);
    CHECK(x.links[2].index == 2);

    const auto c = bjorner_check(cube(3));
    CHECK(c.checked_simple);
    CHECK(!c.checked_simplicial);
    CHECK(c.ok);
    REQUIRE(c.links.size() == 2);
    CHECK(c.links[1].relation == Relation::GreaterEq);

    CHECK(!bjorner_check(generate({Family::Pyramid, 3})).applicable);
    CHECK(!bjorner_check(FVector(3, {4, 6, 4}), true, true).links.empty());
    CHECK(!bjorner_check(FVector(3, {5, 4, 4}), false, true).ok);
  }
}
