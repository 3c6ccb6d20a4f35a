#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polyface/generators.hpp"
#include "support.hpp"

using namespace polyface;
using support::error_code;

namespace {

std::vector<long long> counts(const Polytope& p) { return f_vector(p).counts(); }

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("closed-form f-vectors") {
    for (int d = 1; d <= 6; ++d) {
      CAPTURE(d);
      const auto s = f_vector(simplex(d));
      const auto x = f_vector(cross_polytope(d));
      for (int k = 0; k < d; ++k) {
        CHECK(s[k] == oracle::choose(d + 1, k + 1));
        CHECK(x[k] == (1LL << (k + 1)) * oracle::choose(d, k + 1));
      }
      if (d > 5) continue;
      const auto c = f_vector(cube(d));
      for (int k = 0; k < d; ++k) CHECK(c[k] == (1LL << (d - k)) * oracle::choose(d, k));
    }
    CHECK(counts(simplex(3)) == std::vector<long long>{4, 6, 4});
    CHECK(counts(cross_polytope(4)) == std::vector<long long>{8, 24, 32, 16});
    CHECK(counts(cyclic(4, 6)) == std::vector<long long>{6, 15, 18, 9});
  }

  TEST_CASE("cyclic facets follow Gale evenness") {
    for (int d = 2; d <= 6; ++d) {
      for (int n = d + 1; n <= std::min(d + 4, 10); ++n) {
        CAPTURE(d);
        CAPTURE(n);
        const auto p = cyclic(d, n);
        REQUIRE(p.vertex_count() == static_cast<std::size_t>(n));
        std::set<std::vector<int>> got;
        for (const auto& f : p.facets()) {
          std::vector<int> s;
          for (auto i : members(f.vertex_set)) s.push_back(static_cast<int>(p.source_index()[i]));
          std::sort(s.begin(), s.end());
          got.insert(s);
        }
        const auto gale = oracle::gale_facets(n, d);
        CHECK(got == std::set<std::vector<int>>(gale.begin(), gale.end()));
        CHECK(is_simplicial(p));
      }
    }
    for (int n = 5; n <= 8; ++n) {
      const auto f = f_vector(cyclic(4, n));
      CHECK(f[1] == oracle::choose(n, 2));
      CHECK(f[3] == n * (n - 3) / 2);
    }
  }

  TEST_CASE("pyramids and prisms") {
    CHECK(counts(pyramid(cube(2))) == std::vector<long long>{5, 8, 5});
    CHECK(counts(prism(simplex(2))) == std::vector<long long>{6, 9, 5});
    const auto seg = pyramid(simplex(0));
    CHECK(seg.dim() == 1);
    CHECK(seg.vertex_count() == 2);
    for (int d = 2; d <= 5; ++d) {
      const auto py = generate({Family::Pyramid, d});
      const auto pr = generate({Family::Prism, d});
      CHECK(py.dim() == d);
      CHECK(pr.dim() == d);
      CHECK(py.vertex_count() == (std::size_t{1} << (d - 1)) + 1);
      CHECK(pr.vertex_count() == static_cast<std::size_t>(2 * d));
      // Pyramid facets: base plus one per base facet; prism: two copies plus one per base facet.
      CHECK(f_vector(py)[d - 1] == 1 + 2 * (d - 1));
      CHECK(f_vector(pr)[d - 1] == 2 + d);
    }
  }

  TEST_CASE("family flags") {
    for (int d = 2; d <= 5; ++d) {
      CHECK(is_simple(simplex(d)));
      CHECK(is_simplicial(simplex(d)));
      CHECK(is_simple(cube(d)));
      CHECK(is_simplicial(cross_polytope(d)));
    }
  }

  TEST_CASE("random sphere points") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto p = random_sphere(3, 10, seed);
      CHECK(p.dim() == 3);
      CHECK(p.vertex_count() <= 10);
      for (const auto& v : p.ambient_vertices()) {
        double r2 = 0;
        for (const auto& x : v) {
          r2 += to_double(x) * to_double(x);
          CHECK(boost::multiprecision::denominator(x) <= 65536);
        }
        CHECK(std::abs(std::sqrt(r2) - 1.0) < 1e-4);
      }
    }
    CHECK(random_sphere(3, 10, 1).ambient_vertices() != random_sphere(3, 10, 2).ambient_vertices());
  }

  TEST_CASE("generation is deterministic") {
    for (auto fam : {Family::Simplex, Family::Cube, Family::Cross, Family::Cyclic, Family::Pyramid, Family::Prism,
                     Family::RandomSphere}) {
      const FamilySpec spec{fam, 3, std::nullopt, 42};
      const auto a = generate(spec);
      const auto b = generate(spec);
      CHECK(a.ambient_vertices() == b.ambient_vertices());
      CHECK(a.vertices() == b.vertices());
    }
  }

  TEST_CASE("family names") {
    for (auto fam : {Family::Simplex, Family::Cube, Family::Cross, Family::Cyclic, Family::Pyramid, Family::Prism,
                     Family::RandomSphere})
      CHECK(parse_family(to_string(fam)) == fam);
    CHECK(parse_family("random-sphere") == Family::RandomSphere);
    CHECK(error_code([] { parse_family("dodecahedron"); }) == ErrorCode::BadSpec);
  }

  TEST_CASE("bad specs") {
    CHECK(error_code([] { generate({Family::Cube, 0}); }) == ErrorCode::BadSpec);
    CHECK(error_code([] { generate({Family::Cube, 6}); }) == ErrorCode::TooLarge);
    CHECK(error_code([] { generate({Family::Simplex, 8}); }) == ErrorCode::TooLarge);
    CHECK(error_code([] { cyclic(4, 4); }) == ErrorCode::BadSpec);
    CHECK(error_code([] { cyclic(3, 40); }) == ErrorCode::TooLarge);
    CHECK(error_code([] { random_sphere(3, 3, 0); }) == ErrorCode::BadSpec);
  }
}
