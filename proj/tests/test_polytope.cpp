#include <doctest.h>

#include <random>

#include "qf/polytope.hpp"
#include "test_support.hpp"

using namespace qf;
using test::box;
using test::poly;

namespace {

bool has_facet(const HalfspaceRep& h, std::vector<BigInt> normal, const Rat& offset) {
  for (const auto& f : h.facets)
    if (f.normal == normal && f.offset == offset) return true;
  return false;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("convex hull examples") {
  const Polytope sq = poly(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Rat(1, 2), Rat(1, 2)}});
  CHECK(sq.vertices().size() == 4);
  CHECK(sq == box({1, 1}));

  const Polytope seg = poly(2, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(seg.vertices() == std::vector<Point>{{0, 0}, {2, 0}});
  CHECK(seg.affine_dim() == 1);

  const Polytope cube = box({1, 1, 1});
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.affine_dim() == 3);

  CHECK(code_of([] { convex_hull(std::vector<Point>{}, 2); }) == Errc::EmptyInput);
  CHECK(code_of([] { convex_hull(std::vector<Point>{{1, 2, 3}}, 2); }) == Errc::DimensionMismatch);
}

TEST_CASE("degenerate hulls in space") {
  CHECK(poly(3, {{1, 2, 3}, {1, 2, 3}}).affine_dim() == 0);
  const Polytope line = poly(3, {{0, 0, 0}, {1, 1, 1}, {3, 3, 3}, {2, 2, 2}});
  CHECK(line.affine_dim() == 1);
  CHECK(line.vertices() == std::vector<Point>{{0, 0, 0}, {3, 3, 3}});
  // planar hexagon-ish set in the plane x + y + z = 3 with an interior point
  const Polytope flat = poly(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}, {2, 1, 0}, {Rat(3, 2), Rat(3, 2), 0}});
  CHECK(flat.affine_dim() == 2);
  CHECK(flat.vertices().size() == 3);
  CHECK(volume(flat) == 0);
  // cube with points on edges and faces, all redundant
  const Polytope busy = poly(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2},
                                 {1, 0, 0}, {1, 1, 0}, {1, 1, 2}, {2, 1, 1}, {1, 1, 1}});
  CHECK(busy == box({2, 2, 2}));
}

TEST_CASE("hull vertices are exactly the extreme input points") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const int d = 2 + t % 2;
    std::uniform_int_distribution<long> c(0, 4);
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i) {
      Point p(static_cast<std::size_t>(d));
      for (auto& x : p) x = Rat(c(rng));
      pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Point> extreme;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Point> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (!test::in_convex_hull_lp(others, pts[i])) extreme.push_back(pts[i]);
    }
    CHECK(convex_hull(pts, d).vertices() == extreme);
  }
}

TEST_CASE("affine dimension") {
  CHECK(affine_dim(poly(2, {{5, 5}})) == 0);
  CHECK(affine_dim(poly(3, {{0, 0, 0}, {1, 2, 3}})) == 1);
  CHECK(affine_dim(box({1, 1})) == 2);
}

TEST_CASE("Minkowski sums") {
  CHECK(minkowski_sum(box({1, 1}), box({1, 1})) == box({2, 2}));
  CHECK(minkowski_sum(poly(2, {{0, 0}, {1, 0}}), box({1, 1})) == box({2, 1}));
  const Polytope pent = minkowski_sum(box({1, 1}), test::unit_triangle());
  CHECK(pent == poly(2, {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));
  CHECK(pent.vertices().size() == 5);
  CHECK(volume(pent) == Rat(7, 2));
  CHECK(code_of([] { minkowski_sum(box({1, 1}), box({1, 1, 1})); }) == Errc::DimensionMismatch);

  SUBCASE("commutative and associative") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const int d = 2 + t % 2;
      const Polytope a = test::random_lattice_body(rng, d, 5, 4);
      const Polytope b = test::random_lattice_body(rng, d, 4, 4);
      const Polytope c = test::random_lattice_body(rng, d, 3, 4);
      CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
      CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    }
  }
}

TEST_CASE("scale and translate") {
  CHECK(scale(box({1, 1}), 2) == box({2, 2}));
  const Polytope zero = scale(box({1, 1}), 0);
  CHECK(zero.vertices() == std::vector<Point>{{0, 0}});
  CHECK(code_of([] { scale(box({1, 1}), -1); }) == Errc::NegativeScale);
  const Polytope pent = minkowski_sum(box({1, 1}), test::unit_triangle());
  CHECK(volume(translate(pent, std::vector<Rat>{Rat(-7, 3), 11})) == volume(pent));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const int d = 2 + t % 2;
    const Polytope p = test::random_full_body(rng, d, 6, 5);
    const Rat lambda = abs(test::random_rat(rng, 9, 7));
    CHECK(volume(scale(p, lambda)) == pow(lambda, static_cast<unsigned>(d)) * volume(p));
  }
}

TEST_CASE("volume") {
  CHECK(volume(box({2, 2})) == 4);
  CHECK(volume(poly(2, {{0, 0}, {3, 1}})) == 0);
  CHECK(volume(box({1, 2, 3})) == 6);
  CHECK(volume(poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Rat(1, 6));

  SUBCASE("agrees with Ehrhart leading coefficient on lattice bodies") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 24; ++t) {
      const int d = 2 + t % 2;
      const Polytope p = test::random_full_body(rng, d, 4 + t % 5, 4);
      CHECK(volume(p) == test::ehrhart_volume(p));
    }
  }
}

TEST_CASE("halfspace representation") {
  const HalfspaceRep sq = to_halfspaces(box({1, 1}));
  CHECK(sq.facets.size() == 4);
  CHECK(has_facet(sq, {1, 0}, 1));
  CHECK(has_facet(sq, {-1, 0}, 0));
  CHECK(has_facet(sq, {0, 1}, 1));
  CHECK(has_facet(sq, {0, -1}, 0));

  const HalfspaceRep tri = to_halfspaces(test::unit_triangle());
  CHECK(tri.facets.size() == 3);
  CHECK(has_facet(tri, {1, 1}, 1));

  CHECK(to_halfspaces(box({1, 1, 1})).facets.size() == 6);
  // scaled coordinates keep normals primitive
  const HalfspaceRep scaled = to_halfspaces(box({Rat(1, 3), Rat(2, 5)}));
  CHECK(has_facet(scaled, {1, 0}, Rat(1, 3)));
  CHECK(has_facet(scaled, {0, 1}, Rat(2, 5)));

  CHECK(code_of([] { to_halfspaces(poly(2, {{0, 0}, {1, 1}})); }) == Errc::NotFullDimensional);

  SUBCASE("facets are valid and supported on random bodies") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
      const int d = 2 + t % 2;
      const Polytope p = test::random_full_body(rng, d, 5 + t % 6, 6);
      const HalfspaceRep h = to_halfspaces(p);
      for (const auto& f : h.facets) {
        BigInt g = 0;
        for (const auto& c : f.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        CHECK(g == 1);
        int tight = 0;
        for (const auto& v : p.vertices()) {
          Rat s(0);
          for (int c = 0; c < d; ++c) s += Rat(f.normal[c]) * v[c];
          CHECK(s <= f.offset);
          if (s == f.offset) ++tight;
        }
        CHECK(tight >= d);
        CHECK(support(p, f.normal) == f.offset);
      }
      for (std::size_t a = 0; a < h.facets.size(); ++a)
        for (std::size_t b = a + 1; b < h.facets.size(); ++b) CHECK_FALSE(h.facets[a] == h.facets[b]);
    }
  }
}

TEST_CASE("support function") {
  CHECK(support(box({1, 1}), std::vector<Rat>{1, 0}) == 1);
  CHECK(support(box({1, 1}), std::vector<Rat>{1, 1}) == 2);
  const Polytope pt = poly(3, {{1, Rat(-2, 3), 4}});
  CHECK(support(pt, std::vector<Rat>{2, 3, Rat(1, 2)}) == Rat(2));
  CHECK(code_of([] { support(box({1, 1}), std::vector<Rat>{0, 0}); }) == Errc::ZeroDirection);
}

TEST_CASE("Minkowski difference") {
  CHECK(*minkowski_difference(box({2, 2}), box({1, 1})) == box({1, 1}));
  const auto point = minkowski_difference(box({1, 1}), test::unit_triangle());
  REQUIRE(point);
  CHECK(point->vertices() == std::vector<Point>{{0, 0}});
  const Polytope pent = minkowski_sum(box({1, 1}), test::unit_triangle());
  CHECK(minkowski_difference(pent, pent)->vertices() == std::vector<Point>{{0, 0}});
  CHECK_FALSE(minkowski_difference(box({1, 1}), box({2, 2})));
  CHECK(*minkowski_difference(box({3, 1}), box({1, 1})) == poly(2, {{0, 0}, {2, 0}}));
  CHECK(code_of([] { minkowski_difference(box({1, 1}), box({1, 1, 1})); }) == Errc::DimensionMismatch);

  SUBCASE("erosion then dilation stays inside K") {
    std::mt19937_64 rng(31);
    int summands = 0;
    for (int t = 0; t < 30; ++t) {
      const int d = 2 + t % 2;
      const Polytope e = test::random_full_body(rng, d, 4, 2);
      const Polytope k = t % 3 == 0 ? minkowski_sum(test::random_lattice_body(rng, d, 3, 3), e)
                                    : test::random_full_body(rng, d, 7, 6);
      const auto diff = minkowski_difference(k, e);
      if (!diff) continue;
      const Polytope back = minkowski_sum(*diff, e);
      const HalfspaceRep hk = to_halfspaces(k);
      for (const auto& v : back.vertices()) CHECK(contains(hk, v));
      const bool equal = back == k;
      CHECK(equal == is_summand(e, k));
      if (t % 3 == 0) {
        CHECK(equal);
        ++summands;
      }
    }
    CHECK(summands == 10);
  }
}

TEST_CASE("summand test") {
  CHECK(is_summand(box({1, 1}), box({2, 2})));
  CHECK_FALSE(is_summand(test::unit_triangle(), box({1, 1})));
  CHECK(is_summand(box({1, 1}), box({1, 1})));
  const Polytope pent = minkowski_sum(box({1, 1}), test::unit_triangle());
  CHECK(is_summand(test::unit_triangle(), pent));
  CHECK(is_summand(box({1, 1}), pent));
}

TEST_CASE("relative inradius") {
  CHECK(relative_inradius(box({2, 1}), box({1, 1})) == 1);
  CHECK(relative_inradius(box({1, 1}), box({1, 1})) == 1);
  CHECK(relative_inradius(box({3, 3}), box({1, 1})) == 3);
  // the unit right triangle fits the unit square exactly
  CHECK(relative_inradius(box({1, 1}), test::unit_triangle()) == 1);
  CHECK(relative_inradius(test::unit_triangle(), box({1, 1})) == Rat(1, 2));
  CHECK(relative_inradius(box({2, 3, 5}), box({1, 1, 1})) == 2);

  SUBCASE("largest r with a non-empty erosion") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 16; ++t) {
      const int d = 2 + t % 2;
      const Polytope k = test::random_full_body(rng, d, 6, 6);
      const Polytope e = test::random_full_body(rng, d, 4, 3);
      const Rat r = relative_inradius(k, e);
      CHECK(r > 0);
      CHECK(minkowski_difference(k, scale(e, r)).has_value());
      CHECK_FALSE(minkowski_difference(k, scale(e, r + Rat(1, 1000))).has_value());
    }
  }
}

TEST_CASE("homothety") {
  CHECK(is_homothetic(box({2, 2}), box({1, 1})));
  CHECK_FALSE(is_homothetic(box({2, 1}), box({1, 1})));
  CHECK(is_homothetic(translate(scale(test::unit_triangle(), Rat(5, 3)), std::vector<Rat>{-1, 4}),
                      test::unit_triangle()));
  CHECK_FALSE(is_homothetic(scale(test::unit_triangle(), 2), poly(2, {{0, 0}, {-1, 0}, {0, -1}})));
  CHECK(is_homothetic(poly(2, {{3, 3}}), box({1, 1})));
}
