#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "mink/bodies.hpp"
#include "mink/functionals.hpp"
#include "oracles.hpp"

using namespace mink;

namespace {

const double r3 = std::numbers::sqrt3;

VPolytope square() { return make_body({BodyKind::paper_square, 2, 0, 1.0}); }
VPolytope triangle() { return make_body({BodyKind::paper_triangle, 2, 0, 1.0}); }

}  // namespace

TEST(Support, Examples) {
  EXPECT_DOUBLE_EQ(support(square(), Vector{1.0, 0.0}).value, r3);
  EXPECT_DOUBLE_EQ(support(triangle(), Vector{1.0, 0.0}).value, 2.0);
  EXPECT_DOUBLE_EQ(support(triangle(), Vector{-1.0, 0.0}).value, 1.0);
  EXPECT_DOUBLE_EQ(support(triangle(), Vector{0.0, 0.0}).value, 0.0);
}

TEST(Support, WitnessIsLowestIndexMaximizer) {
  const FunctionalValue f = support(triangle(), Vector{-1.0, 0.0});
  ASSERT_TRUE(f.witness);
  EXPECT_EQ(*f.witness, triangle()[1]);
  EXPECT_THROW(support(triangle(), Vector{1.0, 0.0, 0.0}), Error);
}

TEST(Width, Examples) {
  EXPECT_DOUBLE_EQ(width_fn(triangle(), Vector{1.0, 0.0}).value, 3.0);
  EXPECT_DOUBLE_EQ(width_fn(square(), Vector{1.0, 0.0}).value, 2.0 * r3);
  EXPECT_DOUBLE_EQ(width_fn(VPolytope(2, {Vector{4.0, 1.0}}), Vector{0.3, -0.7}).value, 0.0);
  const FunctionalValue w = width_fn(triangle(), Vector{1.0, 0.0});
  EXPECT_NEAR(dot(*w.witness, Vector{1.0, 0.0}), w.value, 1e-15);
}

TEST(Gauge, Examples) {
  const GaugeBody c(triangle());
  EXPECT_NEAR(gauge(c, Vector{2.0, 0.0}).value, 1.0, 1e-12);
  EXPECT_EQ(gauge(c, Vector{0.0, 0.0}).value, 0.0);
  EXPECT_NEAR(gauge(c, Vector{-2.0, 0.0}).value, 2.0, 1e-12);
  EXPECT_NEAR(gauge(c, Vector{-2.0, 0.0}).value, oracle::bisection_gauge(triangle().vertices(), Vector{-2.0, 0.0}),
              1e-9);
}

TEST(Gauge, MatchesBisectionAndIsHomogeneous) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const VPolytope body = oracle::random_body(rng, 2, 7);
    const VPolytope c = translate(body, -body.centroid());
    const GaugeBody g(c);
    for (const Vector& x : oracle::random_points(rng, 2, 5, 3.0)) {
      const FunctionalValue v = gauge(g, x);
      EXPECT_NEAR(v.value, oracle::bisection_gauge(c.vertices(), x), 1e-7);
      EXPECT_NEAR(gauge(g, 2.5 * x).value, 2.5 * v.value, 1e-7);
      ASSERT_TRUE(v.witness);
      EXPECT_NEAR(oracle::polygon_gauge(oracle::brute_edges(c.vertices()), *v.witness), 1.0, 1e-7);
    }
  }
}

TEST(Gauge, ConvexAlongSegments) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const VPolytope body = oracle::random_body(rng, d, 8);
    const GaugeBody g(translate(body, -body.centroid()));
    const auto pts = oracle::random_points(rng, d, 2, 2.0);
    const double mid = gauge(g, 0.5 * (pts[0] + pts[1])).value;
    EXPECT_LE(mid, 0.5 * (gauge(g, pts[0]).value + gauge(g, pts[1]).value) + 1e-7);
  }
}

TEST(GaugeBody, RejectsOriginOnBoundaryOrOutside) {
  const VPolytope simplex(2, {Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{0.0, 1.0}});
  try {
    GaugeBody g(simplex);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_gauge);
  }
  EXPECT_THROW(GaugeBody(translate(triangle(), Vector{5.0, 0.0})), Error);
  EXPECT_THROW(GaugeBody(make_body({BodyKind::segment, 2, 0, 1.0})), Error);
}

TEST(RadiusFn, ExamplesAndReciprocal) {
  EXPECT_NEAR(radius_fn(triangle(), Vector{1.0, 0.0}).value, 2.0, 1e-12);
  EXPECT_NEAR(radius_fn(triangle(), Vector{-1.0, 0.0}).value, 1.0, 1e-12);
  EXPECT_THROW(radius_fn(triangle(), Vector{0.0, 0.0}), Error);
  EXPECT_THROW(radius_fn(translate(triangle(), Vector{5.0, 0.0}), Vector{1.0, 0.0}), Error);
  std::mt19937_64 rng(31);
  const GaugeBody c(triangle());
  for (int i = 0; i < 100; ++i) {
    const Vector u = oracle::random_points(rng, 2, 1, 3.0)[0];
    EXPECT_NEAR(radius_fn(c, u).value * gauge(c, u).value, 1.0, 1e-7);
  }
}

TEST(RayLength, SupportNormalCertifiesTheHit) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const VPolytope body = oracle::random_body(rng, d, 8);
    const VPolytope p = translate(body, -body.centroid());
    const Vector u = oracle::random_unit(rng, d);
    const RayHit hit = ray_length(p, u);
    EXPECT_TRUE(member(p, hit.length * u, 1e-9));
    EXPECT_FALSE(member(p, (hit.length + 1e-6) * u, 1e-9));
    EXPECT_GE(dot(hit.support_normal, u), 1.0 - 1e-7);
    for (const Vector& v : p.vertices()) EXPECT_LE(dot(hit.support_normal, v), hit.length + 1e-7);
  }
}

TEST(MaxChord, Examples) {
  EXPECT_NEAR(max_chord(square(), Vector{1.0, 0.0}).value, 2.0 * r3, 1e-12);
  EXPECT_THROW(max_chord(square(), Vector{0.0, 0.0}), Error);
  const VPolytope reuleaux = make_body({BodyKind::reuleaux_triangle, 2, 96, 1.0});
  for (const Vector& u : oracle::circle_directions(72)) EXPECT_NEAR(max_chord(reuleaux, u).value, 2.0 * r3, 5e-3);
}

TEST(MaxChord, CenteredBodyIsTwiceRadius) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const VPolytope k = oracle::random_centered_body(rng, 2, 5);
    for (int s = 0; s < 10; ++s) {
      const Vector u = oracle::random_unit(rng, 2);
      EXPECT_NEAR(max_chord(k, u).value, 2.0 * radius_fn(k, u).value, 1e-7);
    }
  }
}

TEST(MaxChord, ScalingAndReflection) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const VPolytope k = oracle::random_body(rng, d, 6);
    const Vector u = oracle::random_unit(rng, d);
    const double l = max_chord(k, u).value;
    EXPECT_NEAR(max_chord(scale(k, 1.7), u).value, 1.7 * l, 1e-7);
    EXPECT_NEAR(max_chord(reflect(k), u).value, l, 1e-7);
  }
}

TEST(Polar, Examples) {
  const HPolytope sq = polar(make_body({BodyKind::cube, 2, 0, 1.0}));
  EXPECT_TRUE(sq.bounded());
  EXPECT_EQ(sq.halfspaces().size(), 4u);
  EXPECT_TRUE(sq.contains(Vector{1.0, 0.0}));
  EXPECT_TRUE(sq.contains(Vector{0.5, 0.5}));
  EXPECT_FALSE(sq.contains(Vector{0.6, 0.5}));
  const HPolytope cr = polar(make_body({BodyKind::cross_polytope, 2, 0, 1.0}));
  EXPECT_TRUE(cr.contains(Vector{1.0, 1.0}));
  EXPECT_FALSE(cr.contains(Vector{1.0, 1.01}));
  EXPECT_TRUE(polar(triangle()).contains(Vector{0.5, 0.0}));
}

TEST(Polar, ConsistentWithSupport) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const VPolytope k(d, oracle::random_points(rng, d, 1 + rng() % 8));
    const HPolytope pol = polar(k);
    for (const Vector& x : oracle::random_points(rng, d, 10, 2.0)) {
      const double h = support_value(k, x);
      if (std::abs(h - 1.0) < 1e-8) continue;
      EXPECT_EQ(pol.contains(x, 0.0), h <= 1.0 + 1e-9);
    }
  }
}

TEST(SupportingHyperplane, Examples) {
  const HyperplaneDistances a = supporting_hyperplane_distance(triangle(), Vector{1.0, 0.0});
  EXPECT_DOUBLE_EQ(a.h, 2.0);
  EXPECT_DOUBLE_EQ(a.dist0, 2.0);
  EXPECT_DOUBLE_EQ(a.width_dist, 3.0);
  EXPECT_DOUBLE_EQ(a.width_dist, width_fn(triangle(), Vector{1.0, 0.0}).value);
  const HyperplaneDistances b = supporting_hyperplane_distance(triangle(), Vector{-1.0, 0.0});
  EXPECT_DOUBLE_EQ(b.h, 1.0);
  EXPECT_DOUBLE_EQ(b.dist0, 1.0);
  EXPECT_THROW(supporting_hyperplane_distance(triangle(), Vector{2.0, 0.0}), Error);
}

TEST(SupportingHyperplane, WidthDecompositionWhenOriginInside) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const VPolytope body = oracle::random_body(rng, d, 7);
    const VPolytope k = translate(body, -body.centroid());
    const Vector u = oracle::random_unit(rng, d);
    const HyperplaneDistances hd = supporting_hyperplane_distance(k, u);
    EXPECT_TRUE(hd.origin_between);
    // Distance from the origin to {y : <u, y> = h} measured through the foot point.
    Vector foot = hd.h * u;
    EXPECT_NEAR(dot(u, foot), hd.h, 1e-12);
    EXPECT_NEAR(hd.width_dist, width_fn(k, u).value, 1e-9);
  }
}

TEST(FunctionalProperties, SublinearityAndWidthLaws) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const VPolytope k(d, oracle::random_points(rng, d, 1 + rng() % 8));
    const VPolytope k2(d, oracle::random_points(rng, d, 1 + rng() % 8));
    const auto xy = oracle::random_points(rng, d, 2, 2.0);
    EXPECT_LE(support_value(k, xy[0] + xy[1]), support_value(k, xy[0]) + support_value(k, xy[1]) + 1e-9);
    EXPECT_NEAR(support_value(scale(k, 3.0), xy[0]), 3.0 * support_value(k, xy[0]), 1e-9);
    EXPECT_NEAR(support_value(reflect(k), xy[0]), support_value(k, -xy[0]), 1e-12);
    const Vector u = xy[0];
    EXPECT_NEAR(width_fn(k, u).value, width_fn(reflect(k), u).value, 1e-9);
    EXPECT_NEAR(width_fn(minkowski_sum(k, k2), u).value, width_fn(k, u).value + width_fn(k2, u).value, 1e-9);
    EXPECT_NEAR(width_fn(k, u).value, support_value(difference_body(k), u), 1e-9);
    EXPECT_GE(width_fn(k, u).value, 0.0);
  }
}
