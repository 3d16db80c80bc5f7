#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mink/bodies.hpp"
#include "mink/functionals.hpp"
#include "oracles.hpp"

using namespace mink;

namespace {

const double r3 = std::numbers::sqrt3;

double support_error(std::size_t n, const VPolytope& reference) {
  const VPolytope k = make_body({BodyKind::reuleaux_triangle, 2, n, 1.0});
  double err = 0.0;
  for (const Vector& u : oracle::circle_directions(720))
    err = std::max(err, std::abs(support_value(k, u) - support_value(reference, u)));
  return err;
}

}  // namespace

TEST(Bodies, CubeAndCrossPolytope) {
  const VPolytope c = make_body({BodyKind::cube, 2, 0, 1.0});
  ASSERT_EQ(c.size(), 4u);
  for (const Vector& v : c.vertices()) {
    EXPECT_EQ(std::abs(v[0]), 1.0);
    EXPECT_EQ(std::abs(v[1]), 1.0);
  }
  EXPECT_EQ(make_body({BodyKind::cube, 3, 0, 2.0}).size(), 8u);
  const VPolytope x = make_body({BodyKind::cross_polytope, 3, 0, 2.0});
  ASSERT_EQ(x.size(), 6u);
  for (const Vector& v : x.vertices()) EXPECT_DOUBLE_EQ(norm(v), 2.0);
}

TEST(Bodies, SimplexAndSegment) {
  const VPolytope s = make_body({BodyKind::simplex, 3, 0, 1.0});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], Vector(3));
  EXPECT_EQ(s[2], Vector::unit(3, 1));
  const VPolytope seg = make_body({BodyKind::segment, 2, 0, 3.0});
  ASSERT_EQ(seg.size(), 2u);
  EXPECT_EQ(seg[1], Vector({3.0, 0.0}));
}

TEST(Bodies, FixedTriangleAndSquareVerbatim) {
  const VPolytope t = make_body({BodyKind::paper_triangle, 2, 0, 1.0});
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], Vector({2.0, 0.0}));
  EXPECT_EQ(t[1], Vector({-1.0, r3}));
  EXPECT_EQ(t[2], Vector({-1.0, -r3}));
  const VPolytope sq = make_body({BodyKind::paper_square, 2, 0, 1.0});
  ASSERT_EQ(sq.size(), 4u);
  for (const Vector& v : sq.vertices()) {
    EXPECT_EQ(std::abs(v[0]), r3);
    EXPECT_EQ(std::abs(v[1]), r3);
  }
}

TEST(Bodies, InvalidSpecs) {
  EXPECT_THROW(make_body({BodyKind::regular_ngon, 3, 8, 1.0}), Error);
  EXPECT_THROW(make_body({BodyKind::reuleaux_triangle, 2, 1, 1.0}), Error);
  EXPECT_THROW(make_body({BodyKind::regular_ngon, 2, 2, 1.0}), Error);
  EXPECT_THROW(make_body({BodyKind::cube, 2, 0, 0.0}), Error);
  EXPECT_THROW(make_body({BodyKind::cube, 2, 0, -1.0}), Error);
  EXPECT_THROW(make_body({BodyKind::paper_square, 3, 0, 1.0}), Error);
  EXPECT_FALSE(parse_body_kind("disc"));
  EXPECT_EQ(*parse_body_kind("reuleaux_triangle"), BodyKind::reuleaux_triangle);
}

TEST(Bodies, ReuleauxSamplesLieOnArcsAndInsideAllDiscs) {
  const std::size_t n = 96;
  const VPolytope k = make_body({BodyKind::reuleaux_triangle, 2, n, 1.0});
  ASSERT_EQ(k.size(), 3 * (n + 1));
  const auto corners = triangle_corners();
  for (std::size_t arc = 0; arc < 3; ++arc) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Vector& p = k[arc * (n + 1) + j];
      EXPECT_NEAR(norm(p - corners[arc]), 2.0 * r3, 1e-12);
      for (const Vector& c : corners) EXPECT_LE(norm(p - c), 2.0 * r3 + 1e-12);
    }
    // Arc endpoints are the other two corners, bit for bit.
    EXPECT_EQ(k[arc * (n + 1)], corners[(arc + 1) % 3]);
    EXPECT_EQ(k[arc * (n + 1) + n], corners[(arc + 2) % 3]);
  }
}

TEST(Bodies, ReuleauxSupportConvergesQuadratically) {
  const VPolytope reference = make_body({BodyKind::reuleaux_triangle, 2, 4096, 1.0});
  const double e24 = support_error(24, reference);
  const double e48 = support_error(48, reference);
  const double e96 = support_error(96, reference);
  EXPECT_GT(e24, 0.0);
  EXPECT_NEAR(e48 / e24, 0.25, 0.05);
  EXPECT_NEAR(e96 / e48, 0.25, 0.05);
}

TEST(Bodies, RegularPolygonInscribedBound) {
  for (std::size_t n : {5u, 12u, 40u}) {
    const double s = 1.5;
    const VPolytope p = make_body({BodyKind::regular_ngon, 2, n, s});
    for (const Vector& u : oracle::circle_directions(360)) {
      const double h = support_value(p, u);
      EXPECT_LE(h, s + 1e-12);
      EXPECT_GE(h, s * std::cos(std::numbers::pi / static_cast<double>(n)) - 1e-12);
    }
  }
}

TEST(Bodies, ScaleMultipliesEveryVertex) {
  const VPolytope a = make_body({BodyKind::reuleaux_triangle, 2, 8, 1.0});
  const VPolytope b = make_body({BodyKind::reuleaux_triangle, 2, 8, 2.5});
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(max_abs_diff(2.5 * a[i], b[i]), 1e-15);
}
