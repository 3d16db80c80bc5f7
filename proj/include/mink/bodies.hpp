#ifndef MINK_BODIES_HPP
#define MINK_BODIES_HPP

// Reference bodies: cubes, cross-polytopes, simplices, segments, regular
// polygons, and the triangle/square/Reuleaux pair used in the worked examples.
// Curved bodies are sampled from the inside (inscribed polygons).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "mink/error.hpp"
#include "mink/polytope.hpp"

namespace mink {

enum class BodyKind {
  cube,
  cross_polytope,
  simplex,
  segment,
  regular_ngon,
  reuleaux_triangle,
  paper_triangle,
  paper_square,
};

inline const char* to_string(BodyKind k) {
  switch (k) {
    case BodyKind::cube: return "cube";
    case BodyKind::cross_polytope: return "cross_polytope";
    case BodyKind::simplex: return "simplex";
    case BodyKind::segment: return "segment";
    case BodyKind::regular_ngon: return "regular_ngon";
    case BodyKind::reuleaux_triangle: return "reuleaux_triangle";
    case BodyKind::paper_triangle: return "paper_triangle";
    case BodyKind::paper_square: return "paper_square";
  }
  return "?";
}

inline std::optional<BodyKind> parse_body_kind(const std::string& name) {
  for (BodyKind k : {BodyKind::cube, BodyKind::cross_polytope, BodyKind::simplex, BodyKind::segment,
                     BodyKind::regular_ngon, BodyKind::reuleaux_triangle, BodyKind::paper_triangle,
                     BodyKind::paper_square})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

struct BodySpec {
  BodyKind kind = BodyKind::cube;
  std::size_t dim = 2;
  std::size_t n = 96;  ///< vertices of a regular polygon, samples per Reuleaux arc
  double scale = 1.0;
};

/// The three corners of the equilateral triangle of the worked examples.
inline std::vector<Vector> triangle_corners() {
  const double r3 = std::numbers::sqrt3;
  return {Vector{2.0, 0.0}, Vector{-1.0, r3}, Vector{-1.0, -r3}};
}

/// For each corner, n + 1 samples (endpoints included) of the opposite arc of
/// radius 2 sqrt(3) centred at that corner. Arc endpoints are the other two
/// corners, copied verbatim.
inline std::vector<Vector> reuleaux_points(std::size_t n) {
  const auto corners = triangle_corners();
  const double radius = 2.0 * std::numbers::sqrt3;
  std::vector<Vector> pts;
  pts.reserve(3 * (n + 1));
  for (std::size_t k = 0; k < 3; ++k) {
    const Vector& center = corners[k];
    const Vector& from = corners[(k + 1) % 3];
    const Vector& to = corners[(k + 2) % 3];
    const double a0 = std::atan2(from[1] - center[1], from[0] - center[0]);
    double a1 = std::atan2(to[1] - center[1], to[0] - center[0]);
    // Arcs span 60 degrees; unwrap so the sweep goes the short way.
    while (a1 - a0 > std::numbers::pi) a1 -= 2.0 * std::numbers::pi;
    while (a0 - a1 > std::numbers::pi) a1 += 2.0 * std::numbers::pi;
    pts.push_back(from);
    for (std::size_t j = 1; j < n; ++j) {
      const double a = a0 + (a1 - a0) * static_cast<double>(j) / static_cast<double>(n);
      pts.push_back(Vector{center[0] + radius * std::cos(a), center[1] + radius * std::sin(a)});
    }
    pts.push_back(to);
  }
  return pts;
}

inline VPolytope make_body(const BodySpec& spec) {
  const std::size_t d = spec.dim;
  const double s = spec.scale;
  require(s > 0.0 && std::isfinite(s), ErrorKind::invalid_argument, "scale must be positive");
  require(d >= 1, ErrorKind::invalid_argument, "dimension must be positive");
  const bool planar_only = spec.kind == BodyKind::regular_ngon || spec.kind == BodyKind::reuleaux_triangle ||
                           spec.kind == BodyKind::paper_triangle || spec.kind == BodyKind::paper_square;
  require(!planar_only || d == 2, ErrorKind::invalid_argument,
          std::string(to_string(spec.kind)) + " exists only in dimension 2");

  std::vector<Vector> pts;
  switch (spec.kind) {
    case BodyKind::cube: {
      require(d <= 20, ErrorKind::invalid_argument, "cube dimension too large");
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i & 1U) ? s : -s;
        pts.push_back(v);
      }
      break;
    }
    case BodyKind::cross_polytope:
      for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(Vector::unit(d, i, s));
        pts.push_back(Vector::unit(d, i, -s));
      }
      break;
    case BodyKind::simplex:
      pts.emplace_back(d);
      for (std::size_t i = 0; i < d; ++i) pts.push_back(Vector::unit(d, i, s));
      break;
    case BodyKind::segment:
      pts.emplace_back(d);
      pts.push_back(Vector::unit(d, 0, s));
      break;
    case BodyKind::regular_ngon:
      require(spec.n >= 3, ErrorKind::invalid_argument, "a regular polygon needs n >= 3");
      for (std::size_t k = 0; k < spec.n; ++k) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(spec.n);
        pts.push_back(Vector{s * std::cos(a), s * std::sin(a)});
      }
      break;
    case BodyKind::reuleaux_triangle:
      require(spec.n >= 2, ErrorKind::invalid_argument, "a Reuleaux approximation needs n >= 2");
      for (Vector& v : reuleaux_points(spec.n)) pts.push_back(s * v);
      break;
    case BodyKind::paper_triangle:
      for (Vector& v : triangle_corners()) pts.push_back(s * v);
      break;
    case BodyKind::paper_square: {
      const double a = s * std::numbers::sqrt3;
      pts = {Vector{-a, -a}, Vector{-a, a}, Vector{a, -a}, Vector{a, a}};
      break;
    }
  }
  return VPolytope(d, std::move(pts));
}

}  // namespace mink

#endif  // MINK_BODIES_HPP
