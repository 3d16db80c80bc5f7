#ifndef MINK_FUNCTIONALS_HPP
#define MINK_FUNCTIONALS_HPP

// Support, width, gauge, radius and maximal chord-length functions of
// V-polytopes, the polar set, and supporting-hyperplane distances.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mink/error.hpp"
#include "mink/lp.hpp"
#include "mink/polytope.hpp"
#include "mink/vector.hpp"

namespace mink {

struct FunctionalValue {
  double value = 0.0;
  std::optional<Vector> witness;  ///< a point attaining the value, when one exists
};

/// h_K(u) = max <u, v> over listed points; the witness is the lowest-index maximizer.
inline FunctionalValue support(const VPolytope& k, const Vector& u) {
  require_same_dim(k.dim(), u.dim(), "support");
  std::size_t best = 0;
  double value = dot(u, k[0]);
  for (std::size_t i = 1; i < k.size(); ++i) {
    const double s = dot(u, k[i]);
    if (s > value) {
      value = s;
      best = i;
    }
  }
  return {value, k[best]};
}

inline double support_value(const VPolytope& k, const Vector& u) { return support(k, u).value; }

/// w_K(u) = h_K(u) + h_K(-u). The witness is the attaining point p - q of K - K.
inline FunctionalValue width_fn(const VPolytope& k, const Vector& u) {
  const FunctionalValue plus = support(k, u);
  const FunctionalValue minus = support(k, -u);
  return {plus.value + minus.value, *plus.witness - *minus.witness};
}

/// A V-polytope certified to contain the origin in its interior.
class GaugeBody {
 public:
  static constexpr double min_margin = 1e-9;

  explicit GaugeBody(VPolytope body) : body_(std::move(body)), certificate_(body_.dim()) {
    require(affine_rank(body_) == body_.dim(), ErrorKind::invalid_gauge, "gauge body is lower-dimensional");
    margin_ = interior_margin(body_, certificate_);
    require(margin_ >= min_margin, ErrorKind::invalid_gauge, "origin is not an interior point of the gauge body");
  }

  const VPolytope& body() const noexcept { return body_; }
  std::size_t dim() const noexcept { return body_.dim(); }
  const Vector& interior_certificate() const noexcept { return certificate_; }
  double margin() const noexcept { return margin_; }

 private:
  VPolytope body_;
  Vector certificate_;
  double margin_ = 0.0;
};

namespace detail {

// min sum(nu) s.t. sum nu_i c_i = x, nu >= 0: the least lambda with x in lambda C.
inline double gauge_lp(const VPolytope& c, const Vector& x) {
  const std::size_t n = c.size(), d = c.dim();
  lp::LinearProgram prog(n);
  std::fill(prog.objective.begin(), prog.objective.end(), 1.0);
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = c[i][r];
    prog.add(std::move(row), lp::Relation::equal, x[r]);
  }
  const lp::Outcome out = lp::solve(prog);
  require(out.status != lp::Status::infeasible, ErrorKind::invalid_gauge, "point outside the cone of the gauge body");
  require(out.optimal(), ErrorKind::numerical_failure, "gauge LP " + std::string(lp::to_string(out.status)));
  return std::max(out.value, 0.0);
}

}  // namespace detail

/// gamma_C(x) = inf{lambda > 0 : x in lambda C}. The witness is the boundary
/// point x / gamma_C(x) when the value is positive.
inline FunctionalValue gauge(const GaugeBody& c, const Vector& x) {
  require_same_dim(c.dim(), x.dim(), "gauge");
  if (norm(x) == 0.0) return {0.0, std::nullopt};
  const double value = detail::gauge_lp(c.body(), x);
  if (value <= 0.0) return {0.0, std::nullopt};
  return {value, (1.0 / value) * x};
}

struct RayHit {
  double length;
  /// Normal y of a supporting hyperplane at length * u: <y, v> <= length for all
  /// points v and <y, u> >= 1.
  Vector support_normal;
};

/// sup{alpha >= 0 : alpha u in conv(P)}. Requires 0 in conv(P); the result is
/// finite because P is compact.
inline RayHit ray_length(const VPolytope& p, const Vector& u) {
  require_same_dim(p.dim(), u.dim(), "ray_length");
  const std::size_t n = p.size(), d = p.dim();
  lp::LinearProgram prog(n + 1);
  prog.objective[n] = -1.0;
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<double> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = p[i][r];
    row[n] = -u[r];
    prog.add(std::move(row), lp::Relation::equal, 0.0);
  }
  std::vector<double> sum(n + 1, 1.0);
  sum[n] = 0.0;
  prog.add(std::move(sum), lp::Relation::equal, 1.0);
  const lp::Outcome out = lp::solve(prog);
  require(out.status != lp::Status::infeasible, ErrorKind::invalid_argument, "origin is not in the polytope");
  require(out.optimal(), ErrorKind::numerical_failure, "ray LP " + std::string(lp::to_string(out.status)));
  Vector y(d);
  for (std::size_t r = 0; r < d; ++r) y[r] = out.duals[r];
  return {std::max(out.solution[n], 0.0), y};
}

/// r_K(u) = sup{alpha > 0 : alpha u in K}, the pointwise inverse of gamma_K.
inline FunctionalValue radius_fn(const GaugeBody& k, const Vector& u) {
  require_same_dim(k.dim(), u.dim(), "radius_fn");
  require(norm(u) > 0.0, ErrorKind::invalid_argument, "radius function needs a nonzero direction");
  const double r = ray_length(k.body(), u).length;
  return {r, r * u};
}

inline FunctionalValue radius_fn(const VPolytope& k, const Vector& u) { return radius_fn(GaugeBody(k), u); }

/// l_K(u) = sup{alpha > 0 : alpha u in K - K}.
inline FunctionalValue max_chord(const VPolytope& k, const Vector& u) {
  require_same_dim(k.dim(), u.dim(), "max_chord");
  require(norm(u) > 0.0, ErrorKind::invalid_argument, "chord length needs a nonzero direction");
  const VPolytope diff = prune_redundant(difference_body(k));
  const double l = ray_length(diff, u).length;
  return {l, l * u};
}

/// K polar = {x : <x, v> <= 1 for every listed v}; a zero vertex adds no constraint.
inline HPolytope polar(const VPolytope& k) {
  std::vector<Halfspace> hs;
  for (const Vector& v : k.vertices())
    if (norm(v) > 0.0) hs.push_back({v, 1.0});
  if (hs.empty()) return HPolytope(k.dim(), {}, false);
  HPolytope unflagged(k.dim(), hs, false);
  const bool bounded = certify_bounded(unflagged);
  return HPolytope(k.dim(), std::move(hs), bounded);
}

struct HyperplaneDistances {
  double h;               ///< h_K(u)
  double dist0;           ///< Euclidean distance from 0 to {y : <u, y> = h}
  double h_opposite;      ///< h_K(-u)
  double width_dist;      ///< dist0 + |h_K(-u)|
  bool origin_between;    ///< 0 lies in the slab between the two supporting hyperplanes
};

inline HyperplaneDistances supporting_hyperplane_distance(const VPolytope& k, const Vector& u) {
  require_same_dim(k.dim(), u.dim(), "supporting_hyperplane_distance");
  require(std::abs(norm(u) - 1.0) <= 1e-9, ErrorKind::invalid_argument, "direction must be a unit vector");
  const double h = support_value(k, u);
  const double h_opp = support_value(k, -u);
  // Closest point of the hyperplane to the origin is h u.
  const double dist0 = norm(h * u);
  return {h, dist0, h_opp, dist0 + std::abs(h_opp), h >= 0.0 && h_opp >= 0.0};
}

}  // namespace mink

#endif  // MINK_FUNCTIONALS_HPP
