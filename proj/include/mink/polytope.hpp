#ifndef MINK_POLYTOPE_HPP
#define MINK_POLYTOPE_HPP

// Polytope representations and Minkowski algebra.
//
// A VPolytope is a finite point list standing for its convex hull. Lists may
// carry redundant (non-extreme) points; everything downstream reads them through
// maxima or convex-coefficient LPs, so redundancy never changes a result. Only
// the planar case gets an exact hull and facet list.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mink/error.hpp"
#include "mink/lp.hpp"
#include "mink/vector.hpp"

namespace mink {

class VPolytope {
 public:
  VPolytope(std::size_t dim, std::vector<Vector> vertices) : dim_(dim), vertices_(std::move(vertices)) {
    require(dim_ >= 1, ErrorKind::invalid_argument, "dimension must be positive");
    require(!vertices_.empty(), ErrorKind::invalid_argument, "a polytope needs at least one point");
    for (const Vector& v : vertices_) {
      require(v.dim() == dim_, ErrorKind::dimension_mismatch,
              "vertex of length " + std::to_string(v.dim()) + " in a " + std::to_string(dim_) +
                  "-dimensional polytope");
      require(v.is_finite(), ErrorKind::invalid_argument, "vertex coordinates must be finite");
    }
  }

  explicit VPolytope(std::vector<Vector> vertices)
      : VPolytope(vertices.empty() ? 0 : vertices.front().dim(), std::move(vertices)) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vector>& vertices() const noexcept { return vertices_; }
  const Vector& operator[](std::size_t i) const { return vertices_[i]; }

  Vector centroid() const {
    Vector c(dim_);
    for (const Vector& v : vertices_) c += v;
    return (1.0 / static_cast<double>(vertices_.size())) * c;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> vertices_;
};

struct Halfspace {
  Vector normal;  // nonzero
  double offset;  // <normal, x> <= offset
};

class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded = false)
      : dim_(dim), halfspaces_(std::move(halfspaces)), bounded_(bounded) {
    for (const Halfspace& h : halfspaces_) {
      require(h.normal.dim() == dim_, ErrorKind::dimension_mismatch, "halfspace normal length");
      require(h.normal.is_finite() && std::isfinite(h.offset), ErrorKind::invalid_argument,
              "halfspace data must be finite");
      require(norm(h.normal) > 0.0, ErrorKind::invalid_argument, "halfspace normal must be nonzero");
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return halfspaces_.size(); }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  const Halfspace& operator[](std::size_t i) const { return halfspaces_[i]; }
  bool bounded() const noexcept { return bounded_; }

  bool contains(const Vector& x, double tol = 1e-9) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                       [&](const Halfspace& h) { return dot(h.normal, x) <= h.offset + tol; });
  }

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  bool bounded_;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  require(a == b, ErrorKind::dimension_mismatch,
          std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

/// All pairwise sums p + q; the hull of the result is P (+) Q.
inline VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "minkowski_sum");
  std::vector<Vector> out;
  out.reserve(p.size() * q.size());
  for (const Vector& a : p.vertices())
    for (const Vector& b : q.vertices()) out.push_back(a + b);
  return VPolytope(p.dim(), std::move(out));
}

/// v -> offset + scale * (reflect ? -v : v), applied vertex by vertex.
inline VPolytope transform(const VPolytope& p, double scale, const Vector& offset, bool reflect) {
  require(scale > 0.0 && std::isfinite(scale), ErrorKind::invalid_argument, "scale must be positive");
  require_same_dim(offset.dim(), p.dim(), "transform offset");
  const double s = reflect ? -scale : scale;
  std::vector<Vector> out;
  out.reserve(p.size());
  for (const Vector& v : p.vertices()) out.push_back(offset + s * v);
  return VPolytope(p.dim(), std::move(out));
}

inline VPolytope translate(const VPolytope& p, const Vector& offset) { return transform(p, 1.0, offset, false); }
inline VPolytope scale(const VPolytope& p, double s) { return transform(p, s, Vector(p.dim()), false); }
inline VPolytope reflect(const VPolytope& p) { return transform(p, 1.0, Vector(p.dim()), true); }

/// K - K; the point list is closed under negation by construction.
inline VPolytope difference_body(const VPolytope& p) { return minkowski_sum(p, reflect(p)); }

/// True when every listed point has its negative in the list (within tol).
inline bool is_centered(const VPolytope& p, double tol = 1e-9) {
  std::vector<Vector> sorted = p.vertices();
  std::sort(sorted.begin(), sorted.end());
  for (const Vector& v : sorted) {
    const Vector target = -v;
    Vector low = target;
    low[0] -= tol;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), low);
    bool found = false;
    for (; it != sorted.end() && (*it)[0] <= target[0] + tol; ++it) {
      if (max_abs_diff(*it, target) <= tol) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace detail {

inline double cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace detail

/// Planar convex hull: extreme points in counter-clockwise order starting from
/// the lexicographic minimum. Duplicates and collinear boundary points are dropped.
inline VPolytope hull_2d(std::vector<Vector> points) {
  require(!points.empty(), ErrorKind::invalid_argument, "hull of an empty point set");
  for (const Vector& v : points) require(v.dim() == 2, ErrorKind::dimension_mismatch, "hull_2d needs planar points");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return VPolytope(2, std::move(points));

  double extent = 0.0;
  for (const Vector& v : points) extent = std::max({extent, std::abs(v[0]), std::abs(v[1])});
  const double eps = 1e-14 * std::max(extent * extent, 1e-300);

  std::vector<Vector> hull(2 * points.size());
  std::size_t k = 0;
  for (const Vector& p : points) {
    while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const Vector& p = points[i];
    while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return VPolytope(2, std::move(hull));
}

inline VPolytope hull_2d(const VPolytope& p) {
  require(p.dim() == 2, ErrorKind::dimension_mismatch, "hull_2d needs a planar polytope");
  return hull_2d(p.vertices());
}

struct FacetList {
  HPolytope polytope;
  VPolytope hull;  ///< CCW extreme points the facets were read from
  bool lower_dimensional = false;
};

/// One halfspace per hull edge with outward unit normal. A point or segment
/// yields the bounding halfspaces of its affine hull and sets lower_dimensional.
inline FacetList facets_2d(const VPolytope& p) {
  VPolytope hull = hull_2d(p);
  const auto& h = hull.vertices();
  std::vector<Halfspace> out;
  bool degenerate = false;
  if (h.size() == 1) {
    degenerate = true;
    for (std::size_t axis = 0; axis < 2; ++axis)
      for (double sign : {1.0, -1.0}) out.push_back({Vector::unit(2, axis, sign), sign * h[0][axis]});
  } else if (h.size() == 2) {
    degenerate = true;
    const Vector along = normalized(h[1] - h[0]);
    const Vector across{-along[1], along[0]};
    out.push_back({across, dot(across, h[0])});
    out.push_back({-across, -dot(across, h[0])});
    out.push_back({along, dot(along, h[1])});
    out.push_back({-along, -dot(along, h[0])});
  } else {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Vector& a = h[i];
      const Vector& b = h[(i + 1) % h.size()];
      const Vector normal = normalized(Vector{b[1] - a[1], a[0] - b[0]});
      out.push_back({normal, std::max(dot(normal, a), dot(normal, b))});
    }
  }
  return FacetList{HPolytope(2, std::move(out), true), std::move(hull), degenerate};
}

/// LP certificate that every coordinate is bounded above and below.
inline bool certify_bounded(const HPolytope& p) {
  const std::size_t d = p.dim();
  for (std::size_t axis = 0; axis < d; ++axis) {
    for (double sign : {1.0, -1.0}) {
      lp::LinearProgram prog(d);
      for (std::size_t j = 0; j < d; ++j) prog.set_free(j);
      prog.objective[axis] = -sign;
      for (const Halfspace& h : p.halfspaces()) prog.add(h.normal.values(), lp::Relation::less_equal, h.offset);
      if (!lp::solve(prog).optimal()) return false;
    }
  }
  return true;
}

/// Smallest L1 distance from x to conv(P), with the convex coefficients.
struct HullDistance {
  double distance;
  std::vector<double> weights;
};

inline HullDistance hull_distance(const VPolytope& p, const Vector& x) {
  require_same_dim(p.dim(), x.dim(), "hull_distance");
  const std::size_t n = p.size(), d = p.dim();
  lp::LinearProgram prog(n + 2 * d);
  for (std::size_t k = 0; k < 2 * d; ++k) prog.objective[n + k] = 1.0;
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<double> row(n + 2 * d, 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i] = p[i][r];
    row[n + r] = 1.0;
    row[n + d + r] = -1.0;
    prog.add(std::move(row), lp::Relation::equal, x[r]);
  }
  std::vector<double> sum(n + 2 * d, 0.0);
  std::fill(sum.begin(), sum.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
  prog.add(std::move(sum), lp::Relation::equal, 1.0);
  const lp::Outcome out = lp::solve_or_throw(prog, "membership");
  return {std::max(out.value, 0.0), std::vector<double>(out.solution.begin(), out.solution.begin() + static_cast<std::ptrdiff_t>(n))};
}

/// x in conv(P) up to an L1 residual of tol.
inline bool member(const VPolytope& p, const Vector& x, double tol = 1e-9) {
  require(tol >= 0.0, ErrorKind::invalid_argument, "tolerance must be non-negative");
  return hull_distance(p, x).distance <= tol;
}

/// Dimension of the affine hull of the point list.
inline std::size_t affine_rank(const VPolytope& p) {
  const std::size_t d = p.dim();
  double extent = 0.0;
  for (const Vector& v : p.vertices())
    for (double c : v) extent = std::max(extent, std::abs(c));
  const double eps = 1e-10 * std::max(extent, 1e-300);
  std::vector<Vector> rows;
  for (std::size_t i = 1; i < p.size(); ++i) rows.push_back(p[i] - p[0]);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    if (std::abs(rows[pivot][col]) <= eps) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const double f = rows[r][col] / rows[rank][col];
      if (f != 0.0) rows[r] -= f * rows[rank];
    }
    ++rank;
  }
  return rank;
}

namespace detail {

// Largest t with z +- t e_i in conv(P) for every axis i; positive exactly when z
// is interior. With free_center the center is an LP variable written back to z.
inline double cross_polytope_margin(const VPolytope& p, Vector* z, bool free_center) {
  const std::size_t n = p.size(), d = p.dim();
  const std::size_t probes = 2 * d;
  const std::size_t t_col = probes * n;
  const std::size_t z_col = t_col + 1;
  lp::LinearProgram prog(t_col + 1 + (free_center ? d : 0));
  prog.objective[t_col] = -1.0;
  if (free_center)
    for (std::size_t r = 0; r < d; ++r) prog.set_free(z_col + r);
  for (std::size_t k = 0; k < probes; ++k) {
    const std::size_t axis = k / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<double> row(prog.num_variables(), 0.0);
      for (std::size_t i = 0; i < n; ++i) row[k * n + i] = p[i][r];
      if (r == axis) row[t_col] = -sign;
      if (free_center) row[z_col + r] = -1.0;
      prog.add(std::move(row), lp::Relation::equal, free_center ? 0.0 : (*z)[r]);
    }
    std::vector<double> sum(prog.num_variables(), 0.0);
    for (std::size_t i = 0; i < n; ++i) sum[k * n + i] = 1.0;
    prog.add(std::move(sum), lp::Relation::equal, 1.0);
  }
  const lp::Outcome out = lp::solve(prog);
  if (out.status == lp::Status::infeasible) return 0.0;
  require(out.optimal(), ErrorKind::numerical_failure, "interior margin LP " + std::string(lp::to_string(out.status)));
  if (free_center)
    for (std::size_t r = 0; r < d; ++r) (*z)[r] = out.solution[z_col + r];
  return std::max(out.solution[t_col], 0.0);
}

}  // namespace detail

inline double interior_margin(const VPolytope& p, Vector z) {
  require_same_dim(p.dim(), z.dim(), "interior_margin");
  return detail::cross_polytope_margin(p, &z, false);
}

struct InteriorPoint {
  Vector point;
  double margin;
};

/// A point with positive cross-polytope slack: the vertex centroid when it
/// qualifies, otherwise the LP max-slack point.
inline InteriorPoint interior_point_certified(const VPolytope& p) {
  require(affine_rank(p) == p.dim(), ErrorKind::lower_dimensional,
          "affine hull has dimension " + std::to_string(affine_rank(p)) + " < " + std::to_string(p.dim()));
  Vector c = p.centroid();
  const double m = interior_margin(p, c);
  if (m > 1e-9) return {c, m};
  Vector z(p.dim());
  const double best = detail::cross_polytope_margin(p, &z, true);
  require(best > 1e-9, ErrorKind::lower_dimensional, "no point with positive slack");
  return {z, best};
}

inline Vector interior_point(const VPolytope& p) { return interior_point_certified(p).point; }

/// Drops exact duplicates and points lying in the hull of the remaining ones.
/// Planar input goes through hull_2d. In higher dimensions the unique
/// maximizers over a fixed set of directions are extreme for certain; every
/// other point is first tested against those, and only the survivors are
/// tested against all remaining points.
inline VPolytope prune_redundant(const VPolytope& p) {
  if (p.dim() == 2) return hull_2d(p);
  const std::size_t d = p.dim();
  std::vector<Vector> pts = p.vertices();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= d + 1) return VPolytope(d, std::move(pts));
  double extent = 0.0;
  for (const Vector& v : pts)
    for (double c : v) extent = std::max(extent, std::abs(c));
  const double tol = 1e-11 * std::max(extent, 1.0);

  std::vector<Vector> dirs;
  for (std::size_t axis = 0; axis < d; ++axis) {
    dirs.push_back(Vector::unit(d, axis));
    dirs.push_back(Vector::unit(d, axis, -1.0));
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < 64; ++k) {
    Vector u(d);
    for (std::size_t r = 0; r < d; ++r) u[r] = gauss(rng);
    dirs.push_back(u);
  }
  std::vector<bool> certain(pts.size(), false);
  for (const Vector& u : dirs) {
    std::size_t best = 0;
    double top = -std::numeric_limits<double>::infinity(), second = top;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double s = dot(u, pts[i]);
      if (s > top) {
        second = top;
        top = s;
        best = i;
      } else if (s > second) {
        second = s;
      }
    }
    if (top - second > 1e-9 * std::max(extent, 1.0) * norm(u)) certain[best] = true;
  }
  std::vector<Vector> anchors;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (certain[i]) anchors.push_back(pts[i]);

  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (certain[i]) continue;
    if (!anchors.empty() && hull_distance(VPolytope(d, anchors), pts[i]).distance <= tol) continue;
    open.push_back(i);
  }
  std::vector<Vector> kept = anchors;
  std::vector<bool> dropped(pts.size(), false);
  for (std::size_t i : open) {
    std::vector<Vector> others = anchors;
    for (std::size_t j : open)
      if (j != i && !dropped[j]) others.push_back(pts[j]);
    if (!others.empty() && hull_distance(VPolytope(d, std::move(others)), pts[i]).distance <= tol) {
      dropped[i] = true;
      continue;
    }
    kept.push_back(pts[i]);
  }
  std::sort(kept.begin(), kept.end());
  return VPolytope(d, std::move(kept));
}

}  // namespace mink

#endif  // MINK_POLYTOPE_HPP
