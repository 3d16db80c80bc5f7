#ifndef MINK_RADII_HPP
#define MINK_RADII_HPP

// Circumradius, inradius, diameter and minimum width of a polytope K relative
// to a gauge body C, the norm with unit ball (C - C)/2, and the chain of
// diameter representations.
//
// Containment is decided on vertex lists. In the plane the container's facets
// are read off hull_2d, which turns R and r into LPs with d + 1 columns; in
// higher dimensions the per-vertex convex-coefficient encodings are used.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mink/error.hpp"
#include "mink/functionals.hpp"
#include "mink/lp.hpp"
#include "mink/polytope.hpp"
#include "mink/vector.hpp"

namespace mink {

enum class Quantity { circumradius, inradius, diameter, min_width };

inline const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::circumradius: return "R";
    case Quantity::inradius: return "r";
    case Quantity::diameter: return "D";
    case Quantity::min_width: return "omega";
  }
  return "?";
}

struct RadiiResult {
  Quantity quantity = Quantity::circumradius;
  double value = 0.0;
  std::optional<Vector> center;                              ///< R and r: translate of the optimal homothet
  std::optional<std::pair<std::size_t, std::size_t>> pair;   ///< D: vertex indices into K, i < j
  std::optional<Vector> direction;                           ///< omega: unit direction of the thinnest slab
  bool degenerate = false;                                   ///< omega of a lower-dimensional K
};

namespace detail {

inline void require_full_dimensional(const VPolytope& c, const char* what) {
  require(affine_rank(c) == c.dim(), ErrorKind::lower_dimensional, std::string(what) + " must be full-dimensional");
}

inline RadiiResult circumradius_planar(const VPolytope& k, const VPolytope& c) {
  const FacetList cf = facets_2d(c);
  require(!cf.lower_dimensional, ErrorKind::lower_dimensional, "gauge body must be full-dimensional");
  const VPolytope kh = hull_2d(k);
  lp::LinearProgram prog(3);
  prog.set_free(0);
  prog.set_free(1);
  prog.objective[2] = 1.0;
  // h_K(n) <= <n, x> + lambda * b for every facet <n, y> <= b of C.
  for (const Halfspace& h : cf.polytope.halfspaces())
    prog.add({-h.normal[0], -h.normal[1], -h.offset}, lp::Relation::less_equal, -support_value(kh, h.normal));
  const lp::Outcome out = lp::solve_or_throw(prog, "circumradius");
  return {Quantity::circumradius, std::max(out.value, 0.0), Vector{out.solution[0], out.solution[1]}, {}, {}, false};
}

inline RadiiResult inradius_planar(const VPolytope& k, const VPolytope& c) {
  const FacetList kf = facets_2d(k);
  if (kf.lower_dimensional) return {Quantity::inradius, 0.0, kf.hull[0], {}, {}, false};
  const VPolytope ch = hull_2d(c);
  lp::LinearProgram prog(3);
  prog.set_free(0);
  prog.set_free(1);
  prog.objective[2] = -1.0;
  for (const Halfspace& h : kf.polytope.halfspaces())
    prog.add({h.normal[0], h.normal[1], support_value(ch, h.normal)}, lp::Relation::less_equal, h.offset);
  const lp::Outcome out = lp::solve(prog);
  require(out.status != lp::Status::unbounded, ErrorKind::invalid_argument, "inradius is unbounded (point gauge)");
  require(out.optimal(), ErrorKind::numerical_failure, "inradius LP " + std::string(lp::to_string(out.status)));
  return {Quantity::inradius, std::max(out.solution[2], 0.0), Vector{out.solution[0], out.solution[1]}, {}, {}, false};
}

}  // namespace detail

/// R(K, C) through the vertex encoding: v_j - x = sum_i nu_ij c_i with
/// sum_i nu_ij = lambda for every vertex v_j of K; minimize lambda.
inline RadiiResult circumradius_vertex_lp(const VPolytope& k_in, const VPolytope& c_in) {
  require_same_dim(k_in.dim(), c_in.dim(), "circumradius");
  const VPolytope k = prune_redundant(k_in);
  const VPolytope c = prune_redundant(c_in);
  const std::size_t d = k.dim(), nk = k.size(), nc = c.size();
  const std::size_t lambda = d;
  const std::size_t first_nu = d + 1;
  lp::LinearProgram prog(first_nu + nk * nc);
  for (std::size_t r = 0; r < d; ++r) prog.set_free(r);
  prog.objective[lambda] = 1.0;
  for (std::size_t j = 0; j < nk; ++j) {
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<double> row(prog.num_variables(), 0.0);
      row[r] = 1.0;
      for (std::size_t i = 0; i < nc; ++i) row[first_nu + j * nc + i] = c[i][r];
      prog.add(std::move(row), lp::Relation::equal, k[j][r]);
    }
    std::vector<double> row(prog.num_variables(), 0.0);
    row[lambda] = -1.0;
    for (std::size_t i = 0; i < nc; ++i) row[first_nu + j * nc + i] = 1.0;
    prog.add(std::move(row), lp::Relation::equal, 0.0);
  }
  const lp::Outcome out = lp::solve(prog);
  require(out.status != lp::Status::infeasible, ErrorKind::lower_dimensional,
          "no homothet of the gauge body contains K");
  require(out.optimal(), ErrorKind::numerical_failure, "circumradius LP " + std::string(lp::to_string(out.status)));
  Vector x(d);
  for (std::size_t r = 0; r < d; ++r) x[r] = out.solution[r];
  return {Quantity::circumradius, std::max(out.solution[lambda], 0.0), x, {}, {}, false};
}

/// r(K, C) through the vertex encoding: x + lambda c_m = sum_i mu_im v_i with
/// convex coefficients mu for every vertex c_m of C; maximize lambda.
inline RadiiResult inradius_vertex_lp(const VPolytope& k_in, const VPolytope& c_in) {
  require_same_dim(k_in.dim(), c_in.dim(), "inradius");
  const VPolytope k = prune_redundant(k_in);
  const VPolytope c = prune_redundant(c_in);
  const std::size_t d = k.dim(), nk = k.size(), nc = c.size();
  const std::size_t lambda = d;
  const std::size_t first_mu = d + 1;
  lp::LinearProgram prog(first_mu + nc * nk);
  for (std::size_t r = 0; r < d; ++r) prog.set_free(r);
  prog.objective[lambda] = -1.0;
  for (std::size_t m = 0; m < nc; ++m) {
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<double> row(prog.num_variables(), 0.0);
      row[r] = -1.0;
      row[lambda] = -c[m][r];
      for (std::size_t i = 0; i < nk; ++i) row[first_mu + m * nk + i] = k[i][r];
      prog.add(std::move(row), lp::Relation::equal, 0.0);
    }
    std::vector<double> row(prog.num_variables(), 0.0);
    for (std::size_t i = 0; i < nk; ++i) row[first_mu + m * nk + i] = 1.0;
    prog.add(std::move(row), lp::Relation::equal, 1.0);
  }
  const lp::Outcome out = lp::solve(prog);
  require(out.status != lp::Status::unbounded, ErrorKind::invalid_argument, "inradius is unbounded (point gauge)");
  require(out.optimal(), ErrorKind::numerical_failure, "inradius LP " + std::string(lp::to_string(out.status)));
  Vector x(d);
  for (std::size_t r = 0; r < d; ++r) x[r] = out.solution[r];
  return {Quantity::inradius, std::max(out.solution[lambda], 0.0), x, {}, {}, false};
}

/// Least lambda such that a translate of lambda C contains K.
inline RadiiResult circumradius(const VPolytope& k, const VPolytope& c) {
  require_same_dim(k.dim(), c.dim(), "circumradius");
  detail::require_full_dimensional(c, "gauge body");
  if (k.dim() == 2) return detail::circumradius_planar(k, c);
  return circumradius_vertex_lp(k, c);
}

/// Greatest lambda such that a translate of lambda C fits inside K.
inline RadiiResult inradius(const VPolytope& k, const VPolytope& c) {
  require_same_dim(k.dim(), c.dim(), "inradius");
  if (k.dim() == 2) return detail::inradius_planar(k, c);
  if (affine_rank(k) < k.dim()) return {Quantity::inradius, 0.0, k[0], {}, {}, false};
  return inradius_vertex_lp(k, c);
}

/// Repeated gauge evaluation for a body with the origin in its interior: a
/// facet maximum in the plane, the gauge LP elsewhere.
class GaugeEvaluator {
 public:
  explicit GaugeEvaluator(const VPolytope& body_in) : body_(prune_redundant(body_in)) {
    detail::require_full_dimensional(body_, "gauge body");
    if (body_.dim() == 2) {
      FacetList f = facets_2d(body_);
      double extent = 0.0;
      for (const Vector& v : body_.vertices()) extent = std::max(extent, norm(v));
      inner_radius_ = std::numeric_limits<double>::infinity();
      for (const Halfspace& h : f.polytope.halfspaces()) inner_radius_ = std::min(inner_radius_, h.offset);
      require(inner_radius_ > 1e-12 * std::max(extent, 1.0), ErrorKind::invalid_gauge,
              "origin is not an interior point of the gauge body");
      facets_ = std::move(f.polytope);
    } else {
      const double margin = interior_margin(body_, Vector(body_.dim()));
      require(margin >= GaugeBody::min_margin, ErrorKind::invalid_gauge,
              "origin is not an interior point of the gauge body");
      inner_radius_ = margin / std::sqrt(static_cast<double>(body_.dim()));
    }
  }

  double operator()(const Vector& x) const {
    if (facets_) {
      double g = 0.0;
      for (const Halfspace& h : facets_->halfspaces()) g = std::max(g, dot(h.normal, x) / h.offset);
      return g;
    }
    if (norm(x) == 0.0) return 0.0;
    return detail::gauge_lp(body_, x);
  }

  /// Radius of a Euclidean ball about the origin inside the body (a lower bound
  /// off the plane), so gauge(x) <= |x| / inner_radius().
  double inner_radius() const noexcept { return inner_radius_; }
  const VPolytope& body() const noexcept { return body_; }

 private:
  VPolytope body_;
  std::optional<HPolytope> facets_;
  double inner_radius_ = 0.0;
};

namespace detail {

struct PairMax {
  double value = 0.0;
  std::size_t i = 0, j = 0;
};

// max over i < j of g(p_i - p_j) for a centered body, ties to the
// lexicographically first pair.
// Pairs are visited by decreasing Euclidean length and skipped once the bound
// |p_i - p_j| / inner_radius falls below the running maximum, which leaves the
// result identical to a full lexicographic scan.
inline PairMax max_pairwise_gauge(const VPolytope& k, const GaugeEvaluator& g) {
  PairMax best;
  const std::size_t n = k.size();
  if (n < 2) return best;
  struct Candidate {
    double length;
    std::size_t i, j;
  };
  std::vector<Candidate> cands;
  cands.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cands.push_back({norm(k[i] - k[j]), i, j});
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length > b.length;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  bool have = false;
  for (const Candidate& cand : cands) {
    const double bound = cand.length / g.inner_radius() * (1.0 + 1e-9);
    if (have && bound < best.value) break;
    const double value = g(k[cand.i] - k[cand.j]);
    if (!have || value > best.value ||
        (value == best.value && std::pair(cand.i, cand.j) < std::pair(best.i, best.j))) {
      best = {value, cand.i, cand.j};
      have = true;
    }
  }
  return best;
}

}  // namespace detail

/// D(K, C) = max over vertex pairs of the norm with unit ball (C - C)/2.
inline RadiiResult diameter(const VPolytope& k, const VPolytope& c) {
  require_same_dim(k.dim(), c.dim(), "diameter");
  detail::require_full_dimensional(c, "gauge body");
  const GaugeEvaluator half_diff(scale(prune_redundant(difference_body(prune_redundant(c))), 0.5));
  if (k.size() == 1) return {Quantity::diameter, 0.0, {}, std::pair<std::size_t, std::size_t>{0, 0}, {}, false};
  const detail::PairMax best = detail::max_pairwise_gauge(k, half_diff);
  return {Quantity::diameter, best.value, {}, std::pair{best.i, best.j}, {}, false};
}

/// A unit normal of a hyperplane containing the affine hull of a
/// lower-dimensional point list.
inline Vector affine_normal(const VPolytope& p) {
  const std::size_t d = p.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 1; i < p.size(); ++i) {
    Vector v = p[i] - p[0];
    for (const Vector& b : basis) v -= dot(v, b) * b;
    if (norm(v) > 1e-10) basis.push_back(normalized(v));
  }
  for (std::size_t axis = 0; axis < d; ++axis) {
    Vector e = Vector::unit(d, axis);
    for (const Vector& b : basis) e -= dot(e, b) * b;
    if (norm(e) > 1e-6) return normalized(e);
  }
  throw Error(ErrorKind::invalid_argument, "point list spans the whole space");
}

/// omega(K, C) = 2 max{t : t (C - C) in K - K}. Both bodies are centered, so
/// the inscribed copy may sit at the origin and the program splits into one
/// ray LP per vertex w of C - C: t* = min_w sup{alpha : alpha w in K - K}.
inline RadiiResult min_width(const VPolytope& k, const VPolytope& c) {
  require_same_dim(k.dim(), c.dim(), "min_width");
  const std::size_t d = k.dim();
  if (affine_rank(k) < d) return {Quantity::min_width, 0.0, {}, {}, affine_normal(k), true};
  const VPolytope a = prune_redundant(difference_body(prune_redundant(k)));
  const VPolytope b = prune_redundant(difference_body(prune_redundant(c)));

  double t_star = std::numeric_limits<double>::infinity();
  std::size_t binding = b.size();
  Vector binding_normal(d);
  for (std::size_t m = 0; m < b.size(); ++m) {
    if (norm(b[m]) == 0.0) continue;
    const RayHit hit = ray_length(a, b[m]);
    if (hit.length < t_star) {
      t_star = hit.length;
      binding = m;
      binding_normal = hit.support_normal;
    }
  }
  require(binding < b.size(), ErrorKind::invalid_argument, "minimum width relative to a point is unbounded");

  Vector direction(d);
  if (d == 2) {
    // The facet of K - K crossed by the binding ray; at a vertex crossing take
    // the adjacent facet with the smaller width ratio.
    const FacetList af = facets_2d(a);
    const Vector& w = b[binding];
    double reach = -std::numeric_limits<double>::infinity();
    for (const Halfspace& h : af.polytope.halfspaces()) reach = std::max(reach, dot(h.normal, w) / h.offset);
    double best_ratio = std::numeric_limits<double>::infinity();
    for (const Halfspace& h : af.polytope.halfspaces()) {
      if (dot(h.normal, w) / h.offset < reach - 1e-9 * std::abs(reach)) continue;
      const double ratio = h.offset / support_value(b, h.normal);
      if (ratio < best_ratio) {
        best_ratio = ratio;
        direction = h.normal;
      }
    }
  } else {
    direction = normalized(binding_normal);
  }
  return {Quantity::min_width, 2.0 * t_star, {}, {}, direction, false};
}

/// x -> 2 R({0, x}, C), evaluated as the gauge of (C - C)/2.
class InducedNorm {
 public:
  explicit InducedNorm(const VPolytope& c)
      : unit_ball_(GaugeBody(scale(prune_redundant(difference_body(prune_redundant(c))), 0.5))) {}

  FunctionalValue operator()(const Vector& x) const { return gauge(unit_ball_, x); }
  const GaugeBody& unit_ball() const noexcept { return unit_ball_; }

 private:
  GaugeBody unit_ball_;
};

inline FunctionalValue induced_norm(const VPolytope& c, const Vector& x) {
  require_same_dim(c.dim(), x.dim(), "induced_norm");
  detail::require_full_dimensional(c, "gauge body");
  return InducedNorm(c)(x);
}

/// For centered K and C: R(K, C) = max over vertices of gamma_C.
inline double symmetric_circumradius(const VPolytope& k, const GaugeBody& c) {
  require_same_dim(k.dim(), c.dim(), "symmetric_circumradius");
  require(is_centered(k), ErrorKind::invalid_argument, "K is not centered");
  require(is_centered(c.body()), ErrorKind::invalid_argument, "gauge body is not centered");
  double best = 0.0;
  for (const Vector& v : k.vertices()) best = std::max(best, gauge(c, v).value);
  return best;
}

// ---------------------------------------------------------------------------
// Witness checks

/// K in x + (R + slack) C, vertex by vertex.
inline bool circumradius_witness_holds(const VPolytope& k, const VPolytope& c, const RadiiResult& res,
                                       double slack = 1e-6) {
  if (!res.center) return false;
  const double lambda = res.value + slack;
  const VPolytope ch = k.dim() == 2 ? hull_2d(c) : prune_redundant(c);
  for (const Vector& v : k.vertices())
    if (!member(ch, (1.0 / lambda) * (v - *res.center), 1e-9)) return false;
  return true;
}

/// x + (r - slack) C in K, vertex by vertex.
inline bool inradius_witness_holds(const VPolytope& k, const VPolytope& c, const RadiiResult& res,
                                   double slack = 1e-6) {
  if (!res.center) return false;
  const double lambda = std::max(res.value - slack, 0.0);
  const VPolytope kh = k.dim() == 2 ? hull_2d(k) : prune_redundant(k);
  for (const Vector& v : c.vertices())
    if (!member(kh, *res.center + lambda * v, 1e-9)) return false;
  return true;
}

/// 2 R({p, q}, C) >= D - slack for the reported pair.
inline bool diameter_witness_holds(const VPolytope& k, const VPolytope& c, const RadiiResult& res,
                                   double slack = 1e-6) {
  if (!res.pair) return false;
  const VPolytope two(k.dim(), {k[res.pair->first], k[res.pair->second]});
  return 2.0 * circumradius(two, c).value >= res.value - slack;
}

/// 2 h_{K-K}(u) / h_{C-C}(u) <= omega + slack for the reported direction.
inline bool min_width_witness_holds(const VPolytope& k, const VPolytope& c, const RadiiResult& res,
                                    double slack = 1e-6) {
  if (!res.direction) return false;
  const Vector& u = *res.direction;
  return 2.0 * width_fn(k, u).value / width_fn(c, u).value <= res.value + slack;
}

// ---------------------------------------------------------------------------
// Closed forms and the chain of diameter representations

/// 2 h_{K-K}(u) / h_{C-C}(u).
inline double width_ratio(const VPolytope& diff_k, const VPolytope& diff_c, const Vector& u) {
  return 2.0 * support_value(diff_k, u) / support_value(diff_c, u);
}

/// Planar closed form of omega: the minimum of 2 h_{K-K} / h_{C-C} over the
/// outward edge normals of K - K.
inline double min_width_facet_sweep(const VPolytope& k, const VPolytope& c) {
  require(k.dim() == 2 && c.dim() == 2, ErrorKind::dimension_mismatch, "facet sweep is planar");
  const FacetList af = facets_2d(difference_body(k));
  if (af.lower_dimensional) return 0.0;
  const VPolytope b = hull_2d(difference_body(c));
  double best = std::numeric_limits<double>::infinity();
  for (const Halfspace& h : af.polytope.halfspaces()) best = std::min(best, width_ratio(af.hull, b, h.normal));
  return best;
}

/// The four representations of minimum width that coincide for centered C:
/// r(K-K, C); 2 inf h_{K-K}/h_{C-C}; inf h_{K-K}/h_C; and the inverse of
/// max{<u, x> : u in (K-K) polar, x in C}. Planar; each route is independent.
struct WidthRepresentations {
  double inradius_of_difference;
  double support_ratio;
  double polar_gauge_ratio;
  double inverse_polar_pairing;
};

inline WidthRepresentations width_representations(const VPolytope& k, const VPolytope& c) {
  require(k.dim() == 2 && c.dim() == 2, ErrorKind::dimension_mismatch, "width representations are planar");
  const VPolytope a = hull_2d(difference_body(k));
  const VPolytope b = hull_2d(difference_body(c));
  const FacetList af = facets_2d(a);
  WidthRepresentations w{};
  w.inradius_of_difference = detail::inradius_planar(a, c).value;
  w.support_ratio = std::numeric_limits<double>::infinity();
  w.polar_gauge_ratio = std::numeric_limits<double>::infinity();
  for (const Halfspace& h : af.polytope.halfspaces()) {
    w.support_ratio = std::min(w.support_ratio, width_ratio(a, b, h.normal));
    w.polar_gauge_ratio = std::min(w.polar_gauge_ratio, support_value(a, h.normal) / support_value(c, h.normal));
  }
  // max <u, x> over u in polar(K-K) is linear in x, so vertices of C suffice.
  const HPolytope pol = polar(a);
  double pairing = 0.0;
  for (const Vector& x : c.vertices()) {
    lp::LinearProgram prog(2);
    prog.set_free(0);
    prog.set_free(1);
    prog.objective = {-x[0], -x[1]};
    for (const Halfspace& h : pol.halfspaces()) prog.add(h.normal.values(), lp::Relation::less_equal, h.offset);
    pairing = std::max(pairing, -lp::solve_or_throw(prog, "polar pairing").value);
  }
  w.inverse_polar_pairing = 1.0 / pairing;
  return w;
}

struct ChainFlags {
  bool a1_eq_a2 = false;
  bool a2_eq_a3 = false;
  bool a3_le_a4 = false;
  bool a4_le_a5 = false;
  bool chord_ratio_matches = false;  ///< a2 = 2 sup l_K / l_C
  bool diameter_le_2R = false;
  bool centered_equality = false;    ///< all five agree when C = -C (vacuous otherwise)
  bool a3_lt_a4 = false;             ///< strictness, informational
  bool a4_lt_a5 = false;             ///< strictness, informational

  bool all_hold() const noexcept {
    return a1_eq_a2 && a2_eq_a3 && a3_le_a4 && a4_le_a5 && chord_ratio_matches && diameter_le_2R &&
           centered_equality;
  }
};

struct ChainReport {
  double a1 = 0.0;  ///< 2 sup h_{K-K} / h_{C-C}
  double a2 = 0.0;  ///< D(K, C) = 2 sup R({x, y}, C)
  double a3 = 0.0;  ///< R(K - K, (C - C)/2)
  double a4 = 0.0;  ///< R(K - K, C)
  double a5 = 0.0;  ///< sup gamma_C(x - y)
  double chord_ratio = 0.0;   ///< 2 sup l_K(u) / l_C(u)
  double two_R = 0.0;         ///< 2 R(K, C)
  bool a1_exact = false;      ///< false: a1 is a sampled lower bound (d != 2)
  bool gauge_centered = false;
  Vector gauge_offset;        ///< translation applied to C before evaluating gamma_C
  double tolerance = 1e-7;
  ChainFlags flags;
};

/// Evaluates every member of the chain independently and records which of the
/// relations a1 = a2 = a3 <= a4 <= a5 hold within tol.
inline ChainReport verify_chain(const VPolytope& k, const VPolytope& c_in, double tol = 1e-7) {
  require_same_dim(k.dim(), c_in.dim(), "verify_chain");
  detail::require_full_dimensional(c_in, "gauge body");
  const std::size_t d = k.dim();
  const VPolytope c = prune_redundant(c_in);
  const VPolytope a = prune_redundant(difference_body(prune_redundant(k)));
  const VPolytope b = prune_redundant(difference_body(c));

  ChainReport rep;
  rep.tolerance = tol;

  std::vector<Vector> dirs;
  if (d == 2) {
    rep.a1_exact = true;
    for (const VPolytope* body : {&a, &b}) {
      const FacetList facets = facets_2d(*body);
      for (const Halfspace& h : facets.polytope.halfspaces()) dirs.push_back(h.normal);
    }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> gauss;
    for (int s = 0; s < 500; ++s) {
      Vector u(d);
      for (std::size_t r = 0; r < d; ++r) u[r] = gauss(rng);
      dirs.push_back(normalized(u));
    }
    for (const Vector& w : b.vertices())
      if (norm(w) > 0.0) dirs.push_back(normalized(w));
  }
  for (const Vector& u : dirs) rep.a1 = std::max(rep.a1, width_ratio(a, b, u));

  rep.a2 = diameter(k, c).value;
  rep.a3 = circumradius(a, scale(b, 0.5)).value;
  rep.a4 = circumradius(a, c).value;

  rep.gauge_offset = Vector(d);
  VPolytope c0 = c;
  try {
    const GaugeEvaluator probe(c0);
    (void)probe;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_gauge) throw;
    rep.gauge_offset = -interior_point(c);
    c0 = translate(c, rep.gauge_offset);
  }
  const GaugeEvaluator gamma_c(c0);
  for (const Vector& v : a.vertices()) rep.a5 = std::max(rep.a5, gamma_c(v));

  for (const Vector& v : a.vertices()) {
    if (norm(v) == 0.0) continue;
    const double lk = ray_length(a, v).length;
    const double lc = ray_length(b, v).length;
    rep.chord_ratio = std::max(rep.chord_ratio, 2.0 * lk / lc);
  }
  rep.two_R = 2.0 * circumradius(k, c).value;
  rep.gauge_centered = is_centered(c, 1e-9);

  ChainFlags& f = rep.flags;
  f.a1_eq_a2 = rep.a1_exact ? std::abs(rep.a1 - rep.a2) <= tol : rep.a1 <= rep.a2 + tol;
  f.a2_eq_a3 = std::abs(rep.a2 - rep.a3) <= tol;
  f.a3_le_a4 = rep.a3 <= rep.a4 + tol;
  f.a4_le_a5 = rep.a4 <= rep.a5 + tol;
  f.chord_ratio_matches = std::abs(rep.chord_ratio - rep.a2) <= tol;
  f.diameter_le_2R = rep.a2 <= rep.two_R + tol;
  // A sampled a1 is only a lower bound and stays out of the equality test.
  std::vector<double> members{rep.a2, rep.a3, rep.a4, rep.a5};
  if (rep.a1_exact) members.push_back(rep.a1);
  const auto [lo, hi] = std::minmax_element(members.begin(), members.end());
  f.centered_equality = !rep.gauge_centered || *hi - *lo <= tol;
  f.a3_lt_a4 = rep.a4 > rep.a3 + tol;
  f.a4_lt_a5 = rep.a5 > rep.a4 + tol;
  return rep;
}

}  // namespace mink

#endif  // MINK_RADII_HPP
