#ifndef MINK_LP_HPP
#define MINK_LP_HPP

// Dense two-phase primal simplex.
//
// The programs solved here are small (at most a few hundred columns and rows),
// so the whole tableau is kept in one row-major buffer. Phase one uses one
// artificial column per equality row plus a single shared artificial column
// that absorbs every inequality row whose right-hand side is negative after
// standardization. Entering columns follow Dantzig's rule until the solver
// stalls on degenerate pivots, after which Bland's rule is used for the rest of
// the solve so that cycling cannot occur.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mink/error.hpp"

namespace mink::lp {

enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

/// minimize objective . x subject to the constraints and per-variable lower
/// bounds (std::nullopt marks a free variable).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<double>> lower_bounds;

  LinearProgram() = default;
  explicit LinearProgram(std::size_t num_variables)
      : objective(num_variables, 0.0), lower_bounds(num_variables, 0.0) {}

  std::size_t num_variables() const noexcept { return objective.size(); }

  void set_free(std::size_t j) { lower_bounds.at(j) = std::nullopt; }

  Constraint& add(std::vector<double> coefficients, Relation relation, double rhs) {
    constraints.push_back({std::move(coefficients), relation, rhs});
    return constraints.back();
  }
};

enum class Status { optimal, infeasible, unbounded, numerical_failure };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::numerical_failure: return "numerical failure";
  }
  return "?";
}

struct Outcome {
  Status status = Status::numerical_failure;
  std::vector<double> solution;  ///< valid when optimal
  double value = std::numeric_limits<double>::quiet_NaN();
  /// Row multipliers y (y_i <= 0 on <= rows, y_i >= 0 on >= rows). When every
  /// variable has lower bound 0, value == sum_i y_i * rhs_i.
  std::vector<double> duals;
  double max_violation = 0.0;  ///< largest constraint or bound violation of solution
  std::size_t iterations = 0;

  bool optimal() const noexcept { return status == Status::optimal; }
};

struct Options {
  double pivot_tolerance = 1e-9;
  double cost_tolerance = 1e-9;
  double feasibility_tolerance = 1e-9;
  std::size_t degenerate_switch = 50;  ///< consecutive degenerate pivots before Bland's rule
  std::size_t max_iterations = 0;      ///< 0 picks a cap from the tableau size
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), width_(cols + 1), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * width_ + c]; }
  double& rhs(std::size_t r) { return data_[r * width_ + cols_]; }
  double rhs(std::size_t r) const { return data_[r * width_ + cols_]; }
  // The objective row sits below the constraint rows and stores reduced costs;
  // its rhs entry holds minus the current objective value.
  double& cost(std::size_t c) { return data_[rows_ * width_ + c]; }
  double cost(std::size_t c) const { return data_[rows_ * width_ + c]; }
  double& cost_rhs() { return data_[rows_ * width_ + cols_]; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    double* prow = &data_[pr * width_];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < width_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * width_];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
  }

 private:
  std::size_t rows_, cols_, width_;
  std::vector<double> data_;
};

enum class LoopResult { optimal, unbounded, stalled };

struct Simplex {
  Tableau& t;
  std::vector<std::size_t>& basis;
  const std::vector<bool>& barred;  // columns that may not enter
  const std::vector<bool>& live;    // rows still in the problem
  const Options& opt;
  std::size_t& iterations;
  std::size_t iteration_cap;

  LoopResult run() {
    bool bland = false;
    std::size_t degenerate = 0;
    while (true) {
      if (iterations >= iteration_cap) return LoopResult::stalled;
      const std::size_t cols = t.cols();
      std::size_t enter = cols;
      double best = -opt.cost_tolerance;
      for (std::size_t c = 0; c < cols; ++c) {
        if (barred[c]) continue;
        const double rc = t.cost(c);
        if (bland) {
          if (rc < -opt.cost_tolerance) {
            enter = c;
            break;
          }
        } else if (rc < best) {
          best = rc;
          enter = c;
        }
      }
      if (enter == cols) return LoopResult::optimal;

      std::size_t leave = t.rows();
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < t.rows(); ++r) {
        if (!live[r]) continue;
        const double a = t.at(r, enter);
        if (a <= opt.pivot_tolerance) continue;
        const double ratio = std::max(t.rhs(r), 0.0) / a;
        if (leave == t.rows() || ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          leave = r;
        } else if (ratio <= best_ratio + 1e-12) {
          // Tie: Bland prefers the smallest basic index, otherwise the larger pivot.
          if (bland ? basis[r] < basis[leave] : a > t.at(leave, enter)) {
            leave = r;
            best_ratio = std::min(best_ratio, ratio);
          }
        }
      }
      if (leave == t.rows()) return LoopResult::unbounded;

      degenerate = best_ratio <= 1e-12 ? degenerate + 1 : 0;
      if (degenerate >= opt.degenerate_switch) bland = true;
      t.pivot(leave, enter);
      basis[leave] = enter;
      ++iterations;
    }
  }
};

}  // namespace detail

/// Solves lp; never throws for infeasible or unbounded programs, only for
/// malformed input (rows of the wrong arity, non-finite data).
inline Outcome solve(const LinearProgram& lp, const Options& opt = {}) {
  const std::size_t n = lp.num_variables();
  require(lp.lower_bounds.size() == n, ErrorKind::invalid_argument,
          "lower bound list does not match objective length");
  for (const auto& con : lp.constraints) {
    require(con.coefficients.size() == n, ErrorKind::invalid_argument,
            "constraint arity " + std::to_string(con.coefficients.size()) + " differs from " +
                std::to_string(n) + " variables");
    require(std::isfinite(con.rhs), ErrorKind::invalid_argument, "non-finite right-hand side");
  }

  // Column layout: structural columns, then one slack per inequality row, one
  // artificial per equality row, and the shared artificial last.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!lp.lower_bounds[j]) neg_col[j] = cols++;
  }

  const std::size_t m = lp.constraints.size();
  std::vector<double> shifted_rhs(m);
  std::vector<double> row_sign(m, 1.0);
  std::vector<std::size_t> aux_col(m);
  std::size_t num_eq = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    double b = con.rhs;
    for (std::size_t j = 0; j < n; ++j)
      if (lp.lower_bounds[j]) b -= con.coefficients[j] * *lp.lower_bounds[j];
    if (con.relation == Relation::greater_equal) row_sign[i] = -1.0;
    if (con.relation == Relation::equal) {
      if (b < 0.0) row_sign[i] = -1.0;
      ++num_eq;
    }
    shifted_rhs[i] = row_sign[i] * b;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].relation != Relation::equal) aux_col[i] = cols++;
  const std::size_t first_artificial = cols;
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].relation == Relation::equal) aux_col[i] = cols++;
  const std::size_t shared_col = cols++;

  detail::Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double a = row_sign[i] * con.coefficients[j];
      require(std::isfinite(a), ErrorKind::invalid_argument, "non-finite coefficient");
      t.at(i, pos_col[j]) = a;
      if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -a;
    }
    t.at(i, aux_col[i]) = 1.0;
    t.rhs(i) = shifted_rhs[i];
    basis[i] = aux_col[i];
  }

  std::vector<bool> is_artificial(cols, false);
  for (std::size_t c = first_artificial; c < cols; ++c) is_artificial[c] = true;
  std::vector<bool> live(m, true);
  Outcome out;
  const std::size_t cap = opt.max_iterations ? opt.max_iterations : 200 * (m + cols) + 1000;

  // Phase one objective: sum of artificial variables, priced out against the basis.
  for (std::size_t c = first_artificial; c < cols; ++c) t.cost(c) = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_artificial[basis[i]]) continue;
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c == cols) t.cost_rhs() -= t.rhs(i);
      else t.cost(c) -= t.at(i, c);
    }
  }
  std::size_t most_negative = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.constraints[i].relation == Relation::equal || t.rhs(i) >= 0.0) continue;
    t.at(i, shared_col) = -1.0;
    if (most_negative == m || t.rhs(i) < t.rhs(most_negative)) most_negative = i;
  }
  if (most_negative != m) {
    t.pivot(most_negative, shared_col);
    basis[most_negative] = shared_col;
    ++out.iterations;
  }

  const std::vector<bool> nothing_barred(cols, false);
  {
    detail::Simplex phase1{t, basis, nothing_barred, live, opt, out.iterations, cap};
    if (phase1.run() == detail::LoopResult::stalled) return out;
  }
  double scale = 1.0;
  for (double b : shifted_rhs) scale = std::max(scale, std::abs(b));
  if (-t.cost_rhs() > opt.feasibility_tolerance * scale * 10.0) {
    out.status = Status::infeasible;
    return out;
  }

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent on the others and are dropped.
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_artificial[basis[i]]) continue;
    std::size_t best_col = first_artificial;
    double best_abs = opt.pivot_tolerance;
    for (std::size_t c = 0; c < first_artificial; ++c) {
      if (std::abs(t.at(i, c)) > best_abs) {
        best_abs = std::abs(t.at(i, c));
        best_col = c;
      }
    }
    if (best_col == first_artificial) {
      live[i] = false;
      continue;
    }
    t.pivot(i, best_col);
    basis[i] = best_col;
    ++out.iterations;
  }

  // Phase two objective.
  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -lp.objective[j];
  }
  for (std::size_t c = 0; c < cols; ++c) t.cost(c) = cost[c];
  t.cost_rhs() = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!live[i]) continue;
    const double cb = cost[basis[i]];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c < cols; ++c) t.cost(c) -= cb * t.at(i, c);
    t.cost_rhs() -= cb * t.rhs(i);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (live[i]) continue;
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c == cols) t.rhs(i) = 0.0;
      else t.at(i, c) = 0.0;
    }
  }

  {
    detail::Simplex phase2{t, basis, is_artificial, live, opt, out.iterations, cap};
    const auto result = phase2.run();
    if (result == detail::LoopResult::stalled) return out;
    if (result == detail::LoopResult::unbounded) {
      out.status = Status::unbounded;
      return out;
    }
  }

  std::vector<double> column_value(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (live[i]) column_value[basis[i]] = std::max(t.rhs(i), 0.0);

  out.solution.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double v = column_value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) v -= column_value[neg_col[j]];
    else v += *lp.lower_bounds[j];
    out.solution[j] = v;
  }
  out.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.solution[j];

  // y_i from the reduced cost of the row's identity column (slack or artificial).
  out.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) out.duals[i] = row_sign[i] * (cost[aux_col[i]] - t.cost(aux_col[i]));

  double violation = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (lp.lower_bounds[j]) violation = std::max(violation, *lp.lower_bounds[j] - out.solution[j]);
  for (const auto& con : lp.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) lhs += con.coefficients[j] * out.solution[j];
    const double gap = lhs - con.rhs;
    switch (con.relation) {
      case Relation::less_equal: violation = std::max(violation, gap); break;
      case Relation::greater_equal: violation = std::max(violation, -gap); break;
      case Relation::equal: violation = std::max(violation, std::abs(gap)); break;
    }
  }
  out.max_violation = violation;
  out.status = Status::optimal;
  return out;
}

/// solve() for callers that cannot continue without an optimum.
inline Outcome solve_or_throw(const LinearProgram& lp, const std::string& context) {
  Outcome out = solve(lp);
  require(out.optimal(), ErrorKind::numerical_failure,
          context + ": LP " + to_string(out.status));
  return out;
}

}  // namespace mink::lp

#endif  // MINK_LP_HPP
