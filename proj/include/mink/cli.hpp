#ifndef MINK_CLI_HPP
#define MINK_CLI_HPP

// Command-line front end. Kept in a header so tests can drive it in-process.
//
//   body   --kind <k> [--dim d] [--n n] [--scale s]
//   eval   --body K.json --fn support|width|gauge|chord|radius --dir "x,y,..."
//   radii  --body K.json --gauge C.json [--quantity R|r|D|omega|all]
//   verify --body K.json --gauge C.json [--tol t]
//   approx --example reuleaux --n-list 24,48,96,192
//
// Exit status: 0 success, 1 malformed input, 2 failed verification,
// 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mink/bodies.hpp"
#include "mink/error.hpp"
#include "mink/functionals.hpp"
#include "mink/json_io.hpp"
#include "mink/radii.hpp"

namespace mink::cli {

enum ExitCode : int { ok = 0, bad_input = 1, verification_failed = 2, numerical = 3 };

inline Vector parse_direction(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, "bad direction component '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(v))
      throw Error(ErrorKind::invalid_argument, "bad direction component '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorKind::invalid_argument, "empty direction");
  return Vector(std::move(values));
}

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

/// Reuleaux study: R(K-K, C), r(K-K, C), D(K, C), omega(K, C) for C the
/// sampled Reuleaux triangle and K = -C, against the values of the smooth body.
/// For even n the arc midpoints are samples and the four values come out exact
/// up to rounding; disc_gap = 2 sqrt(3) - min_u h_{K-K}(u) measures how far K - K
/// is from the disc 2 sqrt(3) B and shrinks like n^-2 for every n.
struct ReuleauxRow {
  std::size_t n;
  double circumradius, inradius, diameter, min_width, disc_gap;

  double max_error() const;
};

inline constexpr double reuleaux_R_exact = (3.0 + std::numbers::sqrt3) / 2.0;
inline constexpr double reuleaux_r_exact = std::numbers::sqrt3;
inline constexpr double reuleaux_D_exact = 2.0;
inline constexpr double reuleaux_omega_exact = 2.0;

inline constexpr double reuleaux_disc_radius = 2.0 * std::numbers::sqrt3;

inline double ReuleauxRow::max_error() const {
  return std::max({std::abs(circumradius - reuleaux_R_exact), std::abs(inradius - reuleaux_r_exact),
                   std::abs(diameter - reuleaux_D_exact), std::abs(min_width - reuleaux_omega_exact), disc_gap});
}

inline ReuleauxRow reuleaux_row(std::size_t n) {
  const VPolytope c = make_body({BodyKind::reuleaux_triangle, 2, n, 1.0});
  const VPolytope k = reflect(c);
  const VPolytope diff = hull_2d(difference_body(k));
  // The supporting lines of a polygon are its edges, so the gap is attained at a facet.
  double min_offset = reuleaux_disc_radius;
  const FacetList facets = facets_2d(diff);
  for (const Halfspace& h : facets.polytope.halfspaces()) min_offset = std::min(min_offset, h.offset);
  return {n,
          circumradius(diff, c).value,
          inradius(diff, c).value,
          diameter(k, c).value,
          min_width(k, c).value,
          reuleaux_disc_radius - min_offset};
}

inline io::Json radii_report(const VPolytope& k, const VPolytope& c, const std::string& quantity) {
  io::Json j;
  const bool all = quantity == "all";
  if (all || quantity == "R") j["R"] = io::to_json(circumradius(k, c));
  if (all || quantity == "r") j["r"] = io::to_json(inradius(k, c));
  if (all || quantity == "D") j["D"] = io::to_json(diameter(k, c));
  if (all || quantity == "omega") j["omega"] = io::to_json(min_width(k, c));
  if (all) j["chain"] = io::to_json(verify_chain(k, c));
  return j;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal radii, diameter and minimum width of polytopes relative to a gauge body", "mink"};
  app.require_subcommand(1);

  std::string kind;
  std::size_t dim = 2, n = 96;
  double scale_factor = 1.0;
  auto* body_cmd = app.add_subcommand("body", "emit a reference body as polytope JSON");
  body_cmd->add_option("--kind", kind, "cube|cross_polytope|simplex|segment|regular_ngon|reuleaux_triangle|"
                                       "paper_triangle|paper_square")->required();
  body_cmd->add_option("--dim", dim, "dimension")->check(CLI::PositiveNumber);
  body_cmd->add_option("--n", n, "polygon vertices or samples per Reuleaux arc");
  body_cmd->add_option("--scale", scale_factor, "scale factor");

  std::string body_path, gauge_path, fn, dir_text, quantity = "all";
  double tol = 1e-7;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a functional of one body");
  eval_cmd->add_option("--body", body_path, "polytope JSON")->required();
  eval_cmd->add_option("--fn", fn, "support|width|gauge|chord|radius")
      ->required()
      ->check(CLI::IsMember({"support", "width", "gauge", "chord", "radius"}));
  eval_cmd->add_option("--dir", dir_text, "comma-separated direction or point")->required();

  auto* radii_cmd = app.add_subcommand("radii", "circumradius, inradius, diameter, minimum width");
  radii_cmd->add_option("--body", body_path, "polytope JSON for K")->required();
  radii_cmd->add_option("--gauge", gauge_path, "polytope JSON for C")->required();
  radii_cmd->add_option("--quantity", quantity, "R|r|D|omega|all")
      ->check(CLI::IsMember({"R", "r", "D", "omega", "all"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the chain of diameter representations");
  verify_cmd->add_option("--body", body_path, "polytope JSON for K")->required();
  verify_cmd->add_option("--gauge", gauge_path, "polytope JSON for C")->required();
  verify_cmd->add_option("--tol", tol, "comparison tolerance")->check(CLI::NonNegativeNumber);

  std::string example, n_list = "24,48,96,192";
  auto* approx_cmd = app.add_subcommand("approx", "convergence study for a curved worked example");
  approx_cmd->add_option("--example", example, "reuleaux")->required()->check(CLI::IsMember({"reuleaux"}));
  approx_cmd->add_option("--n-list", n_list, "comma-separated sample counts");

  std::vector<const char*> argv{"mink"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return bad_input;
  }

  try {
    if (*body_cmd) {
      const auto k = parse_body_kind(kind);
      if (!k) throw Error(ErrorKind::invalid_argument, "unknown body kind '" + kind + "'");
      out << io::to_json(make_body({*k, dim, n, scale_factor})).dump(2) << "\n";
      return ok;
    }
    if (*eval_cmd) {
      const VPolytope k = io::read_vpolytope(body_path);
      const Vector u = parse_direction(dir_text);
      FunctionalValue value;
      if (fn == "support") value = support(k, u);
      else if (fn == "width") value = width_fn(k, u);
      else if (fn == "gauge") value = gauge(GaugeBody(k), u);
      else if (fn == "chord") value = max_chord(k, u);
      else value = radius_fn(k, u);
      io::Json j;
      j["fn"] = fn;
      j["dir"] = io::vector_json(u, true);
      const io::Json body = io::to_json(value);
      for (const auto& item : body.items()) j[item.key()] = item.value();
      out << j.dump(2) << "\n";
      return ok;
    }
    if (*radii_cmd) {
      const VPolytope k = io::read_vpolytope(body_path);
      const VPolytope c = io::read_vpolytope(gauge_path);
      out << radii_report(k, c, quantity).dump(2) << "\n";
      return ok;
    }
    if (*verify_cmd) {
      const VPolytope k = io::read_vpolytope(body_path);
      const VPolytope c = io::read_vpolytope(gauge_path);
      const ChainReport rep = verify_chain(k, c, tol);
      out << io::to_json(rep).dump(2) << "\n";
      if (!rep.flags.all_hold()) {
        err << "verification failed: chain relations violated at tolerance " << tol << "\n";
        return verification_failed;
      }
      return ok;
    }
    if (*approx_cmd) {
      std::vector<std::size_t> ns;
      for (double v : parse_direction(n_list)) {
        if (v < 2 || v != std::floor(v)) throw Error(ErrorKind::invalid_argument, "sample counts must be integers >= 2");
        ns.push_back(static_cast<std::size_t>(v));
      }
      out << "n,R,r,D,omega,err_R,err_r,err_D,err_omega\n";
      for (std::size_t count : ns) {
        const ReuleauxRow row = reuleaux_row(count);
        out << row.n << ',' << format_number(row.circumradius) << ',' << format_number(row.inradius) << ','
            << format_number(row.diameter) << ',' << format_number(row.min_width) << ','
            << format_number(std::abs(row.circumradius - reuleaux_R_exact)) << ','
            << format_number(std::abs(row.inradius - reuleaux_r_exact)) << ','
            << format_number(std::abs(row.diameter - reuleaux_D_exact)) << ','
            << format_number(std::abs(row.min_width - reuleaux_omega_exact)) << "\n";
      }
      return ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::numerical_failure ? numerical : bad_input;
  }
  return bad_input;
}

}  // namespace mink::cli

#endif  // MINK_CLI_HPP
