#ifndef MINK_JSON_IO_HPP
#define MINK_JSON_IO_HPP

// JSON encodings of polytopes, functional values and radii reports.
//
//   polytope:  {"dim": d, "vertices": [[x1, ..., xd], ...]}
//   halfspaces: {"dim": d, "halfspaces": [{"normal": [...], "offset": b}, ...]}
//
// Vertex coordinates are written with full round-trip precision; report values
// are rounded to 9 significant digits. Keys keep insertion order.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mink/error.hpp"
#include "mink/functionals.hpp"
#include "mink/polytope.hpp"
#include "mink/radii.hpp"

namespace mink::io {

using Json = nlohmann::ordered_json;

/// Rounds to 9 significant digits so that the serialized text is stable.
inline double report_value(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

inline Json vector_json(const Vector& v, bool rounded) {
  Json arr = Json::array();
  for (double c : v) arr.push_back(rounded ? report_value(c) : c);
  return arr;
}

namespace detail {

inline double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be finite");
  return v;
}

inline Vector vector_from(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim)
    throw Error(ErrorKind::invalid_argument, std::string(what) + " must be an array of " + std::to_string(dim) + " numbers");
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = finite_number(j[i], what);
  return v;
}

inline std::size_t dim_from(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw Error(ErrorKind::invalid_argument, "\"dim\" must be a positive integer");
  return static_cast<std::size_t>(j["dim"].get<long long>());
}

}  // namespace detail

inline Json to_json(const VPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const Vector& v : p.vertices()) verts.push_back(vector_json(v, false));
  j["vertices"] = std::move(verts);
  return j;
}

inline VPolytope vpolytope_from_json(const Json& j) {
  const std::size_t dim = detail::dim_from(j);
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw Error(ErrorKind::invalid_argument, "\"vertices\" must be a non-empty array");
  std::vector<Vector> verts;
  for (const Json& v : j["vertices"]) verts.push_back(detail::vector_from(v, dim, "vertex"));
  return VPolytope(dim, std::move(verts));
}

inline Json to_json(const HPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json hs = Json::array();
  for (const Halfspace& h : p.halfspaces()) {
    Json e;
    e["normal"] = vector_json(h.normal, false);
    e["offset"] = h.offset;
    hs.push_back(std::move(e));
  }
  j["halfspaces"] = std::move(hs);
  return j;
}

inline HPolytope hpolytope_from_json(const Json& j) {
  const std::size_t dim = detail::dim_from(j);
  if (!j.contains("halfspaces") || !j["halfspaces"].is_array())
    throw Error(ErrorKind::invalid_argument, "\"halfspaces\" must be an array");
  std::vector<Halfspace> hs;
  for (const Json& e : j["halfspaces"]) {
    if (!e.is_object() || !e.contains("normal") || !e.contains("offset"))
      throw Error(ErrorKind::invalid_argument, "halfspace needs \"normal\" and \"offset\"");
    hs.push_back({detail::vector_from(e["normal"], dim, "normal"), detail::finite_number(e["offset"], "offset")});
  }
  return HPolytope(dim, std::move(hs));
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
}

inline VPolytope read_vpolytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return vpolytope_from_json(parse_text(buf.str()));
}

inline Json to_json(const FunctionalValue& f) {
  Json j;
  j["value"] = report_value(f.value);
  j["witness"] = f.witness ? vector_json(*f.witness, true) : Json(nullptr);
  return j;
}

inline Json to_json(const RadiiResult& r) {
  Json j;
  j["value"] = report_value(r.value);
  switch (r.quantity) {
    case Quantity::circumradius:
    case Quantity::inradius:
      j["center"] = r.center ? vector_json(*r.center, true) : Json(nullptr);
      break;
    case Quantity::diameter:
      j["pair"] = r.pair ? Json::array({r.pair->first, r.pair->second}) : Json(nullptr);
      break;
    case Quantity::min_width:
      j["direction"] = r.direction ? vector_json(*r.direction, true) : Json(nullptr);
      if (r.degenerate) j["degenerate"] = true;
      break;
  }
  return j;
}

inline Json to_json(const ChainReport& c) {
  Json j;
  j["a1"] = report_value(c.a1);
  j["a2"] = report_value(c.a2);
  j["a3"] = report_value(c.a3);
  j["a4"] = report_value(c.a4);
  j["a5"] = report_value(c.a5);
  j["chord_ratio"] = report_value(c.chord_ratio);
  j["two_R"] = report_value(c.two_R);
  j["a1_exact"] = c.a1_exact;
  j["gauge_centered"] = c.gauge_centered;
  j["gauge_offset"] = vector_json(c.gauge_offset, true);
  j["tolerance"] = c.tolerance;
  Json f;
  f["a1_eq_a2"] = c.flags.a1_eq_a2;
  f["a2_eq_a3"] = c.flags.a2_eq_a3;
  f["a3_le_a4"] = c.flags.a3_le_a4;
  f["a4_le_a5"] = c.flags.a4_le_a5;
  f["chord_ratio_matches"] = c.flags.chord_ratio_matches;
  f["diameter_le_2R"] = c.flags.diameter_le_2R;
  f["centered_equality"] = c.flags.centered_equality;
  f["a3_lt_a4"] = c.flags.a3_lt_a4;
  f["a4_lt_a5"] = c.flags.a4_lt_a5;
  f["all_hold"] = c.flags.all_hold();
  j["flags"] = std::move(f);
  return j;
}

}  // namespace mink::io

#endif  // MINK_JSON_IO_HPP
