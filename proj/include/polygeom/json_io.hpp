#pragma once

// JSON encodings shared by the CLI and the campaign runner. Complex numbers
// are two-element arrays [re, im]; documents carry "schema": "polygeom/1".

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "polygeom/coincidence.hpp"
#include "polygeom/derivative_bound.hpp"
#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/regions.hpp"
#include "polygeom/rootfind.hpp"

namespace polygeom::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "polygeom/1";

inline json encode(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex decode_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::InvalidInput, "complex numbers are [re, im] arrays, got " + j.dump());
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(z)) throw Error(ErrorKind::InvalidInput, "non-finite complex number");
  return z;
}

inline json encode_points(std::span<const Complex> pts) {
  json a = json::array();
  for (auto z : pts) a.push_back(encode(z));
  return a;
}

inline PointSet decode_points(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of [re, im] points");
  PointSet out;
  for (const auto& e : j) out.push_back(decode_complex(e));
  return out;
}

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline double number(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number()) throw Error(ErrorKind::InvalidInput, std::string("field \"") + name + "\" must be a number");
  return v.get<double>();
}

inline int integer(const json& j, const char* name) {
  const auto& v = field(j, name);
  if (!v.is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

inline void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
    throw Error(ErrorKind::InvalidInput, "unsupported schema " + j.at("schema").dump());
}

// ---- Polynomial: {"coeffs": [[re,im], ...]} ascending

inline json encode(const Polynomial& p) { return json{{"coeffs", encode_points(p.coeffs())}}; }

inline Polynomial decode_polynomial(const json& j) {
  check_schema(j);
  return Polynomial(decode_points(field(j, "coeffs")));
}

// ---- Points: {"points": [...]}, or a bare array

inline PointSet decode_point_file(const json& j) {
  check_schema(j);
  return j.is_array() ? decode_points(j) : decode_points(field(j, "points"));
}

// ---- Regions

inline json encode(const CircularRegion& s) {
  json j{{"kind", std::string(s.kind())}, {"closed", s.closed()}};
  std::visit(
      [&j](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, region::HalfPlane>) {
          j["direction"] = encode(v.direction);
          j["offset"] = v.offset;
        } else {
          j["center"] = encode(v.center);
          j["radius"] = v.radius;
        }
      },
      s.shape());
  return j;
}

inline CircularRegion decode_region(const json& j) {
  check_schema(j);
  const auto& kind = field(j, "kind");
  const bool closed = j.value("closed", true);
  if (kind == "disk") return CircularRegion::disk(decode_complex(field(j, "center")), number(j, "radius"), closed);
  if (kind == "exterior") return CircularRegion::exterior(decode_complex(field(j, "center")), number(j, "radius"), closed);
  if (kind == "halfplane") return CircularRegion::half_plane(decode_complex(field(j, "direction")), number(j, "offset"), closed);
  throw Error(ErrorKind::InvalidInput, "unknown region kind " + kind.dump());
}

inline json encode(const Disk& d) { return json{{"center", encode(d.center)}, {"radius", d.radius}}; }

inline Disk decode_disk(const json& j) { return {decode_complex(field(j, "center")), number(j, "radius")}; }

// ---- Multiaffine: {"n": int, "E": [[re,im], ...]} with optional "m"

inline json encode(const SymmetricMultiaffine& P) {
  return json{{"n", P.n()}, {"E", encode_points(P.E())}, {"m", P.degree()}};
}

inline SymmetricMultiaffine decode_multiaffine(const json& j) {
  check_schema(j);
  std::optional<int> m;
  if (j.contains("m")) m = integer(j, "m");
  return SymmetricMultiaffine(integer(j, "n"), decode_points(field(j, "E")), m);
}

// ---- Root sets

inline json encode(const RootSet& r) {
  json clusters = json::array();
  for (const auto& c : r.clusters) clusters.push_back({{"representative", encode(c.representative)}, {"multiplicity", c.multiplicity}});
  return json{{"roots", encode_points(r.roots)},
              {"residuals", r.residuals},
              {"clusters", clusters},
              {"iterations", r.iterations},
              {"tol", r.tol}};
}

// ---- Derivative-zero instances

inline json encode(const Theorem2Instance& inst) {
  return json{{"inner_zeros", encode_points(inst.inner_zeros)}, {"outer_zero", encode(inst.outer_zero)}, {"disk", encode(inst.disk)}};
}

inline Theorem2Instance decode_theorem2_instance(const json& j) {
  check_schema(j);
  return {decode_points(field(j, "inner_zeros")), decode_complex(field(j, "outer_zero")), decode_disk(field(j, "disk"))};
}

inline json encode(const Theorem2Report& r) {
  return json{{"n", r.n},
              {"k", r.k},
              {"bound", r.bound},
              {"vacuous", r.vacuous},
              {"derivative_roots", encode(r.derivative_roots)},
              {"count_in_disk", r.count_in_disk},
              {"satisfied", r.satisfied},
              {"mean_residual", r.mean_residual},
              {"outer_inside", r.outer_inside},
              {"outside_structure_ok", r.outside_structure_ok}};
}

// ---- Files

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

// Adds the schema tag to objects that lack one.
inline json with_schema(json j) {
  if (j.is_object() && !j.contains("schema")) j["schema"] = kSchema;
  return j;
}

}  // namespace polygeom::json_io
