#pragma once

// Static SVG scatter plots of point sets with region outlines. Output is a
// pure function of the input, formatted with fixed precision.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/regions.hpp"

namespace polygeom {

struct LabeledPoints {
  std::string label;
  PointSet points;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_svg(const std::vector<LabeledPoints>& sets, const std::vector<CircularRegion>& regions) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  constexpr double kSize = 480.0, kMargin = 24.0;

  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  auto grow = [&](Complex z, double r) {
    lo_x = std::min(lo_x, z.real() - r);
    hi_x = std::max(hi_x, z.real() + r);
    lo_y = std::min(lo_y, z.imag() - r);
    hi_y = std::max(hi_y, z.imag() + r);
  };
  for (const auto& s : sets)
    for (auto z : s.points) grow(z, 0.0);
  for (const auto& reg : regions)
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, region::HalfPlane>) grow(v.direction * v.offset, 0.0);
          else grow(v.center, v.radius);
        },
        reg.shape());
  if (lo_x > hi_x) lo_x = lo_y = -1.0, hi_x = hi_y = 1.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9}) * 1.1;
  const double cx = (lo_x + hi_x) / 2.0, cy = (lo_y + hi_y) / 2.0;
  const double scale = (kSize - 2.0 * kMargin) / span;
  auto px = [&](double x) { return kSize / 2.0 + (x - cx) * scale; };
  auto py = [&](double y) { return kSize / 2.0 - (y - cy) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(kSize) + "\" height=\"" + detail::fmt(kSize) +
         "\" viewBox=\"0 0 " + detail::fmt(kSize) + " " + detail::fmt(kSize) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& reg : regions) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, region::HalfPlane>) {
            // Boundary line through direction*offset, drawn across the view.
            const Complex foot = v.direction * v.offset;
            const Complex along = v.direction * Complex{0.0, 1.0} * span;
            const Complex a = foot - along, b = foot + along;
            out += "<line x1=\"" + detail::fmt(px(a.real())) + "\" y1=\"" + detail::fmt(py(a.imag())) + "\" x2=\"" +
                   detail::fmt(px(b.real())) + "\" y2=\"" + detail::fmt(py(b.imag())) +
                   "\" stroke=\"#555\" stroke-width=\"1.5\"" + (reg.closed() ? "" : " stroke-dasharray=\"2 3\"") + "/>\n";
          } else {
            const bool exterior = std::is_same_v<T, region::ExteriorDisk>;
            out += "<circle cx=\"" + detail::fmt(px(v.center.real())) + "\" cy=\"" + detail::fmt(py(v.center.imag())) +
                   "\" r=\"" + detail::fmt(v.radius * scale) + "\" fill=\"none\" stroke=\"#555\" stroke-width=\"1.5\"" +
                   (exterior ? " stroke-dasharray=\"6 4\"" : (reg.closed() ? "" : " stroke-dasharray=\"2 3\"")) + "/>\n";
          }
        },
        reg.shape());
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    for (auto z : sets[i].points)
      out += "<circle cx=\"" + detail::fmt(px(z.real())) + "\" cy=\"" + detail::fmt(py(z.imag())) + "\" r=\"3.5\" fill=\"" +
             color + "\"/>\n";
    out += "<text x=\"8\" y=\"" + detail::fmt(16.0 + 14.0 * static_cast<double>(i)) + "\" font-size=\"12\" fill=\"" + color +
           "\">" + detail::escape_xml(sets[i].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

inline void emit_svg(const std::vector<LabeledPoints>& sets, const std::vector<CircularRegion>& regions, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  f << render_svg(sets, regions);
  if (!f) throw Error(ErrorKind::InvalidInput, "write failed for " + path);
}

}  // namespace polygeom
