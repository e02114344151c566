#pragma once

// Circular regions (disk, half-plane, exterior of a disk; open or closed),
// plus the planar helpers used around them: smallest enclosing disk, convex
// hull and point-to-hull distance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"

namespace polygeom {

inline constexpr double kMembershipTol = 1e-9;

struct Disk {
  Complex center;
  double radius = 0.0;
};

namespace region {

struct Disk {
  Complex center;
  double radius = 1.0;
};

// { z : Re(z conj(direction)) <= offset }. The complement of a half-plane is
// again a half-plane (flip direction and offset), so there is no separate
// exterior variant for it.
struct HalfPlane {
  Complex direction{1.0, 0.0};
  double offset = 0.0;
};

struct ExteriorDisk {
  Complex center;
  double radius = 1.0;
};

}  // namespace region

class CircularRegion {
 public:
  using Shape = std::variant<region::Disk, region::HalfPlane, region::ExteriorDisk>;

  CircularRegion(Shape shape, bool closed) : shape_(shape), closed_(closed) { validate(); }

  static CircularRegion disk(Complex center, double radius, bool closed = true) {
    return {region::Disk{center, radius}, closed};
  }
  static CircularRegion exterior(Complex center, double radius, bool closed = true) {
    return {region::ExteriorDisk{center, radius}, closed};
  }
  // Direction is normalized here; a zero direction is rejected.
  static CircularRegion half_plane(Complex direction, double offset, bool closed = true) {
    const double len = std::abs(direction);
    if (!(len > 0.0)) throw Error(ErrorKind::InvalidInput, "half-plane direction must be nonzero");
    return {region::HalfPlane{direction / len, offset}, closed};
  }

  const Shape& shape() const noexcept { return shape_; }
  bool closed() const noexcept { return closed_; }
  std::string_view kind() const noexcept {
    switch (shape_.index()) {
      case 0: return "disk";
      case 1: return "halfplane";
      default: return "exterior";
    }
  }

  /// Negative inside, zero on the boundary, positive outside.
  double signed_distance(Complex z) const {
    return std::visit(
        [z](const auto& s) -> double {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, region::Disk>) return std::abs(z - s.center) - s.radius;
          else if constexpr (std::is_same_v<T, region::ExteriorDisk>) return s.radius - std::abs(z - s.center);
          else return (z * std::conj(s.direction)).real() - s.offset;
        },
        shape_);
  }

  /// Membership with a boundary band of tol (1 + |z|): closed regions accept
  /// the band, open regions reject it.
  bool contains(Complex z, double tol = kMembershipTol) const {
    const double band = tol * (1.0 + std::abs(z));
    const double d = signed_distance(z);
    return closed_ ? d <= band : d < -band;
  }

  bool is_convex() const noexcept { return !std::holds_alternative<region::ExteriorDisk>(shape_); }

  // A point that belongs to the region: disk centers, the foot of the
  // half-plane normal, or the point of the exterior nearest the origin side.
  Complex representative() const {
    return std::visit(
        [](const auto& s) -> Complex {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, region::Disk>) return s.center;
          else if constexpr (std::is_same_v<T, region::ExteriorDisk>) return s.center + Complex{s.radius, 0.0};
          else return s.direction * s.offset;
        },
        shape_);
  }

 private:
  void validate() const {
    std::visit(
        [](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, region::HalfPlane>) {
            if (!is_finite(s.direction) || !std::isfinite(s.offset) || std::abs(std::abs(s.direction) - 1.0) > 1e-12)
              throw Error(ErrorKind::InvalidInput, "half-plane needs a finite unit direction and finite offset");
          } else {
            if (!is_finite(s.center) || !std::isfinite(s.radius) || !(s.radius > 0.0))
              throw Error(ErrorKind::InvalidInput, "disk regions need a finite center and radius > 0");
          }
        },
        shape_);
  }

  Shape shape_;
  bool closed_;
};

inline bool contains(const CircularRegion& s, Complex z, double tol = kMembershipTol) { return s.contains(z, tol); }
inline bool is_convex(const CircularRegion& s) { return s.is_convex(); }

namespace detail {

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

inline Disk disk_from_two(Complex a, Complex b) { return {(a + b) / 2.0, std::abs(a - b) / 2.0}; }

inline Disk disk_from_three(Complex a, Complex b, Complex c) {
  const Complex ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) <= 1e-300) {
    // Collinear: the farthest pair spans the disk.
    Disk best = disk_from_two(a, b);
    for (const Disk& cand : {disk_from_two(a, c), disk_from_two(b, c)})
      if (cand.radius > best.radius) best = cand;
    return best;
  }
  const double ab2 = std::norm(ab), ac2 = std::norm(ac);
  const Complex off{(ac.imag() * ab2 - ab.imag() * ac2) / d, (ab.real() * ac2 - ac.real() * ab2) / d};
  const Complex center = a + off;
  return {center, std::max({std::abs(center - a), std::abs(center - b), std::abs(center - c)})};
}

inline bool disk_holds(const Disk& d, Complex p) { return std::abs(p - d.center) <= d.radius * (1.0 + 1e-14) + 1e-300; }

}  // namespace detail

/// Minimal closed disk around the points (Welzl's incremental scheme over a
/// fixed pseudo-random permutation, so the result is reproducible).
inline Disk smallest_enclosing_disk(std::span<const Complex> input) {
  if (input.empty()) throw Error(ErrorKind::InvalidInput, "smallest_enclosing_disk: empty point set");
  std::vector<Complex> pts(input.begin(), input.end());
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = pts.size(); i > 1; --i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(pts[i - 1], pts[(state >> 33) % i]);
  }

  Disk d{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (detail::disk_holds(d, pts[i])) continue;
    d = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (detail::disk_holds(d, pts[j])) continue;
      d = detail::disk_from_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k)
        if (!detail::disk_holds(d, pts[k])) d = detail::disk_from_three(pts[i], pts[j], pts[k]);
    }
  }
  // Certify: grow to the farthest point so containment holds exactly.
  for (auto p : pts) d.radius = std::max(d.radius, std::abs(p - d.center));
  return d;
}

/// Convex hull, counterclockwise from the lowest-leftmost vertex; collinear
/// and duplicate points are dropped.
inline std::vector<Complex> convex_hull(std::span<const Complex> input) {
  if (input.empty()) throw Error(ErrorKind::InvalidInput, "convex_hull: empty point set");
  std::vector<Complex> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && detail::cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && detail::cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline double segment_distance(Complex a, Complex b, Complex z) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

/// 0 inside or on the hull, otherwise the Euclidean distance to it.
inline double hull_distance(std::span<const Complex> hull, Complex z) {
  if (hull.empty()) throw Error(ErrorKind::InvalidInput, "hull_distance: empty hull");
  if (hull.size() == 1) return std::abs(z - hull[0]);
  if (hull.size() == 2) return segment_distance(hull[0], hull[1], z);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i], b = hull[(i + 1) % hull.size()];
    if (detail::cross(b - a, z - a) < 0.0) inside = false;
    best = std::min(best, segment_distance(a, b, z));
  }
  return inside ? 0.0 : best;
}

}  // namespace polygeom
