#pragma once

// Zeros of higher derivatives near a cluster of zeros.
//
// If a closed disk D centered at the mean of n-1 zeros of a degree-n
// polynomial p contains those zeros, then D contains at least
// floor((n - 2k + 1) / 2) zeros of p^(k). This header verifies that claim on
// concrete instances together with the closed form it rests on:
//
//   d^k/dz^k [z (z - y)^(n-1)] = k! C(n-1, k) z (z - y)^(n-k-1) + k! C(n-1, k-1) (z - y)^(n-k)
//                             = k! C(n, k) (z - y)^(n-k-1) (z - (k/n) y).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/random.hpp"
#include "polygeom/regions.hpp"
#include "polygeom/rootfind.hpp"

namespace polygeom {

struct Theorem2Instance {
  PointSet inner_zeros;  // z_1 .. z_{n-1}
  Complex outer_zero;    // z_n
  Disk disk;

  int n() const noexcept { return static_cast<int>(inner_zeros.size()) + 1; }
  PointSet all_zeros() const {
    PointSet z = inner_zeros;
    z.push_back(outer_zero);
    return z;
  }
};

struct Theorem2Report {
  int n = 0;
  int k = 0;
  int bound = 0;
  bool vacuous = false;  // the bracket is <= 0
  RootSet derivative_roots;
  int count_in_disk = 0;
  bool satisfied = false;
  double mean_residual = 0.0;
  bool outer_inside = false;
  // Every derivative zero w outside D has z_n + (n/k)(w - z_n) in D.
  bool outside_structure_ok = true;
  double outside_structure_excess = 0.0;
};

/// max(0, floor((n - 2k + 1) / 2)) for 1 <= k <= n - 1.
inline int theorem2_bound(int n, int k) {
  if (k < 1 || k > n - 1)
    throw Error(ErrorKind::InvalidInput, "theorem2_bound: need 1 <= k <= n-1, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  const int num = n - 2 * k + 1;
  return num <= 0 ? 0 : num / 2;
}

inline Complex mean(std::span<const Complex> pts) {
  Complex s = 0.0;
  for (auto z : pts) s += z;
  return s / static_cast<double>(pts.size());
}

/// Throws InvalidInstance unless the disk is centered at the mean of the
/// inner zeros and holds all of them.
inline void validate(const Theorem2Instance& inst, double membership_tol = kMembershipTol) {
  if (inst.inner_zeros.size() < 2) throw Error(ErrorKind::InvalidInstance, "need at least two inner zeros (n >= 3)");
  if (!(inst.disk.radius > 0.0)) throw Error(ErrorKind::InvalidInstance, "disk radius must be positive");
  const Complex c = mean(inst.inner_zeros);
  const double drift = std::abs(c - inst.disk.center);
  if (drift > 1e-12 * (1.0 + std::abs(inst.disk.center) + inst.disk.radius))
    throw Error(ErrorKind::InvalidInstance, "disk center is " + std::to_string(drift) + " away from the mean of the inner zeros");
  const auto region = CircularRegion::disk(inst.disk.center, inst.disk.radius, true);
  for (auto z : inst.inner_zeros)
    if (!region.contains(z, membership_tol))
      throw Error(ErrorKind::InvalidInstance, "inner zero outside the disk, signed distance " + std::to_string(region.signed_distance(z)));
}

struct Theorem2Options {
  double membership_tol = kMembershipTol;
  RootOptions roots{};
};

/// Counts zeros of p^(k) in D (by cluster, with multiplicity) against the
/// bound.
///
/// The polynomial is built in the local coordinate v = (z - c) / R of the
/// disk. Derivative zeros commute with this affine change, and expanding
/// about the origin instead would bury a tight cluster far from 0 under
/// rounding error. Roots are reported in the original coordinate.
inline Theorem2Report check_theorem2(const Theorem2Instance& inst, int k, const Theorem2Options& opt = {}) {
  validate(inst, opt.membership_tol);
  Theorem2Report rep;
  rep.n = inst.n();
  rep.k = k;
  rep.bound = theorem2_bound(rep.n, k);
  rep.vacuous = rep.n - 2 * k + 1 <= 1;

  const Complex c = inst.disk.center;
  const double R = inst.disk.radius;
  auto to_local = [&](Complex z) { return (z - c) / R; };
  auto to_global = [&](Complex v) { return c + R * v; };

  const auto region = CircularRegion::disk(c, R, true);
  rep.outer_inside = region.contains(inst.outer_zero, opt.membership_tol);
  PointSet local;
  for (auto z : inst.all_zeros()) local.push_back(to_local(z));
  const Polynomial p = from_roots(local);
  const Polynomial dk = derivative(p, k);
  rep.derivative_roots = find_roots(dk, opt.roots);
  for (auto& r : rep.derivative_roots.roots) r = to_global(r);
  for (auto& cl : rep.derivative_roots.clusters) {
    cl.representative = to_global(cl.representative);
    if (region.contains(cl.representative, opt.membership_tol)) rep.count_in_disk += cl.multiplicity;
  }
  rep.satisfied = rep.count_in_disk >= rep.bound;

  const Complex mp = to_global(mean_of_roots(p));
  const Complex mdk = to_global(mean_of_roots(dk));
  rep.mean_residual = std::abs(mp - mdk) / std::max(1.0, std::abs(mp));

  const double scale = static_cast<double>(rep.n) / k;
  for (auto w : rep.derivative_roots.roots) {
    if (region.contains(w, opt.membership_tol)) continue;
    const Complex y = inst.outer_zero + scale * (w - inst.outer_zero);
    // The back-projection magnifies root error by n/k.
    const double excess = region.signed_distance(y) - scale * 1e-7 * (1.0 + std::abs(y));
    if (excess > 0.0) {
      rep.outside_structure_ok = false;
      rep.outside_structure_excess = std::max(rep.outside_structure_excess, excess);
    }
  }
  return rep;
}

/// Closed form of the k-th derivative of z (z - y)^(n-1), as coefficients.
inline Polynomial kth_derivative_closed_form(int n, int k, Complex y) {
  if (k < 1 || k > n - 1) throw Error(ErrorKind::InvalidInput, "kth_derivative: need 1 <= k <= n-1");
  double fact = 1.0;
  for (int j = 2; j <= k; ++j) fact *= j;
  const PointSet lower(static_cast<std::size_t>(n - k - 1), y);
  const Polynomial head = lower.empty() ? Polynomial::constant(1.0) : from_roots(lower);
  const Polynomial z_factor({0.0, 1.0});
  const Polynomial linear({-y, 1.0});
  return (fact * binomial_real(n - 1, k)) * (z_factor * head) + (fact * binomial_real(n - 1, k - 1)) * (linear * head);
}

/// Max coefficient gap, relative to the largest coefficient, between the
/// k-th derivative of z (z - y)^(n-1) and its closed form.
inline double kth_derivative_identity(int n, int k, Complex y) {
  PointSet roots(static_cast<std::size_t>(n - 1), y);
  roots.push_back(0.0);
  const Polynomial lhs = derivative(from_roots(roots), k);
  const Polynomial rhs = kth_derivative_closed_form(n, k, y);
  const int deg = std::max(lhs.degree(), rhs.degree());
  double gap = 0.0, scale = 0.0;
  for (int j = 0; j <= deg; ++j) {
    gap = std::max(gap, std::abs(lhs[j] - rhs[j]));
    scale = std::max(scale, std::abs(lhs[j]));
  }
  return scale > 0.0 ? gap / scale : gap;
}

/// {y with multiplicity n-k-1, (k/n) y}.
inline PointSet factorization_roots(int n, int k, Complex y) {
  if (k < 1 || k > n - 1) throw Error(ErrorKind::InvalidInput, "factorization_roots: need 1 <= k <= n-1");
  PointSet out(static_cast<std::size_t>(n - k - 1), y);
  out.push_back(static_cast<double>(k) / n * y);
  return out;
}

/// Largest distance from a critical point of p to the hull of its zeros.
inline double gauss_lucas_distance(const Polynomial& p, const RootOptions& ropt = {}) {
  if (p.degree() < 2) throw Error(ErrorKind::InvalidDegree, "gauss_lucas_check needs degree >= 2");
  const auto hull = convex_hull(find_roots(p, ropt).roots);
  double worst = 0.0;
  for (auto c : find_roots(derivative(p), ropt).roots) worst = std::max(worst, hull_distance(hull, c));
  return worst;
}

inline bool gauss_lucas_check(const Polynomial& p, double tol, const RootOptions& ropt = {}) {
  return gauss_lucas_distance(p, ropt) <= tol;
}

/// n-1 points in a disk of the given radius whose mean is exactly the
/// center, and an outer zero at distance outer_distance from the center.
/// The center is drawn from [-2, 2]^2.
inline Theorem2Instance generate_theorem2_instance(int n, std::uint64_t seed, double radius, double outer_distance) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "generate_theorem2_instance needs n >= 3");
  if (!(radius > 0.0) || !(outer_distance > 0.0)) throw Error(ErrorKind::InvalidInput, "radius and outer distance must be positive");
  Rng rng(seed);
  const Complex center = rng.in_box(2.0);
  PointSet offs(static_cast<std::size_t>(n - 1));
  for (auto& d : offs) d = rng.in_disk(0.0, radius);
  const Complex m = mean(offs);
  double far = 0.0;
  for (auto& d : offs) {
    d -= m;
    far = std::max(far, std::abs(d));
  }
  const double limit = 0.999 * radius;
  if (far > limit)
    for (auto& d : offs) d *= limit / far;
  // Re-zero the mean after scaling; at most an ulp-level shift.
  const Complex m2 = mean(offs);
  for (auto& d : offs) d -= m2;

  Theorem2Instance inst;
  inst.disk = {center, radius};
  for (auto d : offs) inst.inner_zeros.push_back(center + d);
  inst.outer_zero = center + std::polar(outer_distance, rng.angle());
  return inst;
}

}  // namespace polygeom
