#pragma once

// The apolarity functional
//
//   A(a, b) = sum_{k=0}^{n} (-1)^k a_k b_{n-k} / C(n, k)
//
// on degree-n coefficient frames, and Grace-theorem witness extraction: when
// a and b are apolar and every zero of a lies in a circular region S, some
// zero of b lies in S as well.

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/random.hpp"
#include "polygeom/regions.hpp"
#include "polygeom/rootfind.hpp"

namespace polygeom {

namespace detail {

inline void check_frame(const Polynomial& a, const Polynomial& b, int n) {
  if (n > kMaxDegree) throw Error(ErrorKind::DegreeTooLarge, "apolarity frame n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
  if (n < 0) throw Error(ErrorKind::InvalidInput, "apolarity frame must be non-negative");
  if (a.degree() > n || b.degree() > n)
    throw Error(ErrorKind::InvalidInput, "apolarity frame n=" + std::to_string(n) + " is below a polynomial degree");
}

}  // namespace detail

/// A(a, b) with both polynomials zero-padded to formal degree n.
inline Complex apolarity_functional(const Polynomial& a, const Polynomial& b, int n) {
  detail::check_frame(a, b, n);
  Complex sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2) ? -1.0 : 1.0;
    sum += sign * a[k] * b[n - k] / binomial_real(n, k);
  }
  return sum;
}

// sum |a_k| |b_{n-k}| / C(n, k): the size of the terms A cancels.
inline double apolarity_scale(const Polynomial& a, const Polynomial& b, int n) {
  detail::check_frame(a, b, n);
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += std::abs(a[k]) * std::abs(b[n - k]) / binomial_real(n, k);
  return s;
}

inline bool is_apolar(const Polynomial& a, const Polynomial& b, int n, double rtol = 1e-10) {
  const double value = std::abs(apolarity_functional(a, b, n));
  const double scale = apolarity_scale(a, b, n);
  if (scale == 0.0) return value == 0.0;
  return value <= rtol * scale;
}

/// Random b of formal degree n with A(a, b) = 0. All coefficients are drawn
/// from the unit box except b_j, which is solved for; j maximizes
/// |a_{n-j}| / C(n, j) so the solve divides by the largest available pivot.
inline Polynomial make_apolar(const Polynomial& a, int n, std::uint64_t seed) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidInput, "make_apolar: a is identically zero");
  detail::check_frame(a, Polynomial{}, n);
  Rng rng(seed);
  std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
  for (auto& c : b) c = rng.in_box();

  int pivot = 0;
  double best = -1.0;
  for (int j = 0; j <= n; ++j) {
    const double w = std::abs(a[n - j]) / binomial_real(n, j);
    if (w > best) {
      best = w;
      pivot = j;
    }
  }
  // Term k of A pairs a_k with b_{n-k}; the pivot term is k = n - pivot.
  const int kp = n - pivot;
  Complex rest = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k == kp) continue;
    rest += ((k % 2) ? -1.0 : 1.0) * a[k] * b[static_cast<std::size_t>(n - k)] / binomial_real(n, k);
  }
  const double sign = (kp % 2) ? -1.0 : 1.0;
  b[static_cast<std::size_t>(pivot)] = -rest * binomial_real(n, kp) / (sign * a[kp]);
  return Polynomial(std::move(b));
}

struct WitnessResult {
  Complex point;
  double residual = 0.0;
  // Every zero of b (or of the diagonal equation) the witness was chosen from.
  RootSet candidates;
};

/// Index of the qualifying root: inside S, smallest residual, then smallest
/// modulus.
inline std::optional<std::size_t> select_witness(const RootSet& roots, const CircularRegion& region, double tol) {
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    if (!region.contains(roots.roots[i], tol)) continue;
    if (!pick) {
      pick = i;
      continue;
    }
    const double r = roots.residuals[i], rp = roots.residuals[*pick];
    if (r < rp || (r == rp && std::abs(roots.roots[i]) < std::abs(roots.roots[*pick]))) pick = i;
  }
  return pick;
}

struct GraceOptions {
  double membership_tol = kMembershipTol;
  double apolar_rtol = 1e-10;
  RootOptions roots{};
};

/// Grace witness with the root sets it was derived from.
inline WitnessResult grace_report(const Polynomial& a, const Polynomial& b, int n, const CircularRegion& region,
                                  const GraceOptions& opt = {}) {
  if (a.degree() != n || b.degree() != n)
    throw Error(ErrorKind::InvalidInput, "grace: both polynomials must have degree exactly n=" + std::to_string(n));
  if (n < 1) throw Error(ErrorKind::InvalidInput, "grace: n must be >= 1");
  if (!is_apolar(a, b, n, opt.apolar_rtol)) {
    std::ostringstream msg;
    msg << "pair is not apolar: |A| = " << std::abs(apolarity_functional(a, b, n)) << ", scale " << apolarity_scale(a, b, n);
    throw Error(ErrorKind::HypothesisViolated, msg.str());
  }
  const RootSet a_roots = find_roots(a, opt.roots);
  for (auto z : a_roots.roots) {
    if (!region.contains(z, opt.membership_tol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "zero (" << z.real() << ", " << z.imag() << ") of a lies outside the " << region.kind()
          << " region, signed boundary distance " << region.signed_distance(z);
      throw Error(ErrorKind::HypothesisViolated, msg.str());
    }
  }
  RootSet b_roots = find_roots(b, opt.roots);
  const auto pick = select_witness(b_roots, region, opt.membership_tol);
  if (!pick) throw Error(ErrorKind::TheoremViolation, "no zero of b lies in the region");
  return {b_roots.roots[*pick], b_roots.residuals[*pick], std::move(b_roots)};
}

inline Complex grace_witness(const Polynomial& a, const Polynomial& b, int n, const CircularRegion& region,
                             const GraceOptions& opt = {}) {
  return grace_report(a, b, n, region, opt).point;
}

}  // namespace polygeom
