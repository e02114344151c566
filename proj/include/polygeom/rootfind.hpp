#pragma once

// Simultaneous root finding (Aberth-Ehrlich) with residuals and multiplicity
// clustering.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"

namespace polygeom {

struct RootCluster {
  Complex representative;
  int multiplicity = 0;
};

struct RootSet {
  std::vector<Complex> roots;
  // Backward error |p(r)| / sum |a_k| |r|^k of each root.
  std::vector<double> residuals;
  std::vector<RootCluster> clusters;
  int iterations = 0;
  double tol = 0.0;
};

struct RootOptions {
  double tol = 1e-12;
  int max_iter = 200;
  double cluster_radius = 1e-6;
};

// Thrown when corrections are still above tolerance after max_iter sweeps.
// Carries the best approximations found so far.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, RootSet best)
      : Error(ErrorKind::NonConvergence, what), best_(std::move(best)) {}
  const RootSet& best_effort() const noexcept { return best_; }

 private:
  RootSet best_;
};

/// 1 + max_{k<n} |a_k| / |a_n|.
inline double cauchy_bound(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorKind::InvalidDegree, "cauchy_bound needs degree >= 1");
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int k = 0; k < n; ++k) m = std::max(m, std::abs(p[k]) / lead);
  return 1.0 + m;
}

namespace detail {

struct HornerResult {
  Complex value, slope;
  double scale;  // sum |a_k| |z|^k
};

inline HornerResult horner_with_derivative(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0, d = 0.0;
  double s = 0.0;
  const double r = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
    s = s * r + std::abs(*it);
  }
  return {v, d, s};
}

// Horner's rounding error is bounded by roughly 2n eps times the scale; once
// the residual is inside that band no further correction is meaningful.
inline bool at_rounding_level(const HornerResult& h, int degree) {
  return std::abs(h.value) <= 4.0 * (degree + 1) * std::numeric_limits<double>::epsilon() * h.scale;
}

// Aberth-Ehrlich iteration on a polynomial with nonzero constant term.
// Returns the sweep count; throws NonConvergenceError with `out` filled.
inline int aberth(const Polynomial& q, const RootOptions& opt, std::vector<Complex>& out) {
  const int d = q.degree();
  const auto& c = q.coeffs();
  if (d == 1) {
    out = {-c[0] / c[1]};
    return 0;
  }
  const double radius = 0.8 * cauchy_bound(q);
  constexpr double kPhase = 0.4;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    z[static_cast<std::size_t>(j)] = std::polar(radius, 2.0 * std::numbers::pi * j / d + kPhase);

  std::vector<char> done(static_cast<std::size_t>(d), 0);
  int sweep = 0;
  for (; sweep < opt.max_iter; ++sweep) {
    bool all_done = true;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (done[j]) continue;
      const auto h = horner_with_derivative(c, z[j]);
      if (at_rounding_level(h, d)) {
        done[j] = 1;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i)
        if (i != j) repulsion += 1.0 / (z[j] - z[i]);
      Complex denom = h.slope / h.value - repulsion;
      if (denom == Complex{}) denom = Complex{1.0, 0.0};
      const Complex step = 1.0 / denom;
      z[j] -= step;
      if (!is_finite(z[j])) z[j] = std::polar(radius, 1.0 + j);
      if (std::abs(step) <= opt.tol * (1.0 + std::abs(z[j]))) {
        done[j] = 1;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  out = std::move(z);
  if (sweep == opt.max_iter && std::count(done.begin(), done.end(), 0) > 0)
    throw NonConvergenceError("Aberth iteration: " + std::to_string(std::count(done.begin(), done.end(), 0)) +
                                  " roots not converged after " + std::to_string(opt.max_iter) + " sweeps",
                              RootSet{out, {}, {}, sweep, opt.tol});
  return sweep;
}

// Single-linkage grouping. Two roots join when they are within the cluster
// radius or when their Newton inclusion disks (radius n |p/p'|) overlap; the
// latter catches multiple roots, whose computed copies spread like eps^(1/m).
// A cluster of m roots around c is a simple zero of the (m-1)th derivative.
inline Complex refine_center(const Polynomial& p, Complex c, int m) {
  const Polynomial q = derivative(p, m - 1);
  Complex z = c;
  double best = std::abs(eval(q, z));
  for (int it = 0; it < 8 && best > 0.0; ++it) {
    const auto h = horner_with_derivative(q.coeffs(), z);
    if (h.slope == Complex{}) break;
    const Complex next = z - h.value / h.slope;
    const double r = std::abs(eval(q, next));
    if (!(r < best) || std::abs(next - c) > 1e-2 * (1.0 + std::abs(c))) break;
    z = next;
    best = r;
  }
  return z;
}

inline std::vector<RootCluster> cluster_roots(const Polynomial& p, const std::vector<Complex>& roots, double cluster_radius) {
  const std::size_t n = roots.size();
  std::vector<double> inclusion(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = horner_with_derivative(p.coeffs(), roots[i]);
    const double cap = 1e-2 * (1.0 + std::abs(roots[i]));
    inclusion[i] = (h.slope == Complex{}) ? (h.value == Complex{} ? 0.0 : cap)
                                          : std::min(cap, static_cast<double>(n) * std::abs(h.value / h.slope));
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(roots[i] - roots[j]);
      const double reach = std::max({cluster_radius * (1.0 + std::abs(roots[i])),
                                     cluster_radius * (1.0 + std::abs(roots[j])), inclusion[i] + inclusion[j]});
      if (gap <= reach) parent[find(i)] = find(j);
    }
  std::vector<RootCluster> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({0.0, 0});
    }
    auto& cl = out[slot[r]];
    cl.representative += roots[i];
    cl.multiplicity += 1;
  }
  for (auto& cl : out) {
    cl.representative /= static_cast<double>(cl.multiplicity);
    if (cl.multiplicity > 1) cl.representative = refine_center(p, cl.representative, cl.multiplicity);
  }
  return out;
}

inline bool lexicographic_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

}  // namespace detail

/// All complex zeros of p. Exact zero roots are split off first; the
/// cofactor is solved by Aberth-Ehrlich and every root gets one Newton
/// polish step (kept only if it lowers the residual).
inline RootSet find_roots(const Polynomial& p, const RootOptions& opt = {}) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorKind::InvalidDegree, "find_roots needs degree >= 1");
  if (!(opt.tol > 0.0) || opt.max_iter < 1) throw Error(ErrorKind::InvalidInput, "find_roots: tol must be > 0 and max_iter >= 1");

  int zeros = 0;
  while (p[zeros] == Complex{}) ++zeros;
  std::vector<Complex> roots(static_cast<std::size_t>(zeros), 0.0);
  int sweeps = 0;
  if (zeros < n) {
    const Polynomial cofactor(std::vector<Complex>(p.coeffs().begin() + zeros, p.coeffs().end()));
    std::vector<Complex> rest;
    try {
      sweeps = detail::aberth(cofactor, opt, rest);
    } catch (const NonConvergenceError& e) {
      RootSet best = e.best_effort();
      best.roots.insert(best.roots.begin(), roots.begin(), roots.end());
      for (auto r : best.roots) best.residuals.push_back(std::abs(eval(p, r)) / std::max(eval_scale(p, r), 1e-300));
      throw NonConvergenceError(e.what(), std::move(best));
    }
    roots.insert(roots.end(), rest.begin(), rest.end());
  }

  RootSet out;
  out.tol = opt.tol;
  out.iterations = sweeps;
  for (auto& r : roots) {
    if (r == Complex{}) continue;
    const auto h = detail::horner_with_derivative(p.coeffs(), r);
    if (h.slope == Complex{} || h.value == Complex{}) continue;
    const Complex candidate = r - h.value / h.slope;
    if (is_finite(candidate) && std::abs(eval(p, candidate)) < std::abs(h.value)) r = candidate;
  }
  std::sort(roots.begin(), roots.end(), detail::lexicographic_less);
  for (auto r : roots) {
    const double scale = eval_scale(p, r);
    out.residuals.push_back(scale > 0.0 ? std::abs(eval(p, r)) / scale : 0.0);
  }
  out.clusters = detail::cluster_roots(p, roots, opt.cluster_radius);
  out.roots = std::move(roots);
  return out;
}

}  // namespace polygeom
