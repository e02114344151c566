#pragma once

// Symmetric multiaffine polynomials in the elementary-symmetric basis and the
// coincidence solvers built on them.
//
// For P = sum_{k<=m} E_k e_k in n variables and points w_1..w_n, the value
// P(w) is matched by some diagonal point z (P(z,...,z) = P(w)) inside any
// circular region S holding the zeros of q^(n-m), q = prod (z - w_i). The
// classical Walsh statement is the case m = n, where q^(0) = q and the
// hypothesis reduces to "all w_i lie in S".

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polygeom/apolarity.hpp"
#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/regions.hpp"
#include "polygeom/rootfind.hpp"

namespace polygeom {

class SymmetricMultiaffine {
 public:
  // The degree m defaults to the last coefficient above kTrimRelative times
  // the largest; pass m explicitly to keep trailing structural zeros.
  SymmetricMultiaffine(int n, std::vector<Complex> E, std::optional<int> m = std::nullopt) : n_(n), E_(std::move(E)) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "multiaffine polynomial needs n >= 1 variables");
    for (auto c : E_)
      if (!is_finite(c)) throw Error(ErrorKind::InvalidInput, "non-finite elementary-symmetric coefficient");
    if (E_.empty()) E_.push_back(0.0);
    if (m) {
      if (*m < 0 || static_cast<std::size_t>(*m) >= E_.size())
        throw Error(ErrorKind::InvalidInput, "explicit degree m=" + std::to_string(*m) + " outside the coefficient list");
      E_.resize(static_cast<std::size_t>(*m) + 1);
    } else {
      double big = 0.0;
      for (auto c : E_) big = std::max(big, std::abs(c));
      while (E_.size() > 1 && std::abs(E_.back()) <= kTrimRelative * big) E_.pop_back();
    }
    if (degree() > n_)
      throw Error(ErrorKind::InvalidInput, "total degree m=" + std::to_string(degree()) + " exceeds n=" + std::to_string(n_));
  }

  int n() const noexcept { return n_; }
  int degree() const noexcept { return static_cast<int>(E_.size()) - 1; }
  const std::vector<Complex>& E() const noexcept { return E_; }

  // Same polynomial minus a constant.
  SymmetricMultiaffine shifted(Complex c) const {
    auto E = E_;
    E[0] -= c;
    return SymmetricMultiaffine(n_, std::move(E), degree());
  }

 private:
  int n_;
  std::vector<Complex> E_;
};

/// sum_k E_k e_k(w).
inline Complex evaluate_multiaffine(const SymmetricMultiaffine& P, std::span<const Complex> w) {
  if (static_cast<int>(w.size()) != P.n())
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(P.n()) + " points, got " + std::to_string(w.size()));
  const auto e = elementary_symmetric_all(w);
  Complex sum = 0.0;
  for (std::size_t k = 0; k < P.E().size(); ++k) sum += P.E()[k] * e[k];
  return sum;
}

/// r(z) = P(z, ..., z) = sum_k E_k C(n, k) z^k.
inline Polynomial diagonal(const SymmetricMultiaffine& P) {
  if (P.n() > kMaxDegree) throw Error(ErrorKind::DegreeTooLarge, "diagonal: n=" + std::to_string(P.n()) + " exceeds " + std::to_string(kMaxDegree));
  std::vector<Complex> r(P.E().size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = P.E()[k] * binomial_real(P.n(), static_cast<int>(k));
  return Polynomial(std::move(r));
}

struct CoincidenceOptions {
  double membership_tol = kMembershipTol;
  RootOptions roots{};
  // Classical Walsh hypothesis (m = n and every w_i in S) instead of the
  // derivative-zero hypothesis.
  bool classic = false;
  // When false the solve runs even if the hypothesis fails.
  bool enforce_hypothesis = true;
};

struct HypothesisReport {
  bool holds = false;
  // Zeros of q^(n-m); for the classical form these are the w_i.
  RootSet derivative_roots;
  std::string diagnostic;
};

/// Do the zeros of q^(n-m), q = prod (z - w_i), all lie in S?
inline HypothesisReport theorem1_hypothesis(std::span<const Complex> w, int m, const CircularRegion& region,
                                            double membership_tol = kMembershipTol, const RootOptions& ropt = {}) {
  const int n = static_cast<int>(w.size());
  if (m < 1 || m > n) throw Error(ErrorKind::InvalidInput, "theorem1_hypothesis: need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const Polynomial d = derivative(from_roots(w), n - m);
  HypothesisReport rep;
  rep.derivative_roots = find_roots(d, ropt);
  rep.holds = true;
  for (auto z : rep.derivative_roots.roots) {
    if (!region.contains(z, membership_tol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "zero (" << z.real() << ", " << z.imag() << ") of q^(" << n - m << ") outside the " << region.kind()
          << " region, signed boundary distance " << region.signed_distance(z);
      rep.holds = false;
      rep.diagnostic = msg.str();
      break;
    }
  }
  return rep;
}

// Walsh's hypothesis: total degree n and every point in S.
inline HypothesisReport classic_hypothesis(const SymmetricMultiaffine& P, std::span<const Complex> w,
                                           const CircularRegion& region, double membership_tol = kMembershipTol) {
  HypothesisReport rep;
  rep.derivative_roots.roots.assign(w.begin(), w.end());
  rep.derivative_roots.residuals.assign(w.size(), 0.0);
  rep.holds = true;
  if (P.degree() != P.n()) {
    rep.holds = false;
    rep.diagnostic = "classical coincidence needs total degree m = n; got m=" + std::to_string(P.degree()) + ", n=" + std::to_string(P.n());
    return rep;
  }
  for (auto z : w) {
    if (!region.contains(z, membership_tol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "point (" << z.real() << ", " << z.imag() << ") outside the " << region.kind()
          << " region, signed boundary distance " << region.signed_distance(z);
      rep.holds = false;
      rep.diagnostic = msg.str();
      break;
    }
  }
  return rep;
}

struct CoincidenceResult {
  Complex point;
  double residual = 0.0;
  Complex value;  // P(w)
  bool degenerate = false;
  HypothesisReport hypothesis;
  RootSet candidates;  // zeros of P(z,...,z) - P(w)
};

/// A point z in S with P(z, ..., z) = P(w).
inline CoincidenceResult coincidence_report(const SymmetricMultiaffine& P, std::span<const Complex> w,
                                            const CircularRegion& region, const CoincidenceOptions& opt = {}) {
  CoincidenceResult res;
  res.value = evaluate_multiaffine(P, w);
  const int m = P.degree();
  if (m == 0) {
    // P(z..z) = P(w) for every z.
    res.point = region.representative();
    res.degenerate = true;
    res.hypothesis.holds = true;
    return res;
  }
  res.hypothesis = opt.classic ? classic_hypothesis(P, w, region, opt.membership_tol)
                               : theorem1_hypothesis(w, m, region, opt.membership_tol, opt.roots);
  if (!res.hypothesis.holds && opt.enforce_hypothesis)
    throw Error(ErrorKind::HypothesisViolated, res.hypothesis.diagnostic);

  const Polynomial equation = diagonal(P.shifted(res.value));
  if (equation.degree() < 1) {
    if (!equation.is_zero()) throw Error(ErrorKind::DegenerateDiagonal, "P(z,...,z) - P(w) is a nonzero constant");
    res.point = region.representative();
    res.degenerate = true;
    return res;
  }
  res.candidates = find_roots(equation, opt.roots);
  const auto pick = select_witness(res.candidates, region, opt.membership_tol);
  if (!pick) throw Error(ErrorKind::TheoremViolation, "no solution of P(z,...,z) = P(w) lies in the region");
  res.point = res.candidates.roots[*pick];
  res.residual = res.candidates.residuals[*pick];
  return res;
}

inline Complex coincidence_witness(const SymmetricMultiaffine& P, std::span<const Complex> w,
                                   const CircularRegion& region, const CoincidenceOptions& opt = {}) {
  return coincidence_report(P, w, region, opt).point;
}

/// |A(q^(n-m), r, m)| / scale, where r is the diagonal of P - P(w). Zero in
/// exact arithmetic: the two are apolar at frame m.
inline double theorem1_apolarity_residual(const SymmetricMultiaffine& P, std::span<const Complex> w) {
  const int n = P.n();
  const int m = P.degree();
  const SymmetricMultiaffine normalized = P.shifted(evaluate_multiaffine(P, w));
  const Polynomial r = diagonal(normalized);
  const Polynomial d = derivative(from_roots(w), n - m);
  const double scale = apolarity_scale(d, r, m);
  const double value = std::abs(apolarity_functional(d, r, m));
  return scale > 0.0 ? value / scale : value;
}

}  // namespace polygeom
