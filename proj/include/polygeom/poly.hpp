#pragma once

// Dense complex polynomials over ascending coefficient vectors, plus the
// exact combinatorics (binomials, elementary symmetric sums) the rest of the
// library is built on.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polygeom/error.hpp"

namespace polygeom {

using Complex = std::complex<double>;
using PointSet = std::vector<Complex>;
using BigInt = __int128;

// Largest degree for which every C(n, k) is held exactly in a BigInt.
inline constexpr int kMaxDegree = 60;

// A coefficient produced by arithmetic is treated as cancelled to zero when
// it is this small relative to the magnitudes that were combined into it.
inline constexpr double kTrimRelative = 1e-14;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace detail {

struct BinomialTable {
  std::array<std::array<BigInt, kMaxDegree + 1>, kMaxDegree + 1> c{};
  constexpr BinomialTable() {
    for (int n = 0; n <= kMaxDegree; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

inline constexpr BinomialTable kBinomials{};

}  // namespace detail

/// Exact C(n, k) for 0 <= k <= n <= kMaxDegree.
inline BigInt binomial(int n, int k) {
  if (n > kMaxDegree) throw Error(ErrorKind::DegreeTooLarge, "binomial: n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
  if (n < 0 || k < 0 || k > n) throw Error(ErrorKind::InvalidIndex, "binomial: k=" + std::to_string(k) + " out of [0, " + std::to_string(n) + "]");
  return detail::kBinomials.c[n][k];
}

// Every binomial up to kMaxDegree is below 2^63, so the conversion is a
// single correctly-rounded step.
inline double binomial_real(int n, int k) { return static_cast<double>(static_cast<long long>(binomial(n, k))); }

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }
  Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { canonicalize(); }

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  static Polynomial monomial(int k, Complex c = 1.0) {
    std::vector<Complex> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
  }

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
  Complex operator[](int k) const noexcept {
    return (k < 0 || k > degree()) ? Complex{} : coeffs_[static_cast<std::size_t>(k)];
  }

  // Coefficients zero-padded (or truncated) to length n + 1.
  std::vector<Complex> framed(int n) const {
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= std::min(n, degree()); ++k) v[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return v;
  }

  double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (auto c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Complex> v(len, 0.0);
    std::vector<double> mag(len, 0.0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k], mag[k] += std::abs(a.coeffs_[k]);
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k], mag[k] += std::abs(b.coeffs_[k]);
    return cancelled(std::move(v), mag);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }
  friend Polynomial operator*(Complex s, const Polynomial& p) {
    std::vector<Complex> v = p.coeffs_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    std::vector<Complex> v(len, 0.0);
    std::vector<double> mag(len, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        mag[i + j] += std::abs(a.coeffs_[i]) * std::abs(b.coeffs_[j]);
      }
    return cancelled(std::move(v), mag);
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  // Trailing coefficients that arithmetic cancelled are dropped; mag[k] is
  // the sum of the magnitudes that were combined into v[k].
  static Polynomial cancelled(std::vector<Complex> v, const std::vector<double>& mag) {
    while (!v.empty() && std::abs(v.back()) <= kTrimRelative * mag[v.size() - 1]) v.pop_back();
    return Polynomial(std::move(v));
  }

  // Exact trailing zeros only: coefficients given directly are taken as is.
  void canonicalize() {
    for (auto c : coeffs_)
      if (!is_finite(c)) throw Error(ErrorKind::InvalidInput, "non-finite polynomial coefficient");
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
  }

  std::vector<Complex> coeffs_;
};

/// Horner evaluation.
inline Complex eval(const Polynomial& p, Complex z) {
  Complex acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Sum of |a_k| |z|^k: the magnitude against which a computed p(z) is judged.
inline double eval_scale(const Polynomial& p, Complex z) {
  const double r = std::abs(z);
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

/// k-fold formal derivative; the zero polynomial once order exceeds the degree.
inline Polynomial derivative(const Polynomial& p, int order = 1) {
  if (order < 0) throw Error(ErrorKind::InvalidIndex, "derivative order must be non-negative");
  if (order == 0) return p;
  const int n = p.degree();
  if (order > n) return {};
  std::vector<Complex> v(static_cast<std::size_t>(n - order) + 1);
  for (int k = 0; k <= n - order; ++k) {
    // (k+order)! / k!
    double falling = 1.0;
    for (int j = k + 1; j <= k + order; ++j) falling *= j;
    v[static_cast<std::size_t>(k)] = falling * p[k + order];
  }
  return Polynomial(std::move(v));
}

/// e_0..e_n of the points via e_k(w + {x}) = e_k(w) + x e_{k-1}(w).
inline std::vector<Complex> elementary_symmetric_all(std::span<const Complex> points) {
  std::vector<Complex> e(points.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += points[i] * e[k - 1];
  return e;
}

inline Complex elementary_symmetric(std::span<const Complex> points, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > points.size())
    throw Error(ErrorKind::InvalidIndex, "elementary_symmetric: k=" + std::to_string(k) + " with " + std::to_string(points.size()) + " points");
  return elementary_symmetric_all(points)[static_cast<std::size_t>(k)];
}

/// Monic polynomial with the given roots; coefficient of z^k is (-1)^(n-k) e_(n-k).
inline Polynomial from_roots(std::span<const Complex> roots) {
  if (roots.empty()) throw Error(ErrorKind::InvalidInput, "from_roots: empty root set");
  const std::size_t n = roots.size();
  const auto e = elementary_symmetric_all(roots);
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = ((n - k) % 2 ? -1.0 : 1.0) * e[n - k];
  return Polynomial(std::move(c));
}

/// Arithmetic mean of the zeros, read off the two leading coefficients.
inline Complex mean_of_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorKind::InvalidDegree, "mean_of_roots needs degree >= 1");
  return -p[n - 1] / (static_cast<double>(n) * p[n]);
}

}  // namespace polygeom
