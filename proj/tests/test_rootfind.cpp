#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>

#include "oracles.hpp"
#include "polygeom/matching.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/rootfind.hpp"

using namespace polygeom;
using namespace std::complex_literals;

TEST_CASE("cauchy_bound", "[rootfind]") {
  CHECK(cauchy_bound(Polynomial{-1.0, 0.0, 1.0}) == 2.0);
  CHECK(cauchy_bound(Polynomial::monomial(7)) == 1.0);
  CHECK(cauchy_bound(Polynomial{10.0, -1.0, -10.0, 1.0}) == 11.0);
  CHECK_THROWS_AS(cauchy_bound(Polynomial{}), Error);
  CHECK_THROWS_AS(cauchy_bound(Polynomial{4.0}), Error);
}

TEST_CASE("roots of unity", "[rootfind]") {
  const auto rs = find_roots(Polynomial{-1.0, 0.0, 0.0, 1.0});
  REQUIRE(rs.roots.size() == 3);
  const PointSet want{1.0, std::polar(1.0, 2 * std::numbers::pi / 3), std::polar(1.0, -2 * std::numbers::pi / 3)};
  CHECK(matching_distance(rs.roots, want) < 1e-14);
  for (double r : rs.residuals) CHECK(r <= rs.tol);
  CHECK(rs.clusters.size() == 3);
}

TEST_CASE("triple root clusters", "[rootfind]") {
  // (z - 2)^3 = z^3 - 6 z^2 + 12 z - 8
  const Polynomial p{-8.0, 12.0, -6.0, 1.0};
  const auto rs = find_roots(p);
  REQUIRE(rs.roots.size() == 3);
  for (double r : rs.residuals) CHECK(r <= 1e-12);
  REQUIRE(rs.clusters.size() == 1);
  CHECK(rs.clusters[0].multiplicity == 3);
  CHECK(std::abs(rs.clusters[0].representative - 2.0) < 1e-9);
}

TEST_CASE("quadratic against the formula", "[rootfind]") {
  const auto rs = find_roots(Polynomial{2.0, -6.0, 3.0});
  const PointSet want{1.0 + 1.0 / std::sqrt(3.0), 1.0 - 1.0 / std::sqrt(3.0)};
  CHECK(matching_distance(rs.roots, want) < 1e-15);
}

TEST_CASE("zero roots are split off exactly", "[rootfind]") {
  // z^2 (z - 3)
  const auto rs = find_roots(Polynomial{0.0, 0.0, -3.0, 1.0});
  REQUIRE(rs.roots.size() == 3);
  CHECK(std::count(rs.roots.begin(), rs.roots.end(), Complex{0.0}) == 2);
  const auto rs2 = find_roots(Polynomial::monomial(5));
  CHECK(rs2.clusters.size() == 1);
  CHECK(rs2.clusters[0].multiplicity == 5);
}

TEST_CASE("symmetric stall case z^n - c", "[rootfind]") {
  for (int n = 2; n <= 20; ++n) {
    const auto rs = find_roots(Polynomial::monomial(n) - Polynomial{1.0});
    PointSet want;
    for (int j = 0; j < n; ++j) want.push_back(std::polar(1.0, 2 * std::numbers::pi * j / n));
    CHECK(matching_distance(rs.roots, want) < 1e-13);
  }
}

TEST_CASE("errors", "[rootfind]") {
  CHECK_THROWS_AS(find_roots(Polynomial{2.0}), Error);
  try {
    find_roots(Polynomial{2.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDegree);
  }
  // One sweep cannot converge a degree-12 polynomial from the start circle.
  oracle::Random rng(3);
  const Polynomial p(rng.boxes(13));
  RootOptions opt;
  opt.max_iter = 1;
  try {
    find_roots(p, opt);
    FAIL("expected NonConvergence");
  } catch (const NonConvergenceError& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
    CHECK(e.best_effort().roots.size() == 12);
    CHECK(e.best_effort().residuals.size() == 12);
  }
}

TEST_CASE("residual soundness and Vieta", "[rootfind][property]") {
  oracle::Random rng(21);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(1, 20);
    auto c = rng.boxes(n + 1);
    c.back() = std::polar(rng.uniform(0.25, 1.0), rng.uniform(0.0, 6.28));
    const Polynomial p(c);
    const auto rs = find_roots(p);
    REQUIRE(static_cast<int>(rs.roots.size()) == n);
    int total = 0;
    for (const auto& cl : rs.clusters) total += cl.multiplicity;
    CHECK(total == n);
    Complex sum = 0.0, prod = 1.0;
    double abs_sum = 0.0;
    for (auto r : rs.roots) {
      CHECK(std::abs(eval(p, r)) <= 1e-8 * eval_scale(p, std::max(1.0, std::abs(r))));
      sum += r;
      prod *= r;
      abs_sum += std::abs(r);
    }
    CHECK(oracle::rel(sum, -c[n - 1] / c[n], abs_sum) < 1e-8);
    CHECK(oracle::rel(prod, ((n % 2) ? -1.0 : 1.0) * c[0] / c[n]) < 1e-8);
  }
}

TEST_CASE("round trip through from_roots", "[rootfind][property]") {
  oracle::Random rng(22);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(1, 12);
    PointSet pts;
    while (static_cast<int>(pts.size()) < n) {
      const Complex z = rng.box();
      if (std::all_of(pts.begin(), pts.end(), [z](Complex q) { return std::abs(z - q) >= 1e-2; })) pts.push_back(z);
    }
    const auto rs = find_roots(from_roots(pts));
    CHECK(matching_distance(rs.roots, pts) <= 1e-7);
  }
}

TEST_CASE("deterministic", "[rootfind]") {
  const Polynomial p{1.0 + 2i, -0.5, 3.0, 0.25i, 1.0};
  const auto a = find_roots(p), b = find_roots(p);
  CHECK(a.roots == b.roots);
  CHECK(a.residuals == b.residuals);
}
