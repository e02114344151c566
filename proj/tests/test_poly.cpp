#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "polygeom/poly.hpp"

using namespace polygeom;
using Catch::Approx;
using namespace std::complex_literals;

TEST_CASE("eval", "[poly]") {
  CHECK(std::abs(eval(Polynomial{1.0, 0.0, 1.0}, 1i)) == 0.0);
  CHECK(eval(Polynomial{1.0}, 7.0 + 3i) == Complex{1.0});
  CHECK(eval(Polynomial{0.0, 2.0, -3.0, 1.0}, 1.0) == Complex{0.0});
  CHECK(eval(Polynomial{}, 5.0) == Complex{0.0});

  oracle::Random rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto c = rng.boxes(rng.integer(1, 15));
    const Complex z = rng.box(1.3);
    CHECK(oracle::rel(eval(Polynomial(c), z), oracle::eval_powers(c, z), eval_scale(Polynomial(c), z)) < 1e-13);
  }
}

TEST_CASE("derivative", "[poly]") {
  CHECK(derivative(Polynomial::monomial(3), 2) == Polynomial{0.0, 6.0});
  const Polynomial p{0.0, 2.0, -3.0, 1.0};
  CHECK(derivative(p, 0) == p);
  CHECK(derivative(p, 1) == Polynomial{2.0, -6.0, 3.0});
  CHECK(derivative(p, 4).is_zero());
  CHECK(derivative(p, 3) == Polynomial{6.0});
  CHECK_THROWS_AS(derivative(p, -1), Error);
}

TEST_CASE("derivative is linear", "[poly][property]") {
  oracle::Random rng(12);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(1, 20);
    const Polynomial p(rng.boxes(n + 1)), q(rng.boxes(rng.integer(1, n + 1)));
    const Complex alpha = rng.box();
    const int k = rng.integer(0, n);
    const Polynomial lhs = derivative(alpha * p + q, k);
    const Polynomial rhs = alpha * derivative(p, k) + derivative(q, k);
    double scale = 0.0, gap = 0.0;
    for (int j = 0; j <= std::max(lhs.degree(), rhs.degree()); ++j) {
      gap = std::max(gap, std::abs(lhs[j] - rhs[j]));
      scale = std::max(scale, std::abs(derivative(p, k)[j]) * std::abs(alpha) + std::abs(derivative(q, k)[j]));
    }
    CHECK(gap <= 1e-14 * std::max(scale, 1.0) * 4);
  }
}

TEST_CASE("from_roots", "[poly]") {
  CHECK(from_roots(PointSet{1.0, 2.0}) == Polynomial{2.0, -3.0, 1.0});
  CHECK(from_roots(PointSet{0.0, 0.0, 0.0}) == Polynomial::monomial(3));
  CHECK(from_roots(PointSet{-1.0, 1.0}) == Polynomial{-1.0, 0.0, 1.0});
  CHECK_THROWS_AS(from_roots(PointSet{}), Error);
}

TEST_CASE("from_roots matches signed elementary symmetric sums", "[poly][property]") {
  oracle::Random rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto pts = rng.boxes(rng.integer(1, 10), 1.5);
    const int n = static_cast<int>(pts.size());
    const Polynomial q = from_roots(pts);
    const auto naive = oracle::expand(pts);
    REQUIRE(q.degree() == n);
    for (int k = 0; k <= n; ++k) {
      const Complex want = ((n - k) % 2 ? -1.0 : 1.0) * oracle::esym_subsets(pts, n - k);
      CHECK(oracle::rel(q[k], want, 1.0) < 1e-12);
      CHECK(oracle::rel(q[k], naive[static_cast<std::size_t>(k)], 1.0) < 1e-12);
    }
  }
}

TEST_CASE("elementary_symmetric", "[poly]") {
  CHECK(elementary_symmetric(PointSet{1.0, 2.0, 3.0}, 2) == Complex{11.0});
  CHECK(elementary_symmetric(PointSet{4.0 + 1i, -2.0}, 0) == Complex{1.0});
  CHECK(elementary_symmetric(PointSet{}, 0) == Complex{1.0});
  CHECK(elementary_symmetric(PointSet{2.5 - 1i}, 1) == 2.5 - 1i);
  CHECK_THROWS_AS(elementary_symmetric(PointSet{1.0}, 2), Error);
  CHECK_THROWS_AS(elementary_symmetric(PointSet{1.0}, -1), Error);
  try {
    elementary_symmetric(PointSet{1.0}, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidIndex);
  }
}

TEST_CASE("elementary symmetric recurrence", "[poly][property]") {
  oracle::Random rng(14);
  for (int t = 0; t < 200; ++t) {
    auto w = rng.boxes(rng.integer(0, 12));
    const Complex x = rng.box();
    auto wx = w;
    wx.push_back(x);
    const auto ew = elementary_symmetric_all(w);
    const auto ewx = elementary_symmetric_all(wx);
    for (std::size_t k = 1; k <= w.size(); ++k) {
      const Complex gap = ewx[k] - ew[k] - x * ew[k - 1];
      CHECK(std::abs(gap) <= 1e-12 * std::max({std::abs(ewx[k]), std::abs(ew[k]), std::abs(x * ew[k - 1]), 1.0}));
    }
    if (w.size() <= 10)
      for (std::size_t k = 0; k <= w.size(); ++k) CHECK(oracle::rel(ew[k], oracle::esym_subsets(w, static_cast<int>(k)), 1.0) < 1e-12);
  }
}

TEST_CASE("binomial", "[poly]") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(60, 30) == static_cast<BigInt>(118264581564861424LL));
  for (int n = 0; n <= kMaxDegree; ++n)
    for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == oracle::binomial(n, k));
  CHECK_THROWS_AS(binomial(61, 3), Error);
  try {
    binomial(61, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeTooLarge);
  }
  try {
    binomial(4, 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidIndex);
  }
}

TEST_CASE("mean_of_roots", "[poly]") {
  CHECK(mean_of_roots(Polynomial{2.0, -3.0, 1.0}) == Complex{1.5});
  CHECK(mean_of_roots(Polynomial::monomial(3)) == Complex{0.0});
  CHECK(mean_of_roots(Polynomial{10.0, -1.0, -10.0, 1.0}).real() == Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(mean_of_roots(Polynomial{3.0}), Error);
}

TEST_CASE("mean of roots is preserved by differentiation", "[poly][property]") {
  oracle::Random rng(15);
  for (int t = 0; t < 200; ++t) {
    const Polynomial p(rng.boxes(rng.integer(3, 20)));
    if (p.degree() < 2) continue;
    const Complex m = mean_of_roots(p);
    for (int k = 1; k <= p.degree() - 1; ++k) CHECK(oracle::rel(mean_of_roots(derivative(p, k)), m, 1.0) < 1e-12);
  }
}

TEST_CASE("canonical form", "[poly]") {
  CHECK(Polynomial{1.0, 2.0, 0.0, 0.0}.degree() == 1);
  CHECK(Polynomial{0.0}.is_zero());
  CHECK(Polynomial{}.degree() == -1);
  // Cancellation in arithmetic trims the leading term.
  const Polynomial p{0.1, 0.2, 0.3};
  const Polynomial q{0.0, 0.0, 0.3 + 1e-17};
  CHECK((p - q).degree() == 1);
  // A leading term that is merely small stays.
  CHECK(Polynomial{1e20, 0.0, 1.0}.degree() == 2);
  CHECK((Polynomial{1e20, 3.0} * Polynomial{1.0, 1.0}).degree() == 2);
  CHECK_THROWS_AS(Polynomial({std::numeric_limits<double>::quiet_NaN()}), Error);
}
