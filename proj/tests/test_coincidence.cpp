#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "polygeom/coincidence.hpp"

using namespace polygeom;
using namespace std::complex_literals;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidConfig;
}

const SymmetricMultiaffine e1_on_2(2, {0.0, 1.0});
const PointSet plus_minus_one{-1.0, 1.0};

}  // namespace

TEST_CASE("evaluate_multiaffine", "[coincidence]") {
  CHECK(evaluate_multiaffine(e1_on_2, plus_minus_one) == Complex{0.0});
  const Complex a = 2.0 - 1i, b = 0.5i;
  CHECK(evaluate_multiaffine(SymmetricMultiaffine(2, {0.0, 0.0, 1.0}), PointSet{a, b}) == a * b);
  CHECK(evaluate_multiaffine(SymmetricMultiaffine(3, {4.0 + 1i}), PointSet{1.0, 2.0, 3.0}) == 4.0 + 1i);
  CHECK(kind_of([] { evaluate_multiaffine(e1_on_2, PointSet{1.0}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("multiaffine degree inference", "[coincidence]") {
  CHECK(SymmetricMultiaffine(4, {1.0, 2.0, 0.0, 0.0}).degree() == 1);
  CHECK(SymmetricMultiaffine(4, {1.0, 2.0, 0.0, 0.0}, 3).degree() == 3);
  CHECK(kind_of([] { SymmetricMultiaffine(2, {1.0, 1.0, 1.0, 1.0}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { SymmetricMultiaffine(0, {1.0}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("diagonal", "[coincidence]") {
  CHECK(diagonal(e1_on_2) == Polynomial{0.0, 2.0});
  for (int n = 1; n <= 12; ++n) {
    std::vector<Complex> E(static_cast<std::size_t>(n) + 1, 0.0);
    E.back() = 1.0;
    CHECK(diagonal(SymmetricMultiaffine(n, E)) == Polynomial::monomial(n));
  }
  CHECK(diagonal(SymmetricMultiaffine(3, {1.0, 1.0})) == Polynomial{1.0, 3.0});
  CHECK(kind_of([] { diagonal(SymmetricMultiaffine(61, {1.0, 1.0})); }) == ErrorKind::DegreeTooLarge);
}

TEST_CASE("diagonal agrees with evaluation on repeated points", "[coincidence][property]") {
  oracle::Random rng(51);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(1, 20);
    const int m = rng.integer(0, n);
    const SymmetricMultiaffine P(n, rng.boxes(m + 1));
    const Complex z = rng.box();
    const Polynomial r = diagonal(P);
    CHECK(oracle::rel(eval(r, z), evaluate_multiaffine(P, PointSet(static_cast<std::size_t>(n), z)), eval_scale(r, z)) < 1e-12);
  }
}

TEST_CASE("derivative-zero hypothesis", "[coincidence]") {
  // q = z (z-1)(z-2), q' = 3z^2 - 6z + 2, zeros 1 +- 1/sqrt(3).
  const auto rep = theorem1_hypothesis(PointSet{0.0, 1.0, 2.0}, 2, CircularRegion::disk(1.0, 0.6));
  CHECK(rep.holds);
  REQUIRE(rep.derivative_roots.roots.size() == 2);
  CHECK(std::abs(rep.derivative_roots.roots[0] - (1.0 - 1.0 / std::sqrt(3.0))) < 1e-14);
  CHECK(std::abs(rep.derivative_roots.roots[1] - (1.0 + 1.0 / std::sqrt(3.0))) < 1e-14);
  CHECK_FALSE(theorem1_hypothesis(PointSet{0.0, 1.0, 2.0}, 2, CircularRegion::disk(1.0, 0.55)).holds);

  // m = n: the hypothesis zeros are the points themselves.
  const PointSet w{0.3, -1.0 + 1i, 2i, 0.7 - 0.2i};
  const Disk d = smallest_enclosing_disk(w);
  const auto classic = theorem1_hypothesis(w, 4, CircularRegion::disk(d.center, d.radius));
  CHECK(classic.holds);

  // q' = 2z has its zero at the origin, outside the closed exterior.
  const auto ext = theorem1_hypothesis(plus_minus_one, 1, CircularRegion::exterior(0.0, 1.0, true));
  CHECK_FALSE(ext.holds);
  CHECK(ext.derivative_roots.roots == PointSet{0.0});
  CHECK_FALSE(ext.diagnostic.empty());

  CHECK(kind_of([] { theorem1_hypothesis(PointSet{1.0}, 2, CircularRegion::disk(0.0, 1.0)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("coincidence counterexample", "[coincidence]") {
  // 0 = P(-1, 1) = 2z only at z = 0.
  CHECK(std::abs(coincidence_witness(e1_on_2, plus_minus_one, CircularRegion::disk(0.0, 1.0, true))) < 1e-10);
  const auto exterior = CircularRegion::exterior(0.0, 1.0, true);
  CHECK(kind_of([&] { coincidence_witness(e1_on_2, plus_minus_one, exterior); }) == ErrorKind::HypothesisViolated);
  CoincidenceOptions force;
  force.enforce_hypothesis = false;
  CHECK(kind_of([&] { coincidence_witness(e1_on_2, plus_minus_one, exterior, force); }) == ErrorKind::TheoremViolation);
  CoincidenceOptions classic;
  classic.classic = true;
  // Classical form needs m = n; the points themselves are in S.
  CHECK(kind_of([&] { coincidence_witness(e1_on_2, plus_minus_one, exterior, classic); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("classical Walsh witnesses", "[coincidence][property]") {
  oracle::Random rng(52);
  CoincidenceOptions classic;
  classic.classic = true;
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(1, 10);
    auto E = rng.boxes(n + 1);
    E.back() += 2.0;
    const SymmetricMultiaffine P(n, E);
    const auto w = rng.boxes(n);
    const Disk d = smallest_enclosing_disk(w);
    const auto S = CircularRegion::disk(d.center, d.radius + 1e-12);
    const auto res = coincidence_report(P, w, S, classic);
    CHECK(S.contains(res.point));
    CHECK(oracle::rel(eval(diagonal(P), res.point), res.value, eval_scale(diagonal(P), res.point)) < 1e-10);
  }
}

TEST_CASE("degenerate constant P", "[coincidence]") {
  const SymmetricMultiaffine P(3, {2.0 + 1i});
  const auto S = CircularRegion::disk(1.0 + 1i, 0.5);
  const auto res = coincidence_report(P, PointSet{0.0, 1.0, 2.0}, S);
  CHECK(res.degenerate);
  CHECK(res.point == 1.0 + 1i);
}

TEST_CASE("apolarity residual of the diagonal", "[coincidence]") {
  CHECK(theorem1_apolarity_residual(e1_on_2, plus_minus_one) == 0.0);
  // Hand check: q' = 2z, r = 2z at frame 1, A = 0*2 - 2*0 = 0.
  const Polynomial qd = derivative(from_roots(plus_minus_one), 1);
  CHECK(qd == Polynomial{0.0, 2.0});
  CHECK(apolarity_functional(qd, diagonal(e1_on_2), 1) == Complex{0.0});
}

TEST_CASE("proof identity on random instances", "[coincidence][property]") {
  oracle::Random rng(53);
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.integer(1, 12);
    const int m = t % 5 == 0 ? n : rng.integer(1, n);
    auto E = rng.boxes(m + 1);
    E.back() += 1.5;
    const SymmetricMultiaffine P(n, E, m);
    const auto w = rng.boxes(n, 1.5);
    CHECK(theorem1_apolarity_residual(P, w) <= 1e-10);
  }
}

TEST_CASE("derivative hypothesis is weaker than enclosing the points", "[coincidence][property]") {
  oracle::Random rng(54);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.integer(2, 12);
    const int m = rng.integer(1, n);
    const auto w = rng.boxes(n);
    const auto crit = find_roots(derivative(from_roots(w), n - m)).roots;
    CHECK(smallest_enclosing_disk(crit).radius <= smallest_enclosing_disk(w).radius + 1e-9);
  }
}
