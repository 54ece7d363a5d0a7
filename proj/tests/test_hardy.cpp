#include <doctest.h>

#include <numbers>

#include "fockalg/errors.hpp"
#include "fockalg/hardy.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fockalg;

TEST_CASE("hardy: harmonic coefficients") {
  const ScalarSeries f = harmonic_series(2);
  CHECK(f.order() == 2);
  CHECK(f[0] == Complex(1.0));
  CHECK(f[1].real() == doctest::Approx(0.5));
  CHECK(f[2].real() == doctest::Approx(1.0 / 3.0));
  CHECK(f[7] == Complex(0.0));
  // the squared l2 norm approaches pi^2/6 with tail below 1/(K+1)
  const double tail = std::numbers::pi * std::numbers::pi / 6.0 - std::pow(harmonic_series(4000).l2_norm(), 2);
  CHECK(tail > 0.0);
  CHECK(tail < 1.0 / 4001.0);
}

TEST_CASE("hardy: reciprocal of the harmonic series") {
  const ScalarSeries g = reciprocal(harmonic_series(10), 10);
  CHECK(g[0].real() == doctest::Approx(1.0));
  CHECK(g[1].real() == doctest::Approx(-0.5));
  CHECK(g[2].real() == doctest::Approx(-1.0 / 12.0));
  const ScalarSeries one = ScalarSeries::constant(1.0);
  CHECK(reciprocal(one, 5).coeffs == ScalarSeries::Coefficients::Unit(6, 0));
  CHECK_THROWS_AS(reciprocal(ScalarSeries::z(), 3), HypothesisViolation);
}

TEST_CASE("hardy: Cauchy product matches the oracle and inverts") {
  gen::Source src(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index order = src.uniform(0, 20);
    ScalarSeries::Coefficients a(order + 1), b(order + 1);
    for (Eigen::Index k = 0; k <= order; ++k) {
      a(k) = src.complex();
      b(k) = src.complex();
    }
    a(0) += 3.0; // keep the constant term away from zero
    const ScalarSeries s(a), t(b);
    const auto want = oracle::series_product({a.data(), a.data() + a.size()}, {b.data(), b.data() + b.size()},
                                             static_cast<std::size_t>(order));
    const ScalarSeries got = cauchy_product(s, t, order);
    for (Eigen::Index k = 0; k <= order; ++k) CHECK(std::abs(got[k] - want[static_cast<std::size_t>(k)]) < 1e-12);

    const ScalarSeries inv = reciprocal(s, order);
    const ScalarSeries unit = cauchy_product(s, inv, order);
    CHECK(std::abs(unit[0] - 1.0) < 1e-12);
    for (Eigen::Index k = 1; k <= order; ++k) CHECK(std::abs(unit[k]) < 1e-12);
    CHECK((reciprocal(inv, order).coeffs - s.coeffs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hardy: boundary modulus formula") {
  CHECK(boundary_modulus(std::numbers::pi) == doctest::Approx(std::log(2.0)));
  CHECK(boundary_modulus(-1.0) == doctest::Approx(boundary_modulus(1.0)));
  CHECK_THROWS_AS(boundary_modulus(0.0), std::domain_error);
  // partial sums at z = -1 alternate around log 2 with error below 1/(K+2)
  const ScalarSeries f = harmonic_series(5000);
  CHECK(std::abs(std::abs(evaluate(f, Complex(-1.0))) - std::log(2.0)) < 1.0 / 5002.0);
  // series at 0.999 e^{i pi/2}, 20000 terms (tail below 0.999^20000)
  const Complex z = std::polar(0.999, std::numbers::pi / 2.0);
  CHECK(std::abs(std::abs(evaluate(harmonic_series(20000), z)) - boundary_modulus(std::numbers::pi / 2.0)) < 1e-2);
}

TEST_CASE("hardy: closed form agrees with the series inside the disc") {
  gen::Source src(13);
  const ScalarSeries f = harmonic_series(400);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex z = std::polar(src.real(0.0, 0.9), src.real(-3.14, 3.14));
    CHECK(std::abs(evaluate(f, z) - harmonic_closed_form(z)) < 1e-12);
  }
  CHECK(harmonic_closed_form(0.0) == Complex(1.0));
}

TEST_CASE("hardy: partial sum sups") {
  const ScalarSeries f = harmonic_series(1000);
  double h11 = 0.0;
  for (int k = 1; k <= 11; ++k) h11 += 1.0 / k;
  CHECK(partial_sum_sup(f, 10, 64) == doctest::Approx(h11));
  CHECK(partial_sum_sup(f, 1000, 1024) / partial_sum_sup(f, 10, 1024) > 2.0);
  double prev = 0.0;
  for (int m : {1, 5, 10, 50, 100, 500, 1000}) {
    const double s = partial_sum_sup(f, m, 256);
    CHECK(s >= prev);
    prev = s;
  }
  CHECK(partial_sum_sup(ScalarSeries::constant(1.0), 0, 16) == doctest::Approx(1.0));
  CHECK_THROWS_AS(partial_sum_sup(f, 10, 4), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum_sup(f, 2000, 16), std::invalid_argument);
}
