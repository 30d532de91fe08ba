#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "lnrelay/numerics.hpp"
#include "support/approx.hpp"
#include "support/oracles.hpp"

using namespace lnrelay;

TEST_SUITE("numerics") {

TEST_CASE("erf fixed points and symmetry") {
  CHECK(numerics::erf(0.0) == 0.0);
  CHECK_ABS(numerics::erf(-0.7), -numerics::erf(0.7), 1e-15);
  CHECK_ABS(numerics::erf(1.0), 0.842700792949715, 1e-12);
}

TEST_CASE("erf matches the series oracle") {
  for (double x = -6.0; x <= 6.001; x += 0.37) {
    CHECK_ABS(numerics::erf(x), testing::erf_series(x), 1e-13);
  }
}

TEST_CASE("erf rejects non-finite input") {
  CHECK_THROWS_AS(numerics::erf(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
  CHECK_THROWS_AS(numerics::erf(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("erf is increasing and bounded") {
  // strict increase holds while successive increments exceed one ulp; past
  // |x| ~ 5.8 double precision saturates at +-1
  double prev = numerics::erf(-5.0);
  for (double x = -4.99; x <= 5.0; x += 0.01) {
    const double v = numerics::erf(x);
    CHECK(v > prev);
    CHECK(std::abs(v) < 1.0);
    prev = v;
  }
}

TEST_CASE("erfc identities") {
  CHECK(numerics::erfc(0.0) == 1.0);
  CHECK_ABS(numerics::erfc(2.5) + numerics::erf(2.5), 1.0, 1e-12);
  CHECK_ABS(numerics::erfc(3.0), 2.20904969985854e-5, 1e-14);
  CHECK_THROWS_AS(numerics::erfc(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("erfc keeps relative precision in the tail") {
  for (double x : {1.0, 2.0, 3.0, 4.0, 5.5, 6.0, 7.0, 8.0}) {
    const double ref = testing::erfc_continued_fraction(x);
    CHECK(std::abs(numerics::erfc(x) - ref) / ref <= 1e-10);
  }
}

TEST_CASE("gaussian integral of the unit weight") {
  auto one = [](double) { return 1.0; };
  const auto whole = numerics::gauss_weighted_integral(-9.0, one);
  CHECK_ABS(whole.value, 1.0, 1e-10);
  CHECK(whole.evaluations > 0);
  CHECK(whole.abs_error_estimate >= 0.0);

  const auto half = numerics::gauss_weighted_integral(0.0, one);
  CHECK_ABS(half.value, 0.5, 1e-10);
}

TEST_CASE("gaussian integral of an erf weight against the brute-force oracle") {
  auto weight = [](double u) { return 0.5 * (1.0 + std::erf(-u)); };
  auto integrand = [&](double u) {
    return std::exp(-u * u) * weight(u) / std::sqrt(M_PI);
  };
  const double oracle = testing::simpson(integrand, -9.0, 9.0, 200000);
  CHECK_ABS(oracle, 0.5, 1e-9);

  const auto quad = numerics::gauss_weighted_integral(-9.0, weight);
  CHECK_ABS(quad.value, oracle, 1e-9);
  CHECK_ABS(quad.value, 0.5, 1e-9);
}

TEST_CASE("bounded weights keep the result inside the half-gaussian mass") {
  std::mt19937 gen(123);
  std::uniform_real_distribution<double> u0_dist(-4.0, 4.0);
  std::uniform_real_distribution<double> a_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> b_dist(0.2, 5.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double u0 = u0_dist(gen);
    const double a = a_dist(gen);
    const double b = b_dist(gen);
    auto weight = [a, b](double u) { return 0.5 * (1.0 + std::erf(a - b * u)); };
    const auto result = numerics::gauss_weighted_integral(u0, weight);
    const double cap = 0.5 * numerics::erfc(u0);
    CHECK(result.value >= -1e-12);
    CHECK(result.value <= cap + result.abs_error_estimate + 1e-12);
    CHECK(result.value <= 1.0 + 1e-12);
  }
}

TEST_CASE("exhausted budget raises a convergence error with the best estimate") {
  auto nasty = [](double u) {
    const double s = std::sin(3000.0 * u);
    return s * s;
  };
  numerics::QuadOptions opts;
  opts.max_evaluations = 400;
  try {
    numerics::gauss_weighted_integral(-9.0, nasty, opts);
    FAIL("expected QuadConvergenceError");
  } catch (const numerics::QuadConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate().value));
    CHECK(e.best_estimate().evaluations <= 400);
    CHECK(e.best_estimate().evaluations > 0);
  }
}

TEST_CASE("non-finite u0 is rejected") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(
      numerics::gauss_weighted_integral(std::numeric_limits<double>::infinity(), one),
      std::domain_error);
}

}  // TEST_SUITE
