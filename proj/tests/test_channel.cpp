#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lnrelay/channel.hpp"
#include "support/approx.hpp"
#include "support/oracles.hpp"

using namespace lnrelay;

namespace {

const channel::FadingParams kDefault{3.0, std::sqrt(3.0)};

// One-sample Kolmogorov-Smirnov statistic of draws against the analytic CDF.
double ks_statistic(std::vector<double> draws, const channel::FadingParams& p) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = channel::cdf_gain_sq(draws[i], p);
    d = std::max(d, std::abs(f - (i + 1) / n));
    d = std::max(d, std::abs(f - i / n));
  }
  return d;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("pdf integrates to one") {
  // log substitution z = e^t keeps the integrand well scaled
  auto g = [&](double t) {
    return channel::pdf_gain_sq(std::exp(t), kDefault) * std::exp(t);
  };
  const double half_width = 9.0 * 2.0 * kDefault.sigma_db / channel::kXi;
  const double center = 2.0 * kDefault.mu_db / channel::kXi;
  const double mass =
      testing::simpson(g, center - half_width, center + half_width, 20000);
  CHECK_ABS(mass, 1.0, 1e-8);
}

TEST_CASE("pdf peaks at the log-normal mode") {
  for (const auto& p : {kDefault, channel::FadingParams{0.0, 2.0},
                        channel::FadingParams{-4.0, 0.7}}) {
    const double mode =
        std::exp((2.0 * p.mu_db - 4.0 * p.sigma_db * p.sigma_db / channel::kXi) /
                 channel::kXi);
    const double peak = channel::pdf_gain_sq(mode, p);
    CHECK(peak >= channel::pdf_gain_sq(mode * 1.1, p));
    CHECK(peak >= channel::pdf_gain_sq(mode / 1.1, p));
  }
}

TEST_CASE("pdf and cdf reject out-of-domain arguments") {
  CHECK_THROWS_AS(channel::pdf_gain_sq(0.0, kDefault), std::domain_error);
  CHECK_THROWS_AS(channel::pdf_gain_sq(-1.0, kDefault), std::domain_error);
  CHECK_THROWS_AS(channel::cdf_gain_sq(-0.5, kDefault), std::domain_error);
  CHECK_THROWS_AS(channel::pdf_gain_sq(1.0, channel::FadingParams{3.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("cdf boundary and median") {
  CHECK(channel::cdf_gain_sq(0.0, kDefault) == 0.0);
  // median of h^2 is 10^{mu/5}, independent of sigma
  const double median = std::pow(10.0, kDefault.mu_db / 5.0);
  CHECK_ABS(channel::cdf_gain_sq(median, kDefault), 0.5, 1e-12);
}

TEST_CASE("cdf is nondecreasing with range [0, 1)") {
  double prev = 0.0;
  for (double w = 1e-4; w < 1e4; w *= 1.37) {
    const double f = channel::cdf_gain_sq(w, kDefault);
    CHECK(f >= prev);
    CHECK(f >= 0.0);
    // the open upper end is exact until double precision saturates (~37 dB
    // above the mean for the default spread)
    if (w < 2e3) CHECK(f < 1.0);
    CHECK(f <= 1.0);
    prev = f;
  }
}

TEST_CASE("cdf differentiates to the pdf") {
  for (int i = 0; i <= 60; ++i) {
    const double z = std::pow(10.0, -3.0 + 6.0 * i / 60.0);
    const double h = 1e-4 * z;
    const double deriv = (channel::cdf_gain_sq(z + h, kDefault) -
                          channel::cdf_gain_sq(z - h, kDefault)) /
                         (2.0 * h);
    const double pdf = channel::pdf_gain_sq(z, kDefault);
    // cdf values near 1 carry an irreducible ulp-level rounding floor
    const double roundoff = 2.3e-16 / h;
    CHECK(std::abs(deriv - pdf) <= 1e-6 * pdf + roundoff);
  }
}

TEST_CASE("sampler moments match the closed-form log-normal mean") {
  channel::RandomStream rng(42);
  const long n = 10000000;
  double sum = 0.0;
  for (long i = 0; i < n; ++i) sum += channel::sample_gain_sq(rng, kDefault);
  const double c = std::log(10.0) / 5.0;
  const double expected =
      std::exp(c * kDefault.mu_db + c * c * kDefault.sigma_db * kDefault.sigma_db / 2.0);
  CHECK(sum / n == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("sampler degenerates to the median as sigma vanishes") {
  channel::RandomStream rng(5);
  const channel::FadingParams tight{3.0, 1e-9};
  const double median = std::pow(10.0, 0.6);
  for (int i = 0; i < 1000; ++i) {
    CHECK(channel::sample_gain_sq(rng, tight) ==
          doctest::Approx(median).epsilon(1e-6));
  }
}

TEST_CASE("empirical cdf hits one half at the median") {
  channel::RandomStream rng(17);
  const double median = std::pow(10.0, 0.6);
  const long n = 1000000;
  long below = 0;
  for (long i = 0; i < n; ++i) below += channel::sample_gain_sq(rng, kDefault) < median;
  CHECK_ABS(static_cast<double>(below) / n, 0.5, 0.001);
}

TEST_CASE("empirical cdf matches the analytic cdf at a fixed point") {
  channel::RandomStream rng(23);
  const double w = 10.0;
  const long n = 10000000;
  long below = 0;
  for (long i = 0; i < n; ++i) below += channel::sample_gain_sq(rng, kDefault) < w;
  const double p = channel::cdf_gain_sq(w, kDefault);
  const double bound = 4.0 * std::sqrt(p * (1.0 - p) / n);
  CHECK_ABS(static_cast<double>(below) / n, p, bound);
}

TEST_CASE("histogram of draws matches the pdf bin masses") {
  channel::RandomStream rng(31);
  const long n = 10000000;
  const int bins = 40;
  // cover z in [0.2, 80]: ~99.8% of the mass for the default parameters
  const double lo = std::log(0.2);
  const double hi = std::log(80.0);
  std::vector<long> counts(bins, 0);
  for (long i = 0; i < n; ++i) {
    const double t = std::log(channel::sample_gain_sq(rng, kDefault));
    if (t < lo || t >= hi) continue;
    ++counts[static_cast<int>(bins * (t - lo) / (hi - lo))];
  }
  for (int b = 0; b < bins; ++b) {
    const double za = std::exp(lo + (hi - lo) * b / bins);
    const double zb = std::exp(lo + (hi - lo) * (b + 1) / bins);
    const double p = testing::simpson(
        [&](double z) { return channel::pdf_gain_sq(z, kDefault); }, za, zb, 200);
    const double sigma = std::sqrt(n * p * (1.0 - p));
    CHECK_ABS(static_cast<double>(counts[b]), n * p, 3.0 * sigma);
  }
}

TEST_CASE("draws pass a Kolmogorov-Smirnov test against the cdf") {
  channel::RandomStream rng(57);
  std::vector<double> draws(1000000);
  for (auto& d : draws) d = channel::sample_gain_sq(rng, kDefault);
  // 1% critical value: 1.628 / sqrt(n)
  CHECK(ks_statistic(std::move(draws), kDefault) < 1.628 / 1000.0);
}

TEST_CASE("scaling a draw by c shifts mu by 5*log10(c)") {
  channel::RandomStream rng(58);
  const double c = 4.0;
  std::vector<double> draws(1000000);
  for (auto& d : draws) d = c * channel::sample_gain_sq(rng, kDefault);
  const channel::FadingParams shifted{kDefault.mu_db + 5.0 * std::log10(c),
                                      kDefault.sigma_db};
  CHECK(ks_statistic(std::move(draws), shifted) < 1.628 / 1000.0);
}

TEST_CASE("streams are reproducible and distinct") {
  channel::RandomStream a(7, 0);
  channel::RandomStream b(7, 0);
  channel::RandomStream c(7, 1);
  channel::RandomStream d(8, 0);
  bool distinct_stream = false;
  bool distinct_seed = false;
  for (int i = 0; i < 100; ++i) {
    const double va = a.gaussian();
    CHECK(va == b.gaussian());
    distinct_stream |= va != c.gaussian();
    distinct_seed |= va != d.gaussian();
  }
  CHECK(distinct_stream);
  CHECK(distinct_seed);
}

}  // TEST_SUITE
