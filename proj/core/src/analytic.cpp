#include "lnrelay/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lnrelay::analytic {

namespace {
constexpr double kTwoSqrt2 = 2.0 * std::numbers::sqrt2;
}

double first_hop_success(const model::SystemConfig& cfg, const model::Protocol& proto,
                         double c_th) {
  const auto k = model::outage_constants(cfg, proto, c_th);
  const double lower = k.first_hop_scale * k.threshold_snr;
  if (lower <= 0.0) return 1.0;                // c_th = 0: always supported
  if (std::isinf(lower)) return 0.0;           // diverging threshold
  const double t = (channel::kXi * std::log(lower) - 2.0 * cfg.hop1.mu_db) /
                   (kTwoSqrt2 * cfg.hop1.sigma_db);
  return 0.5 * numerics::erfc(t);
}

numerics::QuadResult second_term(const model::SystemConfig& cfg,
                                 const model::Protocol& proto, double c_th,
                                 const numerics::QuadOptions& options) {
  const auto k = model::outage_constants(cfg, proto, c_th);
  if (!(c_th > 0.0)) return numerics::QuadResult{};  // empty event at zero threshold
  if (!(k.threshold_snr > 0.0)) return numerics::QuadResult{};

  const double lower = k.first_hop_scale * k.threshold_snr;
  if (std::isinf(lower)) return numerics::QuadResult{};  // first hop never succeeds

  const double mu1 = cfg.hop1.mu_db;
  const double sigma1 = cfg.hop1.sigma_db;
  const double mu2 = cfg.hop2.mu_db;
  const double sigma2 = cfg.hop2.sigma_db;

  const double u0 = (channel::kXi * std::log(lower) - 2.0 * mu1) / (kTwoSqrt2 * sigma1);
  const double dest_bound = k.second_hop_scale * k.threshold_snr;
  const double a =
      (channel::kXi * std::log(dest_bound) - 2.0 * mu1 - 2.0 * mu2) / (kTwoSqrt2 * sigma2);
  const double b = sigma1 / sigma2;

  if (!std::isfinite(a)) {
    // Degenerate bound: the second-hop CDF is identically 0 or 1 on the
    // whole integration range.
    const double flat = a > 0.0 ? 1.0 : 0.0;
    return numerics::gauss_weighted_integral(
        u0, [flat](double) { return flat; }, options);
  }

  auto weight = [a, b](double u) { return 0.5 * (1.0 + std::erf(a - b * u)); };
  return numerics::gauss_weighted_integral(u0, weight, options);
}

OutageValue outage(const model::SystemConfig& cfg, const model::Protocol& proto,
                   double c_th, const numerics::QuadOptions& options) {
  const double o1 = first_hop_success(cfg, proto, c_th);
  if (!(c_th > 0.0)) return OutageValue{0.0, 0.0, o1, 0.0};

  const auto q = second_term(cfg, proto, c_th, options);
  double p = 1.0 - o1 + q.value;

  const double clip = std::max(0.0 - p, p - 1.0);
  if (clip > 1e-12 + q.abs_error_estimate) {
    throw std::logic_error("outage: probability left [0, 1] beyond rounding");
  }
  p = std::clamp(p, 0.0, 1.0);
  return OutageValue{p, q.abs_error_estimate, o1, q.value};
}

}  // namespace lnrelay::analytic
