#include "lnrelay/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lnrelay/numerics.hpp"

namespace lnrelay::channel {

namespace {
constexpr double kLn10Over5 = 0.460517018598809136803598290936873;  // ln(10)/5
}

void FadingParams::validate() const {
  if (!std::isfinite(mu_db)) throw std::domain_error("FadingParams: mu_db must be finite");
  if (!(sigma_db > 0.0) || !std::isfinite(sigma_db)) {
    throw std::domain_error("FadingParams: sigma_db must be positive and finite");
  }
}

double pdf_gain_sq(double z, const FadingParams& p) {
  p.validate();
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::domain_error("pdf_gain_sq: z must be positive and finite");
  }
  const double var = p.sigma_db * p.sigma_db;
  const double t = kXi * std::log(z) - 2.0 * p.mu_db;
  return kXi / (z * std::sqrt(8.0 * std::numbers::pi * var)) *
         std::exp(-t * t / (8.0 * var));
}

double cdf_gain_sq(double w, const FadingParams& p) {
  p.validate();
  if (w < 0.0 || !std::isfinite(w)) {
    throw std::domain_error("cdf_gain_sq: w must be non-negative and finite");
  }
  if (w == 0.0) return 0.0;
  const double t =
      (kXi * std::log(w) - 2.0 * p.mu_db) / (2.0 * std::numbers::sqrt2 * p.sigma_db);
  return 0.5 * numerics::erfc(-t);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_index),
                    static_cast<std::uint32_t>(stream_index >> 32)};
  engine_.seed(seq);
}

double RandomStream::uniform() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
}

double RandomStream::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

double sample_gain_sq(RandomStream& rng, const FadingParams& p) {
  p.validate();
  const double g_db = p.mu_db + p.sigma_db * rng.gaussian();
  return std::exp(g_db * kLn10Over5);
}

}  // namespace lnrelay::channel
