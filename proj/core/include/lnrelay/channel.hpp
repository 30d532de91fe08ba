#pragma once

#include <cstdint>
#include <random>

namespace lnrelay::channel {

/// dB scaling constant xi = 10 / ln(10).
inline constexpr double kXi = 4.342944819032518276511289189166051;

/// Log-normal fading parameters of one hop: mean and standard deviation, in
/// dB, of 10*log10(h) where h is the channel amplitude. The squared gain
/// h^2 then has 10*log10(h^2) ~ Normal(2*mu_db, (2*sigma_db)^2).
struct FadingParams {
  double mu_db;     ///< mean of 10*log10(h)  [dB]
  double sigma_db;  ///< std deviation of 10*log10(h)  [dB], > 0

  void validate() const;
};

/// Density of the squared channel gain h^2 at z > 0.
double pdf_gain_sq(double z, const FadingParams& p);

/// P{h^2 <= w} for w >= 0. Evaluated through erfc so both tails keep full
/// relative precision.
double cdf_gain_sq(double w, const FadingParams& p);

/// Deterministic pseudo-random stream.
///
/// Seed contract: the (seed, stream_index) pair fully determines the output
/// sequence. The mt19937_64 engine (> 128 bits of state) is seeded through
/// std::seed_seq with the four 32-bit words of (seed, stream_index); both
/// seed_seq and the engine initialization are fully specified by the
/// standard, so the raw 64-bit stream is reproducible everywhere. Gaussian
/// variates come from an explicit Box-Muller transform over that stream
/// (no library distribution objects), one uniform pair per two variates.
/// Independent streams are obtained by varying stream_index; each stream
/// must be owned by exactly one thread.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  /// Uniform draw in (0, 1], 53-bit resolution.
  double uniform();

  /// Standard normal draw.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// One draw of the squared channel gain: h^2 = 10^{G/5} where G is a
/// Gaussian(mu_db, sigma_db^2) draw of 10*log10(h). Identical (seed,
/// stream_index) yields an identical sample sequence.
double sample_gain_sq(RandomStream& rng, const FadingParams& p);

}  // namespace lnrelay::channel
