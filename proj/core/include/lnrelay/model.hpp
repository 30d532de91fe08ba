#pragma once

#include "lnrelay/channel.hpp"

namespace lnrelay::model {

using channel::FadingParams;

/// sqrt(3) dB, i.e. a 10*log10(h) variance of 3 dB^2.
inline constexpr double kDefaultSigmaDb = 1.732050807568877293527446341506;

/// System-level parameters. Defaults follow the standard indoor evaluation
/// setup: 1 W source, unit harvester efficiency, path-loss exponent 2,
/// 5 m hops, 0.01 W noise at both receivers, 3 dB mean / 3 dB^2 variance
/// fading on each hop.
struct SystemConfig {
  double ps = 1.0;                  ///< source transmit power [W]
  double eta = 1.0;                 ///< energy-harvester efficiency, (0, 1]
  double m = 2.0;                   ///< path-loss exponent, >= 1
  double d1 = 5.0;                  ///< source-relay distance [m]
  double d2 = 5.0;                  ///< relay-destination distance [m]
  double noise_relay = 0.01;        ///< total relay noise variance sigma_r^2 [W]
  double noise_dest = 0.01;         ///< destination noise variance sigma_d^2 [W]
  double noise_antenna = 0.005;     ///< relay antenna noise component [W]
  double noise_conversion = 0.005;  ///< relay conversion noise component [W]
  FadingParams hop1{3.0, kDefaultSigmaDb};
  FadingParams hop2{3.0, kDefaultSigmaDb};
  double block_time = 1.0;  ///< T [s]; cancels everywhere except harvested_energy

  void validate() const;
};

enum class ProtocolKind { kTsr, kPsr, kIrr };

/// Returns "tsr", "psr" or "irr".
const char* name(ProtocolKind kind);

/// Relaying protocol choice. TSR carries the harvesting-time factor tau,
/// PSR the power-splitting factor rho; both are required to lie strictly
/// inside (0, 1). IRR has no factor.
class Protocol {
 public:
  static Protocol tsr(double tau);
  static Protocol psr(double rho);
  static Protocol irr();

  ProtocolKind kind() const noexcept { return kind_; }
  bool has_factor() const noexcept { return kind_ != ProtocolKind::kIrr; }

  /// tau or rho; throws std::logic_error for IRR.
  double factor() const;

 private:
  Protocol(ProtocolKind kind, double factor) : kind_(kind), factor_(factor) {}

  ProtocolKind kind_;
  double factor_;
};

/// Linear SNRs of one channel realization.
struct SnrPair {
  double gamma_r;  ///< at the relay
  double gamma_d;  ///< at the destination
};

/// Constants of the outage events: the first hop supports the threshold iff
/// x >= first_hop_scale * threshold_snr, and the second hop fails iff
/// y < second_hop_scale * threshold_snr / x.
struct OutageConstants {
  double threshold_snr;
  double first_hop_scale;
  double second_hop_scale;
};

/// Relay transmit power [W] for squared first-hop gain x.
double relay_power(double x, const SystemConfig& cfg, const Protocol& proto);

/// Energy harvested over one block [J] for squared first-hop gain x.
double harvested_energy(double x, const SystemConfig& cfg, const Protocol& proto);

/// Relay and destination SNRs for squared gains (x, y). The destination SNR
/// is computed as relay_power(x) * y / (d2^m * noise_dest), so the two
/// formulations coincide exactly.
SnrPair snrs(double x, double y, const SystemConfig& cfg, const Protocol& proto);

/// Instantaneous capacity [bit/s/Hz] at linear SNR gamma: the half-block
/// prefactor is (1 - tau)/2 for TSR and 1/2 for PSR and IRR.
double capacity(double gamma, const Protocol& proto);

/// Threshold SNR and the two hop scales for capacity threshold c_th >= 0.
OutageConstants outage_constants(const SystemConfig& cfg, const Protocol& proto,
                                 double c_th);

}  // namespace lnrelay::model
