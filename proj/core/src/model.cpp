#include "lnrelay/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lnrelay::model {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

void SystemConfig::validate() const {
  require_positive(ps, "SystemConfig: ps");
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::domain_error("SystemConfig: eta must lie in (0, 1]");
  }
  if (!(m >= 1.0) || !std::isfinite(m)) {
    throw std::domain_error("SystemConfig: m must be >= 1 and finite");
  }
  require_positive(d1, "SystemConfig: d1");
  require_positive(d2, "SystemConfig: d2");
  require_positive(noise_relay, "SystemConfig: noise_relay");
  require_positive(noise_dest, "SystemConfig: noise_dest");
  if (noise_antenna < 0.0 || noise_conversion < 0.0) {
    throw std::domain_error("SystemConfig: noise components must be >= 0");
  }
  if (noise_antenna > 0.0 || noise_conversion > 0.0) {
    const double sum = noise_antenna + noise_conversion;
    if (std::abs(sum - noise_relay) > 1e-12 * std::max(1.0, noise_relay)) {
      throw std::domain_error(
          "SystemConfig: noise_relay must equal noise_antenna + noise_conversion");
    }
  }
  require_positive(block_time, "SystemConfig: block_time");
  hop1.validate();
  hop2.validate();
}

const char* name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kTsr: return "tsr";
    case ProtocolKind::kPsr: return "psr";
    case ProtocolKind::kIrr: return "irr";
  }
  return "?";
}

Protocol Protocol::tsr(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw std::domain_error("Protocol: tau must lie strictly inside (0, 1)");
  }
  return Protocol(ProtocolKind::kTsr, tau);
}

Protocol Protocol::psr(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::domain_error("Protocol: rho must lie strictly inside (0, 1)");
  }
  return Protocol(ProtocolKind::kPsr, rho);
}

Protocol Protocol::irr() { return Protocol(ProtocolKind::kIrr, 0.0); }

double Protocol::factor() const {
  if (kind_ == ProtocolKind::kIrr) {
    throw std::logic_error("Protocol: IRR has no factor");
  }
  return factor_;
}

double relay_power(double x, const SystemConfig& cfg, const Protocol& proto) {
  cfg.validate();
  if (!(x > 0.0)) throw std::domain_error("relay_power: x must be > 0");
  const double base = cfg.eta * cfg.ps * x / std::pow(cfg.d1, cfg.m);
  switch (proto.kind()) {
    case ProtocolKind::kTsr: {
      const double tau = proto.factor();
      return 2.0 * tau / (1.0 - tau) * base;
    }
    case ProtocolKind::kPsr:
      return proto.factor() * base;
    case ProtocolKind::kIrr:
      return base;
  }
  return 0.0;  // unreachable
}

double harvested_energy(double x, const SystemConfig& cfg, const Protocol& proto) {
  cfg.validate();
  if (!(x > 0.0)) throw std::domain_error("harvested_energy: x must be > 0");
  const double base = cfg.eta * cfg.ps * x / std::pow(cfg.d1, cfg.m);
  switch (proto.kind()) {
    case ProtocolKind::kTsr:
      return proto.factor() * cfg.block_time * base;
    case ProtocolKind::kPsr:
      return proto.factor() * cfg.block_time / 2.0 * base;
    case ProtocolKind::kIrr:
      return cfg.block_time / 2.0 * base;
  }
  return 0.0;  // unreachable
}

SnrPair snrs(double x, double y, const SystemConfig& cfg, const Protocol& proto) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::domain_error("snrs: gains must be > 0");
  }
  double gamma_r = cfg.ps * x / (std::pow(cfg.d1, cfg.m) * cfg.noise_relay);
  if (proto.kind() == ProtocolKind::kPsr) gamma_r *= 1.0 - proto.factor();
  const double gamma_d =
      relay_power(x, cfg, proto) * y / (std::pow(cfg.d2, cfg.m) * cfg.noise_dest);
  return SnrPair{gamma_r, gamma_d};
}

double capacity(double gamma, const Protocol& proto) {
  if (!(gamma >= 0.0)) throw std::domain_error("capacity: gamma must be >= 0");
  const double rate = std::log2(1.0 + gamma);
  if (proto.kind() == ProtocolKind::kTsr) {
    return 0.5 * (1.0 - proto.factor()) * rate;
  }
  return 0.5 * rate;
}

OutageConstants outage_constants(const SystemConfig& cfg, const Protocol& proto,
                                 double c_th) {
  cfg.validate();
  if (!(c_th >= 0.0) || !std::isfinite(c_th)) {
    throw std::domain_error("outage_constants: c_th must be >= 0 and finite");
  }
  const double d1m = std::pow(cfg.d1, cfg.m);
  const double d2m = std::pow(cfg.d2, cfg.m);
  switch (proto.kind()) {
    case ProtocolKind::kTsr: {
      const double tau = proto.factor();
      const double u = std::exp2(2.0 * c_th / (1.0 - tau)) - 1.0;
      const double omega = d1m * cfg.noise_relay / cfg.ps;
      const double lambda =
          (1.0 - tau) * d1m * d2m * cfg.noise_dest / (2.0 * cfg.eta * tau * cfg.ps);
      return OutageConstants{u, omega, lambda};
    }
    case ProtocolKind::kPsr: {
      const double rho = proto.factor();
      const double r = std::exp2(2.0 * c_th) - 1.0;
      const double xi_scale = d1m * cfg.noise_relay / ((1.0 - rho) * cfg.ps);
      const double upsilon = d1m * d2m * cfg.noise_dest / (cfg.eta * rho * cfg.ps);
      return OutageConstants{r, xi_scale, upsilon};
    }
    case ProtocolKind::kIrr: {
      const double r = std::exp2(2.0 * c_th) - 1.0;
      const double omega = d1m * cfg.noise_relay / cfg.ps;
      const double k = d1m * d2m * cfg.noise_dest / (cfg.eta * cfg.ps);
      return OutageConstants{r, omega, k};
    }
  }
  return OutageConstants{};  // unreachable
}

}  // namespace lnrelay::model
