#include <cmath>

#include <stdexcept>

#include <doctest.h>

#include "lnrelay/analytic.hpp"
#include "lnrelay/optimize.hpp"

using namespace lnrelay;

namespace {

model::Protocol at_factor(model::ProtocolKind kind, double factor) {
  return kind == model::ProtocolKind::kTsr ? model::Protocol::tsr(factor)
                                           : model::Protocol::psr(factor);
}

// 1e-3-step brute force over [0.01, 0.99]
std::pair<double, double> dense_grid_argmin(const model::SystemConfig& cfg,
                                            model::ProtocolKind kind, double c_th) {
  double best_f = 0.0;
  double best_p = 2.0;
  for (int i = 10; i <= 990; ++i) {
    const double f = i / 1000.0;
    const double p = analytic::outage(cfg, at_factor(kind, f), c_th).probability;
    if (p < best_p) {
      best_p = p;
      best_f = f;
    }
  }
  return {best_f, best_p};
}

}  // namespace

TEST_SUITE("optimize") {

TEST_CASE("argument validation") {
  model::SystemConfig cfg;
  CHECK_THROWS_AS(optimize::optimize_factor(cfg, model::ProtocolKind::kIrr, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimize::optimize_factor(cfg, model::ProtocolKind::kTsr, 0.0),
                  std::domain_error);
}

TEST_CASE("the returned factor beats the endpoints") {
  model::SystemConfig cfg;
  for (auto kind : {model::ProtocolKind::kTsr, model::ProtocolKind::kPsr}) {
    const auto result = optimize::optimize_factor(cfg, kind, 1.0);
    const double lo = analytic::outage(cfg, at_factor(kind, 0.01), 1.0).probability;
    const double hi = analytic::outage(cfg, at_factor(kind, 0.99), 1.0).probability;
    CHECK(result.outage <= lo);
    CHECK(result.outage <= hi);
    CHECK(result.factor > 0.0);
    CHECK(result.factor < 1.0);
    CHECK(result.evaluations >= 99);
  }
}

TEST_CASE("the outage field is the re-evaluated objective") {
  model::SystemConfig cfg;
  const auto result = optimize::optimize_factor(cfg, model::ProtocolKind::kPsr, 1.0);
  const double check =
      analytic::outage(cfg, at_factor(model::ProtocolKind::kPsr, result.factor), 1.0)
          .probability;
  CHECK(std::abs(result.outage - check) <= 1e-12);
}

TEST_CASE("local optimality within one grid step") {
  model::SystemConfig cfg;
  for (auto kind : {model::ProtocolKind::kTsr, model::ProtocolKind::kPsr}) {
    const auto result = optimize::optimize_factor(cfg, kind, 1.0);
    const double up = std::min(0.99, result.factor + 0.01);
    const double down = std::max(0.01, result.factor - 0.01);
    CHECK(result.outage <=
          analytic::outage(cfg, at_factor(kind, up), 1.0).probability + 1e-12);
    CHECK(result.outage <=
          analytic::outage(cfg, at_factor(kind, down), 1.0).probability + 1e-12);
  }
}

TEST_CASE("agrees with a dense brute-force grid") {
  model::SystemConfig cfg;
  const auto result = optimize::optimize_factor(cfg, model::ProtocolKind::kTsr, 1.0);
  const auto [dense_f, dense_p] =
      dense_grid_argmin(cfg, model::ProtocolKind::kTsr, 1.0);
  CHECK(std::abs(result.factor - dense_f) <= 2e-3);
  CHECK(std::abs(result.outage - dense_p) <= 1e-6);
}

TEST_CASE("power-of-two noise and power rescaling moves nothing") {
  model::SystemConfig cfg;
  auto scaled = cfg;
  scaled.ps *= 4.0;
  scaled.noise_relay *= 4.0;
  scaled.noise_dest *= 4.0;
  scaled.noise_antenna *= 4.0;
  scaled.noise_conversion *= 4.0;
  const auto base = optimize::optimize_factor(cfg, model::ProtocolKind::kPsr, 1.0);
  const auto moved = optimize::optimize_factor(scaled, model::ProtocolKind::kPsr, 1.0);
  CHECK(std::abs(base.factor - moved.factor) <= 1e-6);
  CHECK(std::abs(base.outage - moved.outage) <= 1e-9);
}

TEST_CASE("idempotent") {
  model::SystemConfig cfg;
  const auto a = optimize::optimize_factor(cfg, model::ProtocolKind::kTsr, 2.0);
  const auto b = optimize::optimize_factor(cfg, model::ProtocolKind::kTsr, 2.0);
  CHECK(a.factor == b.factor);
  CHECK(a.outage == b.outage);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("a monotone objective flags the boundary") {
  model::SystemConfig cfg;
  cfg.d2 = 0.1;  // relay at the destination's doorstep: harvesting time only hurts
  const auto result = optimize::optimize_factor(cfg, model::ProtocolKind::kTsr, 1.0);
  CHECK(result.method_trace.boundary_suspect);
  CHECK(result.method_trace.grid_argmin == 0.01);
  CHECK(result.factor <= 0.02);
}

TEST_CASE("the outage curve is high at the ends and lower inside") {
  model::SystemConfig cfg;
  for (auto kind : {model::ProtocolKind::kTsr, model::ProtocolKind::kPsr}) {
    const auto result = optimize::optimize_factor(cfg, kind, 1.0);
    CHECK(analytic::outage(cfg, at_factor(kind, 0.01), 1.0).probability >
          result.outage);
    CHECK(analytic::outage(cfg, at_factor(kind, 0.99), 1.0).probability >
          result.outage);
  }
}

}  // TEST_SUITE
