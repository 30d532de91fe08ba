#include "lnrelay/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace lnrelay::optimize {

namespace {

model::Protocol at_factor(model::ProtocolKind kind, double factor) {
  return kind == model::ProtocolKind::kTsr ? model::Protocol::tsr(factor)
                                           : model::Protocol::psr(factor);
}

}  // namespace

OptimumResult optimize_factor(const model::SystemConfig& cfg, model::ProtocolKind kind,
                              double c_th) {
  if (kind == model::ProtocolKind::kIrr) {
    throw std::invalid_argument("optimize_factor: IRR has no factor to tune");
  }
  if (!(c_th > 0.0)) {
    throw std::domain_error("optimize_factor: c_th must be > 0");
  }
  cfg.validate();

  long evaluations = 0;
  auto objective = [&](double factor) {
    ++evaluations;
    return analytic::outage(cfg, at_factor(kind, factor), c_th);
  };

  // Coarse scan: 0.01, 0.02, ..., 0.99. Ties resolve to the first point.
  int best_index = 1;
  analytic::OutageValue best = objective(0.01);
  for (int i = 2; i <= 99; ++i) {
    const auto value = objective(i / 100.0);
    if (value.probability < best.probability) {
      best_index = i;
      best = value;
    }
  }
  const double grid_argmin = best_index / 100.0;
  const bool boundary_suspect = best_index == 1 || best_index == 99;

  // Golden-section refinement on the grid bracket around the argmin.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::max(kFactorMin, (best_index - 1) / 100.0);
  double b = std::min(kFactorMax, (best_index + 1) / 100.0);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  auto f1 = objective(x1);
  auto f2 = objective(x2);
  while (b - a > kFactorTolerance) {
    if (f1.probability < f2.probability) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    }
  }
  const bool refined_is_x1 = f1.probability < f2.probability;
  const double refined = refined_is_x1 ? x1 : x2;
  const auto refined_value = refined_is_x1 ? f1 : f2;

  const bool non_unimodal =
      refined_value.probability >
      best.probability + best.quad_error + refined_value.quad_error;

  MethodTrace trace{grid_argmin, refined, boundary_suspect, non_unimodal};
  if (non_unimodal || refined_value.probability >= best.probability) {
    return OptimumResult{grid_argmin, best.probability, evaluations, trace};
  }
  return OptimumResult{refined, refined_value.probability, evaluations, trace};
}

}  // namespace lnrelay::optimize
