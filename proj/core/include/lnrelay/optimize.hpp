#pragma once

#include "lnrelay/analytic.hpp"
#include "lnrelay/model.hpp"

namespace lnrelay::optimize {

/// Search domain for tau / rho. Outage tends to 1 at both ends of (0, 1),
/// so optima are interior for any sane configuration.
inline constexpr double kFactorMin = 0.01;
inline constexpr double kFactorMax = 0.99;
inline constexpr double kFactorTolerance = 1e-4;

struct MethodTrace {
  double grid_argmin;     ///< best point of the coarse 0.01-step scan
  double refined;         ///< golden-section result inside the bracket
  bool boundary_suspect;  ///< the grid argmin sat on the search boundary
  bool non_unimodal;      ///< refinement lost to the grid beyond quadrature error
};

struct OptimumResult {
  double factor;   ///< tau* or rho*
  double outage;   ///< analytic outage at factor
  long evaluations;
  MethodTrace method_trace;
};

/// Minimizes the analytic outage over the TSR tau or PSR rho: a coarse
/// 0.01-step grid scan followed by golden-section refinement of the
/// bracketing interval, to kFactorTolerance in the factor. Returns the
/// better of the grid and refined points. Deterministic.
OptimumResult optimize_factor(const model::SystemConfig& cfg, model::ProtocolKind kind,
                              double c_th);

}  // namespace lnrelay::optimize
