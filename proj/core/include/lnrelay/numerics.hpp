#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace lnrelay::numerics {

/// Result of one adaptive quadrature run. `value` may be any real number for
/// intermediate integrals; `abs_error_estimate` is always finite and >= 0,
/// and `evaluations` > 0 on success.
struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

/// Tolerances and evaluation budget of the adaptive scheme. The run stops as
/// soon as the estimated error drops below max(abs_tol, rel_tol * |value|).
struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  long max_evaluations = 1000000;
};

/// Thrown when the evaluation budget is exhausted before the requested
/// tolerance is reached. Carries the best estimate obtained so far.
class QuadConvergenceError : public std::runtime_error {
 public:
  QuadConvergenceError(const std::string& what, const QuadResult& best)
      : std::runtime_error(what), best_(best) {}

  const QuadResult& best_estimate() const noexcept { return best_; }

 private:
  QuadResult best_;
};

/// Error function. Non-finite input is rejected with std::domain_error.
/// Absolute error <= 1e-12 over the real line.
double erf(double x);

/// Complementary error function, free of the 1 - erf(x) cancellation:
/// relative error <= 1e-10 for x <= 8.
double erfc(double x);

/// (1/sqrt(pi)) * integral of exp(-u^2) * weight_fn(u) over [u0, inf).
///
/// The upper limit is truncated at u_max = max(u0, 0) + 9, beyond which the
/// Gaussian tail mass is below 1e-35. Panels are bisected adaptively using an
/// embedded 7-point Gauss / 15-point Kronrod pair, splitting the panel with
/// the largest error estimate first.
QuadResult gauss_weighted_integral(double u0,
                                   const std::function<double(double)>& weight_fn,
                                   const QuadOptions& options = {});

}  // namespace lnrelay::numerics
