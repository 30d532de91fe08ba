#pragma once

#include "lnrelay/model.hpp"
#include "lnrelay/numerics.hpp"

namespace lnrelay::analytic {

/// Ergodic outage probability together with its decomposition:
/// probability = 1 - o1 + o2, where o1 = P{first hop supports the threshold}
/// and o2 = P{first hop supports it, second hop does not}. o2 <= o1 always.
struct OutageValue {
  double probability;  ///< in [0, 1]
  double quad_error;   ///< absolute error estimate of the o2 quadrature
  double o1;
  double o2;
};

/// P{relay capacity >= c_th}: one-term erfc expression over the first-hop
/// fading parameters.
double first_hop_success(const model::SystemConfig& cfg, const model::Protocol& proto,
                         double c_th);

/// P{relay capacity >= c_th, destination capacity < c_th}.
///
/// The defining integral over the first-hop gain z in [lower, inf) is
/// evaluated after the substitution u = (xi*ln z - 2*mu1) / (2*sqrt2*sigma1),
/// under which f_X(z) dz becomes exp(-u^2)/sqrt(pi) du exactly and the
/// second-hop CDF becomes the bounded weight (1 + erf(a - b*u))/2.
numerics::QuadResult second_term(const model::SystemConfig& cfg,
                                 const model::Protocol& proto, double c_th,
                                 const numerics::QuadOptions& options = {});

/// Ergodic outage probability P{min capacity < c_th}.
OutageValue outage(const model::SystemConfig& cfg, const model::Protocol& proto,
                   double c_th, const numerics::QuadOptions& options = {});

}  // namespace lnrelay::analytic
