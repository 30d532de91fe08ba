#pragma once

#include <cstdint>

#include "lnrelay/model.hpp"

namespace lnrelay::montecarlo {

/// Samples are partitioned into fixed-size chunks, each driven by the random
/// stream (seed, chunk_index), so the result depends only on (seed, n) and
/// never on the number of worker threads.
inline constexpr std::int64_t kChunkSamples = 1 << 16;

/// Outage probability estimate. p_hat = failures / n exactly, and
/// std_error = sqrt(p_hat * (1 - p_hat) / n) except in the degenerate
/// failures in {0, n} case, where the one-sided rule-of-three bound 3/n is
/// reported instead.
struct McEstimate {
  double p_hat;
  double std_error;
  std::int64_t n;
  std::uint64_t seed;
  std::int64_t failures;
};

/// The two terms of the outage decomposition estimated on the same sample
/// stream: o1_hat counts {relay capacity >= c_th} and o2_hat the joint event
/// {relay capacity >= c_th, destination capacity < c_th}, so
/// 1 - o1_hat + o2_hat equals the estimate_outage p_hat bit-exactly.
struct TermsEstimate {
  double o1_hat;
  double o2_hat;
  double o1_std_error;
  double o2_std_error;
  std::int64_t n;
  std::uint64_t seed;
  std::int64_t first_hop_count;
  std::int64_t joint_count;
};

/// Direct simulation of the outage event: draws n (x, y) gain pairs, maps
/// them through the protocol SNR and capacity expressions and counts
/// min-capacity shortfalls. workers = 0 picks the hardware thread count.
McEstimate estimate_outage(const model::SystemConfig& cfg, const model::Protocol& proto,
                           double c_th, std::int64_t n, std::uint64_t seed,
                           unsigned workers = 0);

/// Term-level frequencies from the identical sample stream.
TermsEstimate estimate_terms(const model::SystemConfig& cfg, const model::Protocol& proto,
                             double c_th, std::int64_t n, std::uint64_t seed,
                             unsigned workers = 0);

}  // namespace lnrelay::montecarlo
