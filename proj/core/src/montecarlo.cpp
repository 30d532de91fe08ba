#include "lnrelay/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lnrelay::montecarlo {

namespace {

struct Tallies {
  std::int64_t outage = 0;
  std::int64_t first_hop = 0;
  std::int64_t joint = 0;

  Tallies& operator+=(const Tallies& other) {
    outage += other.outage;
    first_hop += other.first_hop;
    joint += other.joint;
    return *this;
  }
};

Tallies run_chunk(const model::SystemConfig& cfg, const model::Protocol& proto,
                  double c_th, std::uint64_t seed, std::int64_t chunk_index,
                  std::int64_t count) {
  channel::RandomStream rng(seed, static_cast<std::uint64_t>(chunk_index));
  Tallies t;
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = channel::sample_gain_sq(rng, cfg.hop1);
    const double y = channel::sample_gain_sq(rng, cfg.hop2);
    const auto snr = model::snrs(x, y, cfg, proto);
    const double c_relay = model::capacity(snr.gamma_r, proto);
    const double c_dest = model::capacity(snr.gamma_d, proto);
    const bool first = c_relay >= c_th;
    t.first_hop += first;
    t.joint += first && c_dest < c_th;
    t.outage += std::min(c_relay, c_dest) < c_th;
  }
  return t;
}

Tallies simulate(const model::SystemConfig& cfg, const model::Protocol& proto,
                 double c_th, std::int64_t n, std::uint64_t seed, unsigned workers) {
  cfg.validate();
  if (n < 1) throw std::domain_error("montecarlo: n must be >= 1");
  if (!(c_th >= 0.0)) throw std::domain_error("montecarlo: c_th must be >= 0");

  const std::int64_t chunk_count = (n + kChunkSamples - 1) / kChunkSamples;
  auto chunk_size = [n](std::int64_t index) {
    return std::min(kChunkSamples, n - index * kChunkSamples);
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const unsigned used = static_cast<unsigned>(
      std::min<std::int64_t>(workers, chunk_count));

  Tallies total;
  if (used <= 1) {
    for (std::int64_t c = 0; c < chunk_count; ++c) {
      total += run_chunk(cfg, proto, c_th, seed, c, chunk_size(c));
    }
    return total;
  }

  std::vector<Tallies> per_chunk(static_cast<std::size_t>(chunk_count));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1)) {
      per_chunk[static_cast<std::size_t>(c)] =
          run_chunk(cfg, proto, c_th, seed, c, chunk_size(c));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (unsigned w = 0; w < used; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (const auto& t : per_chunk) total += t;  // integer sums: order-independent
  return total;
}

double binomial_std_error(std::int64_t count, std::int64_t n) {
  if (count == 0 || count == n) return 3.0 / static_cast<double>(n);  // rule of three
  const double p = static_cast<double>(count) / static_cast<double>(n);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

McEstimate estimate_outage(const model::SystemConfig& cfg, const model::Protocol& proto,
                           double c_th, std::int64_t n, std::uint64_t seed,
                           unsigned workers) {
  const Tallies t = simulate(cfg, proto, c_th, n, seed, workers);
  return McEstimate{static_cast<double>(t.outage) / static_cast<double>(n),
                    binomial_std_error(t.outage, n), n, seed, t.outage};
}

TermsEstimate estimate_terms(const model::SystemConfig& cfg, const model::Protocol& proto,
                             double c_th, std::int64_t n, std::uint64_t seed,
                             unsigned workers) {
  const Tallies t = simulate(cfg, proto, c_th, n, seed, workers);
  return TermsEstimate{static_cast<double>(t.first_hop) / static_cast<double>(n),
                       static_cast<double>(t.joint) / static_cast<double>(n),
                       binomial_std_error(t.first_hop, n),
                       binomial_std_error(t.joint, n),
                       n,
                       seed,
                       t.first_hop,
                       t.joint};
}

}  // namespace lnrelay::montecarlo
