#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnrelay/model.hpp"

namespace lnrelay::experiments {

enum class SweepAxis { kFactor, kCth, kDistance, kPs, kEta };

const char* name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);

/// One curve of a sweep: a single (parameter, value) override of the base
/// configuration. Supported parameters: eta, ps, m, d1, d2, distance
/// (sets d1 = d2 = value/2), cth, factor, mu1, mu2.
struct SeriesOverride {
  std::string param;
  double value;
};

struct SweepSpec {
  model::SystemConfig base{};
  model::ProtocolKind protocol_kind = model::ProtocolKind::kTsr;
  double c_th = 1.0;    ///< threshold used when the axis is not cth
  double factor = 0.5;  ///< fixed tau/rho when the axis neither varies nor optimizes it
  SweepAxis vary = SweepAxis::kFactor;
  double from = 0.01;
  double to = 0.99;
  int steps = 99;                     ///< >= 2, inclusive endpoints
  std::vector<SeriesOverride> series; ///< one curve per entry; empty = single base curve
  std::int64_t mc_samples = 0;        ///< 0 disables the Monte Carlo column
  std::uint64_t seed = 1;

  void validate() const;
};

struct SweepRow {
  double axis_value;
  double analytic;
  double quad_error;
  std::optional<double> mc;
  std::optional<double> mc_stderr;
  std::optional<double> optimal_factor;
};

struct SweepSeries {
  std::string label;
  std::vector<SweepRow> rows;
};

/// |analytic - mc| > 4 * mc_stderr + quad_error. Rows without an MC column
/// never violate.
bool violates_agreement_gate(const SweepRow& row);

/// Raised when an emitted row fails the analytic/MC agreement gate; the
/// sweep aborts rather than writing disagreeing data.
class AgreementGateError : public std::runtime_error {
 public:
  AgreementGateError(const std::string& what, const SweepRow& row)
      : std::runtime_error(what), row_(row) {}

  const SweepRow& row() const noexcept { return row_; }

 private:
  SweepRow row_;
};

/// Evaluates the sweep. For vary = factor the analytic outage is computed
/// across the factor grid; for vary = cth, distance or ps with a TSR/PSR
/// protocol each row first optimizes the factor and records it. The
/// distance axis places the relay midway (d1 = d2 = value/2). Monte Carlo
/// rows derive their seeds deterministically from (seed, series, row).
std::vector<SweepSeries> run_sweep(const SweepSpec& spec);

/// CSV schema: header `axis,series,analytic,quad_error,mc,mc_stderr,
/// optimal_factor`, 12 significant digits, empty fields for absent values,
/// LF line endings.
void write_csv(const std::vector<SweepSeries>& series, const std::filesystem::path& path);

/// Figure presets over a base configuration:
///  - fig4: outage vs factor (99 points), eta series {0.4, 0.7, 1.0},
///          written to fig4_tsr.csv and fig4_psr.csv;
///  - fig5: optimized outage vs threshold in [0.1, 4] (40 points), total
///          distance series {6, 10}, all protocols, written to fig5.csv;
///  - fig6: optimized outage vs total distance in [2, 12] (11 points),
///          source power series {0.5, 1, 2}, all protocols, fig6.csv.
/// Returns the written paths.
std::vector<std::filesystem::path> write_figure(const std::string& figure,
                                                const std::filesystem::path& out_dir,
                                                const model::SystemConfig& base,
                                                std::int64_t mc_samples,
                                                std::uint64_t seed);

}  // namespace lnrelay::experiments
