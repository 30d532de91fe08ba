#include "lnrelay/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lnrelay/analytic.hpp"
#include "lnrelay/montecarlo.hpp"
#include "lnrelay/optimize.hpp"

namespace lnrelay::experiments {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t row_seed(std::uint64_t seed, std::size_t series_index,
                       std::size_t row_index) {
  return splitmix64(splitmix64(seed ^ (0x632be59bd9b4e019ULL * (series_index + 1))) +
                    row_index);
}

void apply_override(model::SystemConfig& cfg, double& c_th, double& factor,
                    const SeriesOverride& series) {
  if (series.param.empty()) return;
  if (series.param == "eta") {
    cfg.eta = series.value;
  } else if (series.param == "ps") {
    cfg.ps = series.value;
  } else if (series.param == "m") {
    cfg.m = series.value;
  } else if (series.param == "d1") {
    cfg.d1 = series.value;
  } else if (series.param == "d2") {
    cfg.d2 = series.value;
  } else if (series.param == "distance") {
    cfg.d1 = cfg.d2 = series.value / 2.0;
  } else if (series.param == "cth") {
    c_th = series.value;
  } else if (series.param == "factor") {
    factor = series.value;
  } else if (series.param == "mu1") {
    cfg.hop1.mu_db = series.value;
  } else if (series.param == "mu2") {
    cfg.hop2.mu_db = series.value;
  } else {
    throw std::invalid_argument("run_sweep: unknown series parameter '" +
                                series.param + "'");
  }
}

std::string series_label(const SeriesOverride& series) {
  if (series.param.empty()) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%g", series.param.c_str(), series.value);
  return buf;
}

std::string format_field(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_field(const std::optional<double>& v) {
  return v ? format_field(*v) : std::string{};
}

std::string describe(const SweepRow& row) {
  std::ostringstream os;
  os << "axis=" << format_field(row.axis_value) << " analytic="
     << format_field(row.analytic) << " quad_error=" << format_field(row.quad_error)
     << " mc=" << format_field(row.mc) << " mc_stderr=" << format_field(row.mc_stderr);
  return os.str();
}

}  // namespace

const char* name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kFactor: return "factor";
    case SweepAxis::kCth: return "cth";
    case SweepAxis::kDistance: return "distance";
    case SweepAxis::kPs: return "ps";
    case SweepAxis::kEta: return "eta";
  }
  return "?";
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "factor") return SweepAxis::kFactor;
  if (name == "cth") return SweepAxis::kCth;
  if (name == "distance") return SweepAxis::kDistance;
  if (name == "ps") return SweepAxis::kPs;
  if (name == "eta") return SweepAxis::kEta;
  throw std::invalid_argument("unknown sweep axis '" + name + "'");
}

void SweepSpec::validate() const {
  base.validate();
  if (!(from < to)) throw std::invalid_argument("SweepSpec: requires from < to");
  if (steps < 2) throw std::invalid_argument("SweepSpec: requires steps >= 2");
  if (!(c_th >= 0.0)) throw std::invalid_argument("SweepSpec: c_th must be >= 0");
  switch (vary) {
    case SweepAxis::kFactor:
      if (protocol_kind == model::ProtocolKind::kIrr) {
        throw std::invalid_argument("SweepSpec: IRR has no factor axis");
      }
      if (from < 0.01 || to > 0.99) {
        throw std::invalid_argument("SweepSpec: factor axis must stay in [0.01, 0.99]");
      }
      break;
    case SweepAxis::kCth:
      if (from < 0.0) throw std::invalid_argument("SweepSpec: cth axis must be >= 0");
      break;
    case SweepAxis::kDistance:
    case SweepAxis::kPs:
      if (!(from > 0.0)) throw std::invalid_argument("SweepSpec: axis must be > 0");
      break;
    case SweepAxis::kEta:
      if (!(from > 0.0) || to > 1.0) {
        throw std::invalid_argument("SweepSpec: eta axis must stay in (0, 1]");
      }
      break;
  }
  if (protocol_kind != model::ProtocolKind::kIrr &&
      !(factor > 0.0 && factor < 1.0)) {
    throw std::invalid_argument("SweepSpec: factor must lie strictly inside (0, 1)");
  }
  if (mc_samples < 0) throw std::invalid_argument("SweepSpec: mc_samples must be >= 0");
}

bool violates_agreement_gate(const SweepRow& row) {
  if (!row.mc || !row.mc_stderr) return false;
  return std::abs(row.analytic - *row.mc) > 4.0 * *row.mc_stderr + row.quad_error;
}

std::vector<SweepSeries> run_sweep(const SweepSpec& spec) {
  spec.validate();

  std::vector<SeriesOverride> series_list = spec.series;
  if (series_list.empty()) series_list.push_back(SeriesOverride{"", 0.0});

  const bool optimizes = spec.protocol_kind != model::ProtocolKind::kIrr &&
                         (spec.vary == SweepAxis::kCth ||
                          spec.vary == SweepAxis::kDistance ||
                          spec.vary == SweepAxis::kPs);

  std::vector<SweepSeries> out;
  out.reserve(series_list.size());

  for (std::size_t s = 0; s < series_list.size(); ++s) {
    model::SystemConfig series_cfg = spec.base;
    double series_cth = spec.c_th;
    double series_factor = spec.factor;
    apply_override(series_cfg, series_cth, series_factor, series_list[s]);

    SweepSeries curve{series_label(series_list[s]), {}};
    curve.rows.reserve(static_cast<std::size_t>(spec.steps));

    for (int i = 0; i < spec.steps; ++i) {
      const double v = spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
      model::SystemConfig cfg = series_cfg;
      double c_th = series_cth;
      double fixed_factor = series_factor;
      switch (spec.vary) {
        case SweepAxis::kFactor: fixed_factor = v; break;
        case SweepAxis::kCth: c_th = v; break;
        case SweepAxis::kDistance: cfg.d1 = cfg.d2 = v / 2.0; break;
        case SweepAxis::kPs: cfg.ps = v; break;
        case SweepAxis::kEta: cfg.eta = v; break;
      }

      SweepRow row{};
      row.axis_value = v;

      model::Protocol proto = model::Protocol::irr();
      if (spec.protocol_kind == model::ProtocolKind::kIrr) {
        // nothing to choose
      } else if (optimizes) {
        const auto opt = optimize::optimize_factor(cfg, spec.protocol_kind, c_th);
        row.optimal_factor = opt.factor;
        proto = spec.protocol_kind == model::ProtocolKind::kTsr
                    ? model::Protocol::tsr(opt.factor)
                    : model::Protocol::psr(opt.factor);
      } else {
        proto = spec.protocol_kind == model::ProtocolKind::kTsr
                    ? model::Protocol::tsr(fixed_factor)
                    : model::Protocol::psr(fixed_factor);
      }

      const auto value = analytic::outage(cfg, proto, c_th);
      row.analytic = value.probability;
      row.quad_error = value.quad_error;

      if (spec.mc_samples > 0) {
        const auto mc = montecarlo::estimate_outage(cfg, proto, c_th, spec.mc_samples,
                                                    row_seed(spec.seed, s, i));
        row.mc = mc.p_hat;
        row.mc_stderr = mc.std_error;
        if (violates_agreement_gate(row)) {
          throw AgreementGateError("run_sweep: analytic/MC agreement gate violated at " +
                                       describe(row) + " (series '" + curve.label +
                                       "', protocol " + model::name(spec.protocol_kind) +
                                       ")",
                                   row);
        }
      }
      curve.rows.push_back(row);
    }
    out.push_back(std::move(curve));
  }
  return out;
}

void write_csv(const std::vector<SweepSeries>& series,
               const std::filesystem::path& path) {
  for (const auto& s : series) {
    if (s.label.find_first_of(",\"\n") != std::string::npos) {
      throw std::invalid_argument("write_csv: series label '" + s.label +
                                  "' would break the CSV layout");
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());

  out << "axis,series,analytic,quad_error,mc,mc_stderr,optimal_factor\n";
  for (const auto& s : series) {
    for (const auto& row : s.rows) {
      out << format_field(row.axis_value) << ',' << s.label << ','
          << format_field(row.analytic) << ',' << format_field(row.quad_error) << ','
          << format_field(row.mc) << ',' << format_field(row.mc_stderr) << ','
          << format_field(row.optimal_factor) << '\n';
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

std::vector<std::filesystem::path> write_figure(const std::string& figure,
                                                const std::filesystem::path& out_dir,
                                                const model::SystemConfig& base,
                                                std::int64_t mc_samples,
                                                std::uint64_t seed) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<fs::path> written;

  const model::ProtocolKind kinds[] = {model::ProtocolKind::kTsr,
                                       model::ProtocolKind::kPsr,
                                       model::ProtocolKind::kIrr};

  if (figure == "fig4") {
    for (int k = 0; k < 2; ++k) {
      SweepSpec spec;
      spec.base = base;
      spec.protocol_kind = kinds[k];
      spec.c_th = 1.0;
      spec.vary = SweepAxis::kFactor;
      spec.from = 0.01;
      spec.to = 0.99;
      spec.steps = 99;
      spec.series = {{"eta", 0.4}, {"eta", 0.7}, {"eta", 1.0}};
      spec.mc_samples = mc_samples;
      spec.seed = splitmix64(seed + static_cast<std::uint64_t>(k));
      const auto rows = run_sweep(spec);
      const fs::path path =
          out_dir / (std::string("fig4_") + model::name(kinds[k]) + ".csv");
      write_csv(rows, path);
      written.push_back(path);
    }
    return written;
  }

  if (figure == "fig5" || figure == "fig6") {
    std::vector<SweepSeries> all;
    for (int k = 0; k < 3; ++k) {
      SweepSpec spec;
      spec.base = base;
      spec.protocol_kind = kinds[k];
      spec.c_th = 1.0;
      spec.mc_samples = mc_samples;
      spec.seed = splitmix64(seed + 0x100 + static_cast<std::uint64_t>(k));
      if (figure == "fig5") {
        spec.vary = SweepAxis::kCth;
        spec.from = 0.1;
        spec.to = 4.0;
        spec.steps = 40;
        spec.series = {{"distance", 6.0}, {"distance", 10.0}};
      } else {
        spec.vary = SweepAxis::kDistance;
        spec.from = 2.0;
        spec.to = 12.0;
        spec.steps = 11;
        spec.series = {{"ps", 0.5}, {"ps", 1.0}, {"ps", 2.0}};
      }
      auto curves = run_sweep(spec);
      for (auto& curve : curves) {
        curve.label = std::string(model::name(kinds[k])) + ":" + curve.label;
        all.push_back(std::move(curve));
      }
    }
    const fs::path path = out_dir / (figure + ".csv");
    write_csv(all, path);
    written.push_back(path);
    return written;
  }

  throw std::invalid_argument("write_figure: unknown figure '" + figure +
                              "' (expected fig4, fig5 or fig6)");
}

}  // namespace lnrelay::experiments
