// lnrelay command-line front end: single-point outage evaluation, Monte
// Carlo validation, factor optimization, parameter sweeps and the canned
// figure studies. Prints one machine-parsable JSON record per invocation on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 2 usage/validation error, 3 numerical convergence
// failure, 4 analytic/MC agreement gate violation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lnrelay/analytic.hpp"
#include "lnrelay/experiments.hpp"
#include "lnrelay/model.hpp"
#include "lnrelay/montecarlo.hpp"
#include "lnrelay/numerics.hpp"
#include "lnrelay/optimize.hpp"

namespace {

using nlohmann::ordered_json;
namespace model = lnrelay::model;
namespace analytic = lnrelay::analytic;
namespace montecarlo = lnrelay::montecarlo;
namespace optimize = lnrelay::optimize;
namespace experiments = lnrelay::experiments;

// Flag-level system parameters; fading spread is supplied as a variance in
// dB^2 and converted when the SystemConfig is built. The same keys can come
// from a flat `key = value` config file (flag names minus the leading
// dashes); explicit command-line flags take precedence over file values.
struct ConfigFlags {
  double ps = 1.0;
  double eta = 1.0;
  double m = 2.0;
  double d1 = 5.0;
  double d2 = 5.0;
  double noise_relay = 0.01;
  double noise_dest = 0.01;
  double mu1 = 3.0;
  double mu2 = 3.0;
  double sigma2_db1 = 3.0;
  double sigma2_db2 = 3.0;
  std::string config_path;

  struct Binding {
    std::string key;
    CLI::Option* option;
    double* target;
  };
  std::vector<Binding> bindings;

  void add_flags(CLI::App* cmd) {
    auto bind = [&](const std::string& flag, double& target, const std::string& help) {
      auto* opt = cmd->add_option(flag, target, help)->capture_default_str();
      bindings.push_back({flag.substr(2), opt, &target});
    };
    bind("--ps", ps, "source transmit power [W]");
    bind("--eta", eta, "energy-harvester efficiency, (0, 1]");
    bind("--m", m, "path-loss exponent");
    bind("--d1", d1, "source-relay distance [m]");
    bind("--d2", d2, "relay-destination distance [m]");
    bind("--noise-relay", noise_relay, "total relay noise variance [W]");
    bind("--noise-dest", noise_dest, "destination noise variance [W]");
    bind("--mu1", mu1, "hop-1 mean of 10*log10(h) [dB]");
    bind("--mu2", mu2, "hop-2 mean of 10*log10(h) [dB]");
    bind("--sigma2-db1", sigma2_db1, "hop-1 variance of 10*log10(h) [dB^2]");
    bind("--sigma2-db2", sigma2_db2, "hop-2 variance of 10*log10(h) [dB^2]");
    cmd->add_option("--config", config_path,
                    "flat key = value config file (flag names minus the leading "
                    "dashes); explicit flags take precedence")
        ->check(CLI::ExistingFile);
  }

  // Flat key = value lines, '#' comments. Values fill in only the flags that
  // were not given on the command line.
  void load_config_file() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw CLI::ValidationError("--config: cannot read " + config_path);
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw CLI::ValidationError("--config: line " + std::to_string(line_no) +
                                   " is not key = value");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      auto binding = std::find_if(bindings.begin(), bindings.end(),
                                  [&](const Binding& b) { return b.key == key; });
      if (binding == bindings.end()) {
        throw CLI::ValidationError("--config: unknown key '" + key + "'");
      }
      if (binding->option->count() > 0) continue;  // explicit flag wins
      try {
        std::size_t used = 0;
        *binding->target = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--config: key '" + key + "' has non-numeric value '" +
                                   value + "'");
      }
    }
  }

  model::SystemConfig build() {
    load_config_file();
    model::SystemConfig cfg;
    cfg.ps = ps;
    cfg.eta = eta;
    cfg.m = m;
    cfg.d1 = d1;
    cfg.d2 = d2;
    cfg.noise_relay = noise_relay;
    cfg.noise_dest = noise_dest;
    cfg.noise_antenna = noise_relay / 2.0;
    cfg.noise_conversion = noise_relay / 2.0;
    if (!(sigma2_db1 > 0.0) || !(sigma2_db2 > 0.0)) {
      throw std::domain_error("--sigma2-db1/--sigma2-db2 must be > 0");
    }
    cfg.hop1 = {mu1, std::sqrt(sigma2_db1)};
    cfg.hop2 = {mu2, std::sqrt(sigma2_db2)};
    cfg.validate();
    return cfg;
  }
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) { flags.add_flags(cmd); }

struct ProtocolFlags {
  std::string protocol;
  double tau = -1.0;
  double rho = -1.0;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* rho_opt = nullptr;

  void add(CLI::App* cmd, bool allow_irr) {
    auto choices = allow_irr ? std::vector<std::string>{"tsr", "psr", "irr"}
                             : std::vector<std::string>{"tsr", "psr"};
    cmd->add_option("--protocol", protocol, "relaying protocol")
        ->required()
        ->check(CLI::IsMember(choices));
    tau_opt = cmd->add_option("--tau", tau, "TSR energy-harvesting time factor, (0, 1)");
    rho_opt = cmd->add_option("--rho", rho, "PSR power-splitting factor, (0, 1)");
  }

  model::Protocol build() const {
    if (protocol == "tsr") {
      if (!tau_opt->count()) {
        throw CLI::ValidationError("--tau is required with --protocol tsr");
      }
      if (rho_opt->count()) {
        throw CLI::ValidationError("--rho does not apply to --protocol tsr");
      }
      return model::Protocol::tsr(tau);
    }
    if (protocol == "psr") {
      if (!rho_opt->count()) {
        throw CLI::ValidationError("--rho is required with --protocol psr");
      }
      if (tau_opt->count()) {
        throw CLI::ValidationError("--tau does not apply to --protocol psr");
      }
      return model::Protocol::psr(rho);
    }
    if (tau_opt->count() || rho_opt->count()) {
      throw CLI::ValidationError("--tau/--rho do not apply to --protocol irr");
    }
    return model::Protocol::irr();
  }
};

ordered_json outage_record(const std::string& protocol, const model::Protocol& proto,
                           double c_th, const analytic::OutageValue& value) {
  ordered_json rec;
  rec["protocol"] = protocol;
  if (proto.has_factor()) {
    rec["factor"] = proto.factor();
  } else {
    rec["factor"] = nullptr;
  }
  rec["c_th"] = c_th;
  rec["analytic"] = value.probability;
  rec["quad_error"] = value.quad_error;
  rec["o1"] = value.o1;
  rec["o2"] = value.o2;
  return rec;
}

void emit(const ordered_json& rec) { std::cout << rec.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ergodic outage analysis of energy-harvesting DF relaying over "
               "log-normal fading (TSR, PSR and IRR protocols)"};
  app.require_subcommand(1);

  // outage
  auto* outage_cmd =
      app.add_subcommand("outage", "analytic outage probability at one operating point");
  ConfigFlags outage_cfg;
  ProtocolFlags outage_proto;
  double outage_cth = 0.0;
  outage_proto.add(outage_cmd, /*allow_irr=*/true);
  outage_cmd->add_option("--cth", outage_cth, "capacity threshold [bit/s/Hz]")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_config_flags(outage_cmd, outage_cfg);

  // mc
  auto* mc_cmd = app.add_subcommand(
      "mc", "analytic outage plus a seeded Monte Carlo cross-check");
  ConfigFlags mc_cfg;
  ProtocolFlags mc_proto;
  double mc_cth = 0.0;
  std::int64_t mc_samples = 1000000;
  std::uint64_t mc_seed = 1;
  mc_proto.add(mc_cmd, /*allow_irr=*/true);
  mc_cmd->add_option("--cth", mc_cth, "capacity threshold [bit/s/Hz]")
      ->required()
      ->check(CLI::NonNegativeNumber);
  mc_cmd->add_option("--samples", mc_samples, "Monte Carlo sample count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc_seed, "Monte Carlo seed")->capture_default_str();
  add_config_flags(mc_cmd, mc_cfg);

  // optimize
  auto* opt_cmd = app.add_subcommand(
      "optimize", "numerically optimal tau (TSR) or rho (PSR) at a threshold");
  ConfigFlags opt_cfg;
  std::string opt_protocol;
  double opt_cth = 1.0;
  opt_cmd->add_option("--protocol", opt_protocol, "relaying protocol")
      ->required()
      ->check(CLI::IsMember({"tsr", "psr"}));
  opt_cmd->add_option("--cth", opt_cth, "capacity threshold [bit/s/Hz]")
      ->required()
      ->check(CLI::PositiveNumber);
  add_config_flags(opt_cmd, opt_cfg);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep written as CSV");
  ConfigFlags sweep_cfg;
  std::string sweep_protocol;
  std::string sweep_axis;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 0;
  double sweep_cth = 1.0;
  double sweep_factor = 0.5;
  std::vector<std::string> sweep_series;
  std::int64_t sweep_mc = 0;
  std::uint64_t sweep_seed = 1;
  std::string sweep_out;
  sweep_cmd->add_option("--protocol", sweep_protocol, "relaying protocol")
      ->required()
      ->check(CLI::IsMember({"tsr", "psr", "irr"}));
  sweep_cmd->add_option("--vary", sweep_axis, "swept axis")
      ->required()
      ->check(CLI::IsMember({"factor", "cth", "distance", "ps", "eta"}));
  sweep_cmd->add_option("--from", sweep_from, "axis start")->required();
  sweep_cmd->add_option("--to", sweep_to, "axis end")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "number of points, >= 2")->required();
  sweep_cmd->add_option("--cth", sweep_cth, "capacity threshold when not swept "
                                            "[bit/s/Hz]")
      ->capture_default_str();
  sweep_cmd->add_option("--factor", sweep_factor,
                        "fixed tau/rho when not swept or optimized")
      ->capture_default_str();
  sweep_cmd->add_option("--series", sweep_series,
                        "per-curve override param=value (repeatable; e.g. eta=0.7)");
  sweep_cmd->add_option("--mc-samples", sweep_mc,
                        "Monte Carlo samples per row (0 disables the column)")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_seed, "Monte Carlo seed")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
  add_config_flags(sweep_cmd, sweep_cfg);

  // figures
  auto* fig_cmd = app.add_subcommand("figures", "canned figure studies as CSV files");
  ConfigFlags fig_cfg;
  std::string fig_name;
  std::string fig_out;
  std::int64_t fig_mc = 100000;
  std::uint64_t fig_seed = 2;
  fig_cmd->add_option("--name", fig_name, "figure study")
      ->required()
      ->check(CLI::IsMember({"fig4", "fig5", "fig6"}));
  fig_cmd->add_option("--out", fig_out, "output directory")->required();
  fig_cmd->add_option("--mc-samples", fig_mc,
                      "Monte Carlo samples per row (0 disables the column)")
      ->capture_default_str();
  fig_cmd->add_option("--seed", fig_seed, "Monte Carlo seed")->capture_default_str();
  add_config_flags(fig_cmd, fig_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the offending flag to stderr
    return 2;
  }

  try {
    if (app.got_subcommand(outage_cmd)) {
      const auto cfg = outage_cfg.build();
      const auto proto = outage_proto.build();
      const auto value = analytic::outage(cfg, proto, outage_cth);
      emit(outage_record(outage_proto.protocol, proto, outage_cth, value));
      return 0;
    }

    if (app.got_subcommand(mc_cmd)) {
      const auto cfg = mc_cfg.build();
      const auto proto = mc_proto.build();
      const auto value = analytic::outage(cfg, proto, mc_cth);
      const auto est =
          montecarlo::estimate_outage(cfg, proto, mc_cth, mc_samples, mc_seed);
      auto rec = outage_record(mc_proto.protocol, proto, mc_cth, value);
      rec["mc"] = est.p_hat;
      rec["mc_stderr"] = est.std_error;
      rec["n"] = est.n;
      rec["seed"] = est.seed;
      rec["sigma_gap"] = std::abs(value.probability - est.p_hat) / est.std_error;
      emit(rec);
      return 0;
    }

    if (app.got_subcommand(opt_cmd)) {
      const auto cfg = opt_cfg.build();
      const auto kind = opt_protocol == "tsr" ? model::ProtocolKind::kTsr
                                              : model::ProtocolKind::kPsr;
      const auto result = optimize::optimize_factor(cfg, kind, opt_cth);
      ordered_json rec;
      rec["protocol"] = opt_protocol;
      rec["c_th"] = opt_cth;
      rec["factor_star"] = result.factor;
      rec["outage_star"] = result.outage;
      rec["evaluations"] = result.evaluations;
      rec["grid_argmin"] = result.method_trace.grid_argmin;
      rec["boundary_suspect"] = result.method_trace.boundary_suspect;
      emit(rec);
      return 0;
    }

    if (app.got_subcommand(sweep_cmd)) {
      experiments::SweepSpec spec;
      spec.base = sweep_cfg.build();
      spec.protocol_kind = sweep_protocol == "tsr"   ? model::ProtocolKind::kTsr
                           : sweep_protocol == "psr" ? model::ProtocolKind::kPsr
                                                     : model::ProtocolKind::kIrr;
      spec.vary = experiments::axis_from_name(sweep_axis);
      spec.from = sweep_from;
      spec.to = sweep_to;
      spec.steps = sweep_steps;
      spec.c_th = sweep_cth;
      spec.factor = sweep_factor;
      spec.mc_samples = sweep_mc;
      spec.seed = sweep_seed;
      for (const auto& entry : sweep_series) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw CLI::ValidationError("--series expects param=value, got '" + entry + "'");
        }
        double value = 0.0;
        try {
          value = std::stod(entry.substr(eq + 1));
        } catch (const std::exception&) {
          throw CLI::ValidationError("--series value in '" + entry + "' is not numeric");
        }
        spec.series.push_back({entry.substr(0, eq), value});
      }
      const auto series = experiments::run_sweep(spec);
      experiments::write_csv(series, sweep_out);
      std::size_t rows = 0;
      for (const auto& s : series) rows += s.rows.size();
      ordered_json rec;
      rec["out"] = sweep_out;
      rec["series"] = series.size();
      rec["rows"] = rows;
      emit(rec);
      return 0;
    }

    if (app.got_subcommand(fig_cmd)) {
      const auto cfg = fig_cfg.build();
      const auto files = experiments::write_figure(fig_name, fig_out, cfg, fig_mc,
                                                   fig_seed);
      ordered_json rec;
      rec["figure"] = fig_name;
      rec["files"] = ordered_json::array();
      for (const auto& f : files) rec["files"].push_back(f.string());
      emit(rec);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const lnrelay::numerics::QuadConvergenceError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const experiments::AgreementGateError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  return 0;
}
