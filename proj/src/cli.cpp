#include "srmwa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "srmwa/analytic.hpp"
#include "srmwa/config.hpp"
#include "srmwa/csv.hpp"
#include "srmwa/experiments.hpp"
#include "srmwa/simulator.hpp"

namespace srmwa::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string number(double value) { return csv::format_number(value); }
std::string number(std::int64_t value) { return std::to_string(value); }
std::string number(std::uint64_t value) { return std::to_string(value); }

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

void write_model_metadata(csv::Writer& writer, const ModelParams& params) {
  writer.metadata("agents", number(params.n_agents));
  writer.metadata("items", number(params.n_items));
  writer.metadata("capacity", number(params.capacity));
  writer.metadata("rho", rho(params));
  writer.metadata("pressure", params.pressure);
}

void require_valid_config(const ModelParams& params) {
  if (auto error = validate(params)) throw Error(error->code, error->field + ": " + error->message);
}

void cmd_simulate(const RunConfig& config, std::ostream& out) {
  const ModelParams params = model_params(config);
  require_valid_config(params);
  std::optional<std::uint64_t> every;
  if (!config.trajectory.empty()) every = config.sample_every.value_or(default_sample_every(params));
  const SimulationOutcome outcome = run(params, config.seed, every);
  const MarketState& state = outcome.final_state;

  std::ostringstream text;
  csv::Writer writer(text);
  write_model_metadata(writer, params);
  writer.metadata("nu", params.interactions_per_pair);
  writer.metadata("seed", number(outcome.seed));
  writer.metadata("recommendations", number(state.recommendations_done()));
  writer.header({"item", "owners", "share"});
  for (std::int64_t k = 1; k <= params.n_items; ++k) {
    const auto item = ItemRef::regular(static_cast<std::size_t>(k));
    writer.row({number(k), number(state.owner_count(item)), number(market_share(state, item))});
  }
  const auto advertised = ItemRef::advertised();
  writer.row({"advertised", number(state.owner_count(advertised)), number(market_share(state, advertised))});

  if (outcome.advertised_share_trajectory) {
    std::ostringstream series;
    csv::Writer trajectory(series);
    trajectory.metadata("seed", number(outcome.seed));
    trajectory.header({"recommendations", "f_a"});
    for (const auto& point : *outcome.advertised_share_trajectory) {
      trajectory.row({number(point.recommendations), number(point.advertised_share)});
    }
    write_output(config.trajectory, series.str(), out);
  }
  write_output(config.out, text.str(), out);
}

void cmd_analytic(const RunConfig& config, std::ostream& out) {
  ModelParams params = model_params(config);
  require_valid_config(params);
  params.gamma_policy = analytic_policy_for(params.gamma_policy, params.capacity);
  const TransitionRates rates = build_rates(params);
  const StationaryDistribution dist = stationary(rates);
  double mean = 0.0;
  for (std::size_t i = 0; i < dist.pi.size(); ++i) mean += static_cast<double>(i) * dist.pi[i];

  std::ostringstream text;
  csv::Writer writer(text);
  write_model_metadata(writer, params);
  writer.metadata("gamma_policy", format_gamma_policy(params.gamma_policy));
  writer.metadata("gamma", rates.gamma_used);
  writer.metadata("expected_share", mean / static_cast<double>(params.n_agents));
  writer.header({"state", "up", "down", "stay", "pi"});
  for (std::size_t i = 0; i < dist.pi.size(); ++i) {
    writer.row({number(static_cast<std::int64_t>(i)), number(rates.up[i]), number(rates.down[i]),
                number(rates.stay[i]), number(dist.pi[i])});
  }
  write_output(config.out, text.str(), out);
}

ModelParams sweep_base(const RunConfig& config, std::int64_t items) {
  ModelParams base;
  base.n_agents = config.agents;
  base.n_items = items;
  base.capacity = 1;
  base.pressure = 0.0;
  base.interactions_per_pair = config.nu;
  base.gamma_policy = config.gamma_policy;
  require_valid_config(base);
  if (config.realizations < 1) throw Error(ErrorCode::NonPositiveCount, "realizations: must be positive");
  return base;
}

void require_pressures(const std::vector<double>& pressures) {
  for (double p : pressures) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::PressureOutOfRange, "pressures: values must lie in [0,1]");
  }
}

void cmd_sweep_rho(const RunConfig& config, std::ostream& out) {
  const ModelParams base = sweep_base(config, config.items);
  require_pressures(config.pressures);
  const auto records =
      sweep_rho(base, config.rho_grid, config.pressures, config.realizations, config.seed, config.jobs);

  std::ostringstream text;
  csv::Writer writer(text);
  writer.header({"rho", "capacity", "pressure", "nu", "realizations", "f_a_sim_mean", "f_a_sim_std",
                 "f_a_analytic", "f_top5", "f_min", "seed_base"});
  for (const auto& r : records) {
    writer.row({number(r.rho), number(r.params.capacity), number(r.params.pressure),
                number(r.params.interactions_per_pair), number(r.stats.n_realizations), number(r.stats.f_a),
                number(r.stats.std_f_a), r.analytic_f_a ? number(*r.analytic_f_a) : std::string(),
                number(r.stats.f_top), number(r.stats.f_min), number(r.seed_base)});
  }
  write_output(config.out, text.str(), out);
}

void cmd_sweep_item_size(const RunConfig& config, std::ostream& out) {
  const ModelParams base = sweep_base(config, kReferenceItems);
  if (!(config.pressure >= 0.0 && config.pressure <= 1.0)) {
    throw Error(ErrorCode::PressureOutOfRange, "pressure: must lie in [0,1]");
  }
  for (auto k : config.item_counts) {
    if (k < 1) throw Error(ErrorCode::NonPositiveCount, "items: counts must be positive");
  }
  const auto rows = item_size_experiment(base, config.item_counts, config.rho_grid, config.pressure,
                                         config.realizations, config.seed, config.jobs);

  std::ostringstream text;
  csv::Writer writer(text);
  writer.metadata("reference_items", number(kReferenceItems));
  writer.header({"items", "rho", "capacity", "pressure", "nu", "realizations", "f_a_sim_mean", "f_a_sim_std",
                 "f_a_reference", "relative", "seed_base"});
  for (const auto& r : rows) {
    writer.row({number(r.items), number(r.rho), number(r.capacity), number(config.pressure), number(config.nu),
                number(r.stats.n_realizations), number(r.stats.f_a), number(r.stats.std_f_a),
                number(r.reference_f_a), number(r.relative), number(config.seed)});
  }
  write_output(config.out, text.str(), out);
}

void cmd_sweep_stationarity(const RunConfig& config, std::ostream& out) {
  const ModelParams base = sweep_base(config, config.items);
  require_pressures(config.pressures);
  for (double nu : config.nus) {
    if (!(nu > 0.0)) throw Error(ErrorCode::NonPositiveCount, "nus: values must be positive");
  }
  if (!(config.reference_nu > 0.0)) throw Error(ErrorCode::NonPositiveCount, "reference-nu: must be positive");
  if (!(config.band >= 0.0)) throw Error(ErrorCode::InvalidArgument, "band: must be nonnegative");
  const auto rows = stationarity_experiment(base, config.nus, config.reference_nu, config.rho_grid,
                                            config.pressures, config.realizations, config.seed, config.jobs,
                                            config.band);

  std::ostringstream text;
  csv::Writer writer(text);
  writer.metadata("band", config.band);
  writer.header({"rho", "capacity", "pressure", "nu", "reference_nu", "realizations", "f_a_sim_mean",
                 "f_a_sim_std", "f_a_reference", "relative", "stationary", "seed_base"});
  for (const auto& r : rows) {
    writer.row({number(r.rho), number(r.capacity), number(r.pressure), number(r.nu), number(config.reference_nu),
                number(r.stats.n_realizations), number(r.stats.f_a), number(r.stats.std_f_a),
                number(r.reference_f_a), number(r.relative), r.stationary ? "1" : "0", number(config.seed)});
  }
  write_output(config.out, text.str(), out);
}

struct Leaf {
  Command command;
  CLI::App* app;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

void add_options(Leaf& leaf) {
  for (const auto& key : config_keys(leaf.command)) {
    leaf.options[key.name] = leaf.app->add_option("--" + key.name, leaf.values[key.name], key.description);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Recommendation-with-advertisement market simulator and birth-death chain analysis", "srmwa");
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value file; command-line flags take precedence")
      ->check(CLI::ExistingFile);

  std::vector<Leaf> leaves;
  leaves.reserve(5);
  leaves.push_back({Command::Simulate, app.add_subcommand("simulate", "run one simulation"), {}, {}});
  leaves.push_back(
      {Command::Analytic, app.add_subcommand("analytic", "transition rates and stationary distribution"), {}, {}});
  CLI::App* sweep = app.add_subcommand("sweep", "ensemble parameter sweeps");
  sweep->require_subcommand(1);
  leaves.push_back({Command::SweepRho, sweep->add_subcommand("rho", "advertised share versus capacity ratio"), {}, {}});
  leaves.push_back(
      {Command::SweepItemSize, sweep->add_subcommand("item-size", "share relative to I=100 for other item counts"), {}, {}});
  leaves.push_back({Command::SweepStationarity,
                    sweep->add_subcommand("stationarity", "share relative to a reference interaction budget"), {}, {}});
  for (auto& leaf : leaves) {
    leaf.app->add_option("--config", config_path, "flat key=value file; command-line flags take precedence")
        ->check(CLI::ExistingFile);
    add_options(leaf);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Leaf* active = nullptr;
    for (auto& leaf : leaves) {
      if (leaf.app->parsed()) active = &leaf;
    }
    RunConfig config;
    config.command = active->command;
    if (!config_path.empty()) apply_config(config, read_config_file(config_path));
    std::map<std::string, std::string> flags;
    for (const auto& [name, option] : active->options) {
      if (option->count() > 0) flags[name] = active->values[name];
    }
    apply_config(config, flags);

    switch (config.command) {
      case Command::Simulate: cmd_simulate(config, out); break;
      case Command::Analytic: cmd_analytic(config, out); break;
      case Command::SweepRho: cmd_sweep_rho(config, out); break;
      case Command::SweepItemSize: cmd_sweep_item_size(config, out); break;
      case Command::SweepStationarity: cmd_sweep_stationarity(config, out); break;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace srmwa::cli
