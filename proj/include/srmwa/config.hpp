#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srmwa/experiments.hpp"
#include "srmwa/model.hpp"

namespace srmwa {

enum class Command { Simulate, Analytic, SweepRho, SweepItemSize, SweepStationarity };

/// Everything a subcommand needs. Defaults are the N = I = 100, nu = 1000,
/// 20-realization operating point.
struct RunConfig {
  Command command = Command::Simulate;

  std::int64_t agents = 100;
  std::int64_t items = 100;
  std::optional<std::int64_t> capacity;
  std::optional<double> rho;
  double pressure = 0.1;
  double nu = 1000.0;
  GammaPolicy gamma_policy = Approximation{};
  std::uint64_t seed = 1;
  std::string out = "-";

  // simulate
  std::string trajectory;
  std::optional<std::uint64_t> sample_every;

  // sweeps
  std::vector<double> rho_grid = default_rho_grid();
  std::vector<double> pressures{1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<std::int64_t> item_counts{100, 200, 300, 500};
  std::vector<double> nus{100.0, 1000.0};
  double reference_nu = 100.0;
  double band = 0.02;
  std::int64_t realizations = 20;
  unsigned jobs = 1;

  bool operator==(const RunConfig&) const = default;
};

/// One config key: its name (identical to the long flag without dashes), a
/// parser into RunConfig and a lossless printer.
struct ConfigKey {
  std::string name;
  std::string description;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

/// Keys accepted by a subcommand, in flag order.
const std::vector<ConfigKey>& config_keys(Command command);

/// Flat key=value text; '#' starts a comment line; surrounding blanks trimmed.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies entries to `config`. Throws Error naming the key on an unknown key
/// or an unparsable value.
void apply_config(RunConfig& config, const std::map<std::string, std::string>& entries);

/// Every key of the config's subcommand at full precision.
std::string to_config_text(const RunConfig& config);

/// Model parameters of simulate/analytic; resolves --rho into a capacity.
ModelParams model_params(const RunConfig& config);

std::string command_name(Command command);

}  // namespace srmwa
