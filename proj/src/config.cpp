#include "srmwa/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace srmwa {
namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* expected) {
  throw Error(ErrorCode::InvalidArgument, key + ": expected " + expected + ", got '" + value + "'");
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  Int out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || value.empty()) bad_value(key, text, "an integer");
  return out;
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  double out = 0.0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || value.empty() || !std::isfinite(out)) {
    bad_value(key, text, "a number");
  }
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& text, Parse parse) {
  std::vector<T> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse(key, item));
  if (out.empty()) bad_value(key, text, "a comma-separated list");
  return out;
}

std::string print_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

template <typename T, typename Print>
std::string print_list(const std::vector<T>& values, Print print) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += print(values[i]);
  }
  return out;
}

std::string print_int(std::int64_t value) { return std::to_string(value); }

using Keys = std::vector<ConfigKey>;

ConfigKey key_agents() {
  return {"agents", "number of agents N",
          [](RunConfig& c, const std::string& v) { c.agents = parse_int<std::int64_t>("agents", v); },
          [](const RunConfig& c) { return print_int(c.agents); }};
}
ConfigKey key_items() {
  return {"items", "number of regular items I",
          [](RunConfig& c, const std::string& v) { c.items = parse_int<std::int64_t>("items", v); },
          [](const RunConfig& c) { return print_int(c.items); }};
}
ConfigKey key_item_counts() {
  return {"items", "regular item counts k to compare against I=100",
          [](RunConfig& c, const std::string& v) {
            c.item_counts = parse_list<std::int64_t>("items", v, parse_int<std::int64_t>);
          },
          [](const RunConfig& c) { return print_list(c.item_counts, print_int); }};
}
ConfigKey key_capacity() {
  return {"capacity", "attention capacity M (exclusive with rho)",
          [](RunConfig& c, const std::string& v) {
            if (trim(v).empty()) c.capacity.reset();
            else c.capacity = parse_int<std::int64_t>("capacity", v);
          },
          [](const RunConfig& c) { return c.capacity ? print_int(*c.capacity) : std::string(); }};
}
ConfigKey key_rho() {
  return {"rho", "capacity ratio M/I (exclusive with capacity)",
          [](RunConfig& c, const std::string& v) {
            if (trim(v).empty()) c.rho.reset();
            else c.rho = parse_real("rho", v);
          },
          [](const RunConfig& c) { return c.rho ? print_real(*c.rho) : std::string(); }};
}
ConfigKey key_rho_grid() {
  return {"rho", "capacity ratio grid",
          [](RunConfig& c, const std::string& v) { c.rho_grid = parse_list<double>("rho", v, parse_real); },
          [](const RunConfig& c) { return print_list(c.rho_grid, print_real); }};
}
ConfigKey key_pressure() {
  return {"pressure", "advertisement pressure p",
          [](RunConfig& c, const std::string& v) { c.pressure = parse_real("pressure", v); },
          [](const RunConfig& c) { return print_real(c.pressure); }};
}
ConfigKey key_pressures() {
  return {"pressures", "advertisement pressures",
          [](RunConfig& c, const std::string& v) { c.pressures = parse_list<double>("pressures", v, parse_real); },
          [](const RunConfig& c) { return print_list(c.pressures, print_real); }};
}
ConfigKey key_nu() {
  return {"nu", "interactions per agent pair; nu*N^2 recommendations",
          [](RunConfig& c, const std::string& v) { c.nu = parse_real("nu", v); },
          [](const RunConfig& c) { return print_real(c.nu); }};
}
ConfigKey key_nus() {
  return {"nus", "interaction budgets to compare",
          [](RunConfig& c, const std::string& v) { c.nus = parse_list<double>("nus", v, parse_real); },
          [](const RunConfig& c) { return print_list(c.nus, print_real); }};
}
ConfigKey key_reference_nu() {
  return {"reference-nu", "reference interaction budget",
          [](RunConfig& c, const std::string& v) { c.reference_nu = parse_real("reference-nu", v); },
          [](const RunConfig& c) { return print_real(c.reference_nu); }};
}
ConfigKey key_band() {
  return {"band", "half-width of the stationarity band around R = 1",
          [](RunConfig& c, const std::string& v) { c.band = parse_real("band", v); },
          [](const RunConfig& c) { return print_real(c.band); }};
}
ConfigKey key_realizations() {
  return {"realizations", "independent runs per grid point",
          [](RunConfig& c, const std::string& v) { c.realizations = parse_int<std::int64_t>("realizations", v); },
          [](const RunConfig& c) { return print_int(c.realizations); }};
}
ConfigKey key_seed() {
  return {"seed", "64-bit seed (first seed of an ensemble)",
          [](RunConfig& c, const std::string& v) { c.seed = parse_int<std::uint64_t>("seed", v); },
          [](const RunConfig& c) { return std::to_string(c.seed); }};
}
ConfigKey key_gamma_policy() {
  return {"gamma-policy", "exact-m1, approx or fixed:<v>",
          [](RunConfig& c, const std::string& v) { c.gamma_policy = parse_gamma_policy(trim(v)); },
          [](const RunConfig& c) { return format_gamma_policy(c.gamma_policy); }};
}
ConfigKey key_jobs() {
  return {"jobs", "worker threads",
          [](RunConfig& c, const std::string& v) {
            const auto jobs = parse_int<std::int64_t>("jobs", v);
            if (jobs < 1) bad_value("jobs", v, "a positive integer");
            c.jobs = static_cast<unsigned>(jobs);
          },
          [](const RunConfig& c) { return std::to_string(c.jobs); }};
}
ConfigKey key_out() {
  return {"out", "output CSV path, '-' for stdout",
          [](RunConfig& c, const std::string& v) { c.out = trim(v); },
          [](const RunConfig& c) { return c.out; }};
}
ConfigKey key_trajectory() {
  return {"trajectory", "also write the advertised-share trajectory to this CSV",
          [](RunConfig& c, const std::string& v) { c.trajectory = trim(v); },
          [](const RunConfig& c) { return c.trajectory; }};
}
ConfigKey key_sample_every() {
  return {"sample-every", "trajectory spacing in recommendations (default N^2)",
          [](RunConfig& c, const std::string& v) {
            if (trim(v).empty()) {
              c.sample_every.reset();
              return;
            }
            const auto every = parse_int<std::uint64_t>("sample-every", v);
            if (every == 0) bad_value("sample-every", v, "a positive integer");
            c.sample_every = every;
          },
          [](const RunConfig& c) { return c.sample_every ? std::to_string(*c.sample_every) : std::string(); }};
}

Keys make_keys(Command command) {
  switch (command) {
    case Command::Simulate:
      return {key_agents(), key_items(), key_capacity(), key_rho(), key_pressure(), key_nu(), key_seed(),
              key_gamma_policy(), key_out(), key_trajectory(), key_sample_every()};
    case Command::Analytic:
      return {key_agents(), key_items(), key_capacity(), key_rho(), key_pressure(), key_gamma_policy(), key_out()};
    case Command::SweepRho:
      return {key_agents(), key_items(), key_rho_grid(), key_pressures(), key_nu(), key_realizations(),
              key_seed(), key_gamma_policy(), key_jobs(), key_out()};
    case Command::SweepItemSize:
      return {key_agents(), key_item_counts(), key_rho_grid(), key_pressure(), key_nu(), key_realizations(),
              key_seed(), key_gamma_policy(), key_jobs(), key_out()};
    case Command::SweepStationarity:
      return {key_agents(), key_items(), key_rho_grid(), key_pressures(), key_nus(), key_reference_nu(),
              key_band(), key_realizations(), key_seed(), key_gamma_policy(), key_jobs(), key_out()};
  }
  return {};
}

}  // namespace

const std::vector<ConfigKey>& config_keys(Command command) {
  static const std::map<Command, Keys> all = [] {
    std::map<Command, Keys> keys;
    for (auto c : {Command::Simulate, Command::Analytic, Command::SweepRho, Command::SweepItemSize,
                   Command::SweepStationarity}) {
      keys[c] = make_keys(c);
    }
    return keys;
  }();
  return all.at(command);
}

std::string command_name(Command command) {
  switch (command) {
    case Command::Simulate: return "simulate";
    case Command::Analytic: return "analytic";
    case Command::SweepRho: return "sweep rho";
    case Command::SweepItemSize: return "sweep item-size";
    case Command::SweepStationarity: return "sweep stationarity";
  }
  return "";
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "config line " + std::to_string(number) + ": expected key=value");
    }
    entries[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
  }
  return entries;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "config: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

void apply_config(RunConfig& config, const std::map<std::string, std::string>& entries) {
  const auto& keys = config_keys(config.command);
  for (const auto& [name, value] : entries) {
    const auto it = std::find_if(keys.begin(), keys.end(), [&](const ConfigKey& k) { return k.name == name; });
    if (it == keys.end()) {
      throw Error(ErrorCode::InvalidArgument, name + ": unknown key for " + command_name(config.command));
    }
    it->set(config, value);
  }
}

std::string to_config_text(const RunConfig& config) {
  std::string text = "# " + command_name(config.command) + "\n";
  for (const auto& key : config_keys(config.command)) text += key.name + "=" + key.get(config) + "\n";
  return text;
}

ModelParams model_params(const RunConfig& config) {
  ModelParams params;
  params.n_agents = config.agents;
  params.n_items = config.items;
  params.pressure = config.pressure;
  params.interactions_per_pair = config.nu;
  params.gamma_policy = config.gamma_policy;
  if (config.capacity && config.rho) {
    throw Error(ErrorCode::InvalidArgument, "capacity: give either capacity or rho, not both");
  }
  if (config.rho) {
    const double r = *config.rho;
    params.capacity = capacities_for_rho(config.items, std::span(&r, 1)).front();
  } else {
    params.capacity = config.capacity.value_or(10);
  }
  return params;
}

}  // namespace srmwa
