#include "srmwa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "srmwa/analytic.hpp"

namespace srmwa {
namespace {

// Index of `params` in `points`, appending it when absent, so that identical
// ensembles are simulated once.
std::size_t intern(std::vector<ModelParams>& points, const ModelParams& params) {
  const auto it = std::find(points.begin(), points.end(), params);
  if (it != points.end()) return static_cast<std::size_t>(it - points.begin());
  points.push_back(params);
  return points.size() - 1;
}

double relative_share(double value, double reference, const std::string& where) {
  if (reference == 0.0) {
    throw Error(ErrorCode::DivisionByZeroShare, "reference advertised share is zero at " + where);
  }
  return value / reference;
}

std::string describe(const char* name, double value) {
  std::ostringstream out;
  out << name << '=' << value;
  return out.str();
}

}  // namespace

std::vector<double> default_rho_grid() {
  return {0.01, 0.02, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90, 1.00};
}

std::vector<std::int64_t> capacities_for_rho(std::int64_t n_items, std::span<const double> rho_grid) {
  std::vector<std::int64_t> capacities;
  capacities.reserve(rho_grid.size());
  for (double r : rho_grid) {
    const double scaled = r * static_cast<double>(n_items);
    const double nearest = std::round(scaled);
    if (!(std::abs(scaled - nearest) <= 1e-9)) {
      throw Error(ErrorCode::NonIntegerCapacity,
                  describe("rho", r) + " times items=" + std::to_string(n_items) + " is not an integer capacity");
    }
    const auto capacity = static_cast<std::int64_t>(nearest);
    if (capacity < 1) throw Error(ErrorCode::NonPositiveCount, describe("rho", r) + " gives capacity below 1");
    if (capacity > n_items) throw Error(ErrorCode::CapacityExceedsItems, describe("rho", r) + " gives capacity above items");
    capacities.push_back(capacity);
  }
  return capacities;
}

GammaPolicy analytic_policy_for(const GammaPolicy& requested, std::int64_t capacity) {
  if (std::holds_alternative<Approximation>(requested)) return default_gamma_policy(capacity);
  return requested;
}

std::vector<ExperimentRecord> sweep_rho(const ModelParams& base, std::span<const double> rho_grid,
                                        std::span<const double> pressures, std::int64_t n_realizations,
                                        std::uint64_t seed_base, unsigned jobs) {
  const auto capacities = capacities_for_rho(base.n_items, rho_grid);
  std::vector<ModelParams> points;
  for (double pressure : pressures) {
    for (std::int64_t capacity : capacities) {
      ModelParams params = base;
      params.pressure = pressure;
      params.capacity = capacity;
      params.gamma_policy = analytic_policy_for(base.gamma_policy, capacity);
      points.push_back(params);
    }
  }
  const auto stats = run_ensembles(points, n_realizations, seed_base, jobs);

  std::vector<ExperimentRecord> records;
  records.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::optional<double> analytic;
    try {
      analytic = expected_advertised_share(points[i]);
    } catch (const Error& e) {
      // p = 0 with M = 1 has absorbing states at both ends; no unique answer.
      if (e.code() != ErrorCode::ReducibleChain) throw;
    }
    records.push_back({points[i], rho(points[i]), stats[i], analytic, seed_base});
  }
  return records;
}

std::vector<ItemSizePoint> item_size_experiment(const ModelParams& base, std::span<const std::int64_t> k_values,
                                                std::span<const double> rho_grid, double pressure,
                                                std::int64_t n_realizations, std::uint64_t seed_base,
                                                unsigned jobs, std::int64_t reference_items) {
  auto params_for = [&](std::int64_t items, double r) {
    ModelParams params = base;
    params.n_items = items;
    params.capacity = static_cast<std::int64_t>(std::llround(r * static_cast<double>(items)));
    params.pressure = pressure;
    params.gamma_policy = analytic_policy_for(base.gamma_policy, params.capacity);
    require_valid(params);
    return params;
  };

  std::vector<ModelParams> points;
  std::vector<std::size_t> reference_index;
  for (double r : rho_grid) reference_index.push_back(intern(points, params_for(reference_items, r)));
  std::vector<std::size_t> row_index;
  for (std::int64_t k : k_values) {
    for (double r : rho_grid) row_index.push_back(intern(points, params_for(k, r)));
  }
  const auto stats = run_ensembles(points, n_realizations, seed_base, jobs);

  std::vector<ItemSizePoint> rows;
  std::size_t next = 0;
  for (std::int64_t k : k_values) {
    for (std::size_t g = 0; g < rho_grid.size(); ++g) {
      const ModelParams& params = points[row_index[next]];
      ItemSizePoint row;
      row.items = k;
      row.rho = rho_grid[g];
      row.capacity = params.capacity;
      row.stats = stats[row_index[next]];
      row.reference_f_a = stats[reference_index[g]].f_a;
      row.relative = relative_share(row.stats.f_a, row.reference_f_a,
                                    describe("rho", rho_grid[g]) + " (items=" + std::to_string(k) + ")");
      rows.push_back(row);
      ++next;
    }
  }
  return rows;
}

std::vector<StationarityPoint> stationarity_experiment(const ModelParams& base, std::span<const double> nu_values,
                                                       double reference_nu, std::span<const double> rho_grid,
                                                       std::span<const double> pressures,
                                                       std::int64_t n_realizations, std::uint64_t seed_base,
                                                       unsigned jobs, double band) {
  const auto capacities = capacities_for_rho(base.n_items, rho_grid);
  auto params_for = [&](double pressure, std::int64_t capacity, double nu) {
    ModelParams params = base;
    params.pressure = pressure;
    params.capacity = capacity;
    params.interactions_per_pair = nu;
    params.gamma_policy = analytic_policy_for(base.gamma_policy, capacity);
    return params;
  };

  std::vector<ModelParams> points;
  std::vector<std::size_t> reference_index;
  std::vector<std::size_t> row_index;
  for (double pressure : pressures) {
    for (std::int64_t capacity : capacities) {
      reference_index.push_back(intern(points, params_for(pressure, capacity, reference_nu)));
      for (double nu : nu_values) row_index.push_back(intern(points, params_for(pressure, capacity, nu)));
    }
  }
  const auto stats = run_ensembles(points, n_realizations, seed_base, jobs);

  std::vector<StationarityPoint> rows;
  std::size_t next = 0;
  std::size_t cell = 0;
  for (double pressure : pressures) {
    for (std::size_t g = 0; g < capacities.size(); ++g, ++cell) {
      for (double nu : nu_values) {
        StationarityPoint row;
        row.rho = rho_grid[g];
        row.capacity = capacities[g];
        row.pressure = pressure;
        row.nu = nu;
        row.stats = stats[row_index[next++]];
        row.reference_f_a = stats[reference_index[cell]].f_a;
        row.relative = relative_share(row.stats.f_a, row.reference_f_a,
                                      describe("rho", row.rho) + ", " + describe("pressure", pressure));
        row.stationary = std::abs(row.relative - 1.0) <= band;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace srmwa
