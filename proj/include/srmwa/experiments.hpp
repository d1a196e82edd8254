#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "srmwa/metrics.hpp"
#include "srmwa/model.hpp"

namespace srmwa {

struct ExperimentRecord {
  ModelParams params;
  double rho = 0.0;
  ShareStats stats;
  std::optional<double> analytic_f_a;
  std::uint64_t seed_base = 0;
};

/// Capacity ratio grid used for the attention-capacity sweeps.
std::vector<double> default_rho_grid();

/// M = rho * I for every grid entry. Throws NonIntegerCapacity when rho * I is
/// more than 1e-9 away from an integer, and CapacityExceedsItems / NonPositiveCount
/// when the result leaves 1..I.
std::vector<std::int64_t> capacities_for_rho(std::int64_t n_items, std::span<const double> rho_grid);

/// Policy the analytic engine uses at a sweep point: the approximation turns
/// into exact-m1 at M = 1; explicit exact-m1 or fixed requests are kept.
GammaPolicy analytic_policy_for(const GammaPolicy& requested, std::int64_t capacity);

/// One record per (pressure, rho), pressures outermost, each carrying the
/// simulated ensemble and the analytic expected share.
std::vector<ExperimentRecord> sweep_rho(const ModelParams& base, std::span<const double> rho_grid,
                                        std::span<const double> pressures, std::int64_t n_realizations,
                                        std::uint64_t seed_base, unsigned jobs = 1);

struct ItemSizePoint {
  std::int64_t items = 0;
  double rho = 0.0;
  std::int64_t capacity = 0;
  ShareStats stats;
  double reference_f_a = 0.0;
  double relative = 0.0;  // f_a(I = k) / f_a(I = reference)
};

inline constexpr std::int64_t kReferenceItems = 100;

/// Advertised share at I = k relative to I = reference_items with N, nu and
/// pressure held fixed. M = round(rho * k). Rows are ordered k outermost.
std::vector<ItemSizePoint> item_size_experiment(const ModelParams& base, std::span<const std::int64_t> k_values,
                                                std::span<const double> rho_grid, double pressure,
                                                std::int64_t n_realizations, std::uint64_t seed_base,
                                                unsigned jobs = 1,
                                                std::int64_t reference_items = kReferenceItems);

struct StationarityPoint {
  double rho = 0.0;
  std::int64_t capacity = 0;
  double pressure = 0.0;
  double nu = 0.0;
  ShareStats stats;
  double reference_f_a = 0.0;
  double relative = 0.0;  // f_a(nu) / f_a(reference nu)
  bool stationary = false;
};

inline constexpr double kStationarityBand = 0.02;

/// Advertised share after nu*N^2 steps relative to reference_nu*N^2 steps.
/// Rows are ordered pressure, then rho, then nu. A row is stationary when
/// |relative - 1| <= band.
std::vector<StationarityPoint> stationarity_experiment(const ModelParams& base, std::span<const double> nu_values,
                                                       double reference_nu, std::span<const double> rho_grid,
                                                       std::span<const double> pressures,
                                                       std::int64_t n_realizations, std::uint64_t seed_base,
                                                       unsigned jobs = 1, double band = kStationarityBand);

}  // namespace srmwa
