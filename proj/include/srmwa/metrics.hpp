#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "srmwa/market_state.hpp"
#include "srmwa/model.hpp"

namespace srmwa {

/// Market-share statistics over an ensemble of final states.
struct ShareStats {
  double f_a = 0.0;      // mean advertised share
  double f_top = 0.0;    // mean top-5% cutoff share
  double f_min = 0.0;    // mean minimum share over all items
  double std_f_a = 0.0;  // sample standard deviation of the advertised share
  std::int64_t n_realizations = 0;

  bool operator==(const ShareStats&) const = default;
};

struct RealizationMetrics {
  double f_a = 0.0;
  double f_top = 0.0;
  double f_min = 0.0;

  bool operator==(const RealizationMetrics&) const = default;
};

inline constexpr double kTopFraction = 0.05;

/// The K-th largest share, K = ceil(fraction * |items|), over the regular
/// items and optionally the advertised one.
double top_percentile_share(const MarketState& state, double fraction, bool include_advertised = false);

/// Smallest share over every regular item and the advertised item.
double min_share(const MarketState& state);

RealizationMetrics measure(const MarketState& state);

/// Means in input order; std is the n-1 sample deviation (0 for a single run).
ShareStats summarize(std::span<const RealizationMetrics> runs);

/// Runs seeds seed_base .. seed_base + n - 1 and summarizes their final states.
ShareStats run_ensemble(const ModelParams& params, std::int64_t n_realizations, std::uint64_t seed_base,
                        unsigned jobs = 1);

/// One ensemble per parameter set, all realizations scheduled on one pool.
std::vector<ShareStats> run_ensembles(std::span<const ModelParams> points, std::int64_t n_realizations,
                                      std::uint64_t seed_base, unsigned jobs = 1);

}  // namespace srmwa
