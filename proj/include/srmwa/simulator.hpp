#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "srmwa/market_state.hpp"
#include "srmwa/model.hpp"
#include "srmwa/random_source.hpp"

namespace srmwa {

struct TrajectoryPoint {
  std::uint64_t recommendations = 0;
  double advertised_share = 0.0;

  bool operator==(const TrajectoryPoint&) const = default;
};

struct SimulationOutcome {
  MarketState final_state;
  std::optional<std::vector<TrajectoryPoint>> advertised_share_trajectory;
  std::uint64_t seed = 0;

  bool operator==(const SimulationOutcome&) const = default;
};

/// Symmetric start: agent k holds regular items (k*M + j) mod I for j < M and
/// nobody holds the advertised item.
MarketState init_state(const ModelParams& params);

/// One recommendation: giver, taker (distinct from giver), recommended item,
/// purchase coin, and, when the purchased item is new to the taker, a
/// discarded slot. Draws happen in exactly that order.
TransitionKind recommendation_step(MarketState& state, double pressure, RandomSource& rng);

inline TransitionKind recommendation_step(MarketState& state, const ModelParams& params,
                                          RandomSource& rng) {
  return recommendation_step(state, params.pressure, rng);
}

/// Runs total_recommendations(params) steps from init_state. When
/// `sample_every` is set, the advertised share is recorded at step 0 and
/// after every `sample_every` steps.
SimulationOutcome run(const ModelParams& params, std::uint64_t seed,
                      std::optional<std::uint64_t> sample_every = std::nullopt);

/// Default trajectory spacing: one unit of nu, i.e. N^2 steps.
std::uint64_t default_sample_every(const ModelParams& params);

double market_share(const MarketState& state, ItemRef item);

}  // namespace srmwa
