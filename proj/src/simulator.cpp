#include "srmwa/simulator.hpp"

namespace srmwa {

MarketState init_state(const ModelParams& params) {
  require_valid(params);
  const std::int64_t items = params.n_items;
  const std::int64_t capacity = params.capacity;
  std::vector<std::vector<MarketState::ItemId>> stocks(static_cast<std::size_t>(params.n_agents));
  for (std::int64_t agent = 0; agent < params.n_agents; ++agent) {
    auto& stock = stocks[static_cast<std::size_t>(agent)];
    stock.reserve(static_cast<std::size_t>(capacity));
    // M consecutive residues mod I are distinct because M <= I.
    for (std::int64_t j = 0; j < capacity; ++j) {
      stock.push_back(static_cast<MarketState::ItemId>((agent * capacity + j) % items));
    }
  }
  return MarketState(items, capacity, stocks);
}

TransitionKind recommendation_step(MarketState& state, double pressure, RandomSource& rng) {
  const auto n = static_cast<std::uint64_t>(state.n_agents());
  const auto m = static_cast<std::uint64_t>(state.capacity());

  const auto giver = static_cast<std::int64_t>(rng.index(n));
  auto taker = static_cast<std::int64_t>(rng.index(n - 1));
  if (taker >= giver) ++taker;
  const auto recommended = state.item_at(giver, static_cast<std::int64_t>(rng.index(m)));
  const bool advertised = rng.unit() < pressure;
  const auto purchased = advertised ? state.advertised_id() : recommended;

  state.count_recommendation();
  if (state.owns(taker, purchased)) return TransitionKind::Stay;

  const auto slot = static_cast<std::int64_t>(rng.index(m));
  const auto discarded = state.item_at(taker, slot);
  state.replace(taker, slot, purchased);

  if (purchased == state.advertised_id()) return TransitionKind::Up;
  if (discarded == state.advertised_id()) return TransitionKind::Down;
  return TransitionKind::Stay;
}

std::uint64_t default_sample_every(const ModelParams& params) {
  return static_cast<std::uint64_t>(params.n_agents * params.n_agents);
}

double market_share(const MarketState& state, ItemRef item) {
  return static_cast<double>(state.owner_count(item)) / static_cast<double>(state.n_agents());
}

SimulationOutcome run(const ModelParams& params, std::uint64_t seed,
                      std::optional<std::uint64_t> sample_every) {
  if (sample_every && *sample_every == 0) {
    throw Error(ErrorCode::InvalidArgument, "sample_every must be positive");
  }
  SimulationOutcome outcome{init_state(params), std::nullopt, seed};
  MarketState& state = outcome.final_state;
  RandomSource rng(seed);
  const std::uint64_t steps = total_recommendations(params);
  const auto advertised = state.advertised_id();

  if (!sample_every) {
    for (std::uint64_t s = 0; s < steps; ++s) recommendation_step(state, params.pressure, rng);
    return outcome;
  }

  auto& trajectory = outcome.advertised_share_trajectory.emplace();
  auto share = [&] {
    return static_cast<double>(state.owner_count(advertised)) / static_cast<double>(state.n_agents());
  };
  trajectory.push_back({0, share()});
  for (std::uint64_t s = 1; s <= steps; ++s) {
    recommendation_step(state, params.pressure, rng);
    if (s % *sample_every == 0 || s == steps) trajectory.push_back({s, share()});
  }
  return outcome;
}

}  // namespace srmwa
