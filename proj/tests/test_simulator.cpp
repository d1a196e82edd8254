#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "srmwa/analytic.hpp"
#include "srmwa/simulator.hpp"

using namespace srmwa;

namespace {

ModelParams params(std::int64_t n, std::int64_t items, std::int64_t m, double p, double nu = 10.0) {
  ModelParams out;
  out.n_agents = n;
  out.n_items = items;
  out.capacity = m;
  out.pressure = p;
  out.interactions_per_pair = nu;
  return out;
}

}  // namespace

TEST_CASE("initial state is symmetric and advertisement-free") {
  SUBCASE("N=4 I=4 M=2") {
    const auto state = init_state(params(4, 4, 2, 0.1));
    for (std::size_t k = 1; k <= 4; ++k) CHECK(state.owner_count(ItemRef::regular(k)) == 2);
    CHECK(market_share(state, ItemRef::advertised()) == 0.0);
  }
  SUBCASE("N=100 I=100 M=10") {
    const auto state = init_state(params(100, 100, 10, 0.1));
    for (std::size_t k = 1; k <= 100; ++k) CHECK(market_share(state, ItemRef::regular(k)) == doctest::Approx(0.10));
    CHECK(market_share(state, ItemRef::advertised()) == 0.0);
    CHECK(state.consistent());
  }
  SUBCASE("N=3 I=2 M=1 differs by one owner") {
    const auto state = init_state(params(3, 2, 1, 0.1));
    const auto a = state.owner_count(ItemRef::regular(1));
    const auto b = state.owner_count(ItemRef::regular(2));
    CHECK(std::max(a, b) == 2);
    CHECK(std::min(a, b) == 1);
  }
  SUBCASE("M = I gives every agent every item") {
    const auto state = init_state(params(5, 7, 7, 0.1));
    for (std::size_t k = 1; k <= 7; ++k) CHECK(state.owner_count(ItemRef::regular(k)) == 5);
  }
}

TEST_CASE("market share is owners over agents") {
  MarketState state(2, 1, {{0}, {1}, {1}, {2}});
  CHECK(market_share(state, ItemRef::regular(1)) == 0.25);
  CHECK(market_share(state, ItemRef::regular(2)) == 0.5);
  CHECK(market_share(state, ItemRef::advertised()) == 0.25);
  MarketState all(2, 1, {{0}, {0}});
  CHECK(market_share(all, ItemRef::regular(1)) == 1.0);
}

TEST_CASE("no pressure never produces an up transition") {
  const auto p = params(10, 10, 3, 0.0);
  auto state = init_state(p);
  RandomSource rng(3);
  for (int s = 0; s < 20000; ++s) REQUIRE(recommendation_step(state, p, rng) != TransitionKind::Up);
  CHECK(state.owner_count(ItemRef::advertised()) == 0);
  CHECK(state.recommendations_done() == 20000u);
}

TEST_CASE("full pressure on a taker without the advertised item is an up transition") {
  const auto p = params(6, 6, 2, 1.0);
  auto state = init_state(p);
  RandomSource rng(11);
  // Nobody holds the advertised item yet, so whoever the taker is, it buys it.
  CHECK(recommendation_step(state, p, rng) == TransitionKind::Up);
  CHECK(state.owner_count(ItemRef::advertised()) == 1);
}

TEST_CASE("single-slot giver without the advertised item always evicts it from the taker") {
  // Agent 0 holds item 1, agent 1 holds the advertised item (dense id 2).
  // With p = 0 the giver-0 path must be Down; the giver-1 path must be Up.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    MarketState state(2, 1, {{0}, {2}});
    RandomSource rng(seed);
    const auto kind = recommendation_step(state, 0.0, rng);
    REQUIRE(kind != TransitionKind::Stay);
    if (kind == TransitionKind::Down) {
      CHECK(state.owner_count(ItemRef::advertised()) == 0);
      CHECK(state.owner_count(ItemRef::regular(1)) == 2);
    } else {
      CHECK(state.owner_count(ItemRef::advertised()) == 2);
    }
  }
}

TEST_CASE("steps conserve stock size and change the advertised count by at most one") {
  for (std::int64_t m : {1, 2, 5}) {
    const auto p = params(8, 12, m, 0.3);
    auto state = init_state(p);
    RandomSource rng(static_cast<std::uint64_t>(100 + m));
    for (int s = 0; s < 3000; ++s) {
      const auto before = state.owner_count(ItemRef::advertised());
      const auto kind = recommendation_step(state, p, rng);
      const auto after = state.owner_count(ItemRef::advertised());
      REQUIRE(std::abs(after - before) <= 1);
      if (kind == TransitionKind::Up) REQUIRE(after == before + 1);
      if (kind == TransitionKind::Down) REQUIRE(after == before - 1);
      if (kind == TransitionKind::Stay) REQUIRE(after == before);
    }
    CHECK(state.consistent());
    std::int64_t total = 0;
    for (auto c : state.owner_counts()) total += c;
    CHECK(total == p.n_agents * m);
  }
}

TEST_CASE("run executes ceil(nu N^2) steps and is deterministic") {
  auto p = params(20, 20, 4, 0.05, 7.5);
  const auto a = run(p, 99, 50);
  const auto b = run(p, 99, 50);
  CHECK(a == b);
  CHECK(a.final_state.recommendations_done() == 3000u);
  CHECK(a.seed == 99u);
  const auto c = run(p, 100);
  CHECK_FALSE(c.advertised_share_trajectory.has_value());
  CHECK_FALSE(c.final_state == a.final_state);

  const auto& trajectory = *a.advertised_share_trajectory;
  CHECK(trajectory.front().recommendations == 0u);
  CHECK(trajectory.back().recommendations == 3000u);
  CHECK(trajectory.size() == 61u);
  for (std::size_t i = 1; i < trajectory.size(); ++i) {
    CHECK(trajectory[i].recommendations > trajectory[i - 1].recommendations);
  }
  CHECK(trajectory.back().advertised_share == market_share(a.final_state, ItemRef::advertised()));
  CHECK(default_sample_every(p) == 400u);
  CHECK_THROWS_AS(run(p, 1, 0), Error);
}

TEST_CASE("zero pressure keeps the advertised share at zero for the whole run") {
  const auto outcome = run(params(30, 30, 3, 0.0, 20.0), 5, 30);
  for (const auto& point : *outcome.advertised_share_trajectory) CHECK(point.advertised_share == 0.0);
}

TEST_CASE("full pressure absorbs every agent and stays there") {
  const auto p = params(20, 20, 3, 1.0, 50.0);
  const auto outcome = run(p, 8);
  CHECK(market_share(outcome.final_state, ItemRef::advertised()) == 1.0);
  auto state = outcome.final_state;
  RandomSource rng(9);
  for (int s = 0; s < 5000; ++s) REQUIRE(recommendation_step(state, p, rng) == TransitionKind::Stay);
}

TEST_CASE("single capacity with small pressure reaches full advertised share") {
  const auto outcome = run(params(100, 100, 1, 1e-2, 1000.0), 2024);
  CHECK(market_share(outcome.final_state, ItemRef::advertised()) == 1.0);
}

TEST_CASE("transient distribution of the advertised count matches the exact M=1 chain") {
  // At M = 1 the rates are exact (gamma = 0), so after k steps from state 0 the
  // count is distributed as e_0 T^k.
  const std::int64_t n = 5;
  const double pressure = 0.1;
  const int steps = 25;
  const int replicates = 60000;

  std::vector<double> up(n + 1), down(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    up[static_cast<std::size_t>(i)] = oracle::exact_up(i, n, 1, oracle::Rational(1, 10)).convert_to<double>();
    down[static_cast<std::size_t>(i)] =
        oracle::exact_down(i, n, 1, oracle::Rational(1, 10), 0).convert_to<double>();
  }
  const auto t = oracle::dense_chain(up, down);
  std::vector<double> exact(n + 1, 0.0);
  exact[0] = 1.0;
  for (int s = 0; s < steps; ++s) {
    std::vector<double> next(n + 1, 0.0);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) next[j] += exact[i] * t[i][j];
    }
    exact = next;
  }

  std::vector<double> empirical(n + 1, 0.0);
  const auto p = params(n, n, 1, pressure);
  RandomSource rng(4242);
  for (int r = 0; r < replicates; ++r) {
    auto state = init_state(p);
    for (int s = 0; s < steps; ++s) recommendation_step(state, p, rng);
    empirical[static_cast<std::size_t>(state.owner_count(ItemRef::advertised()))] += 1.0 / replicates;
  }
  double l1 = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) l1 += std::abs(exact[i] - empirical[i]);
  CHECK(l1 < 0.03);
}
