#include <doctest.h>

#include <vector>

#include "srmwa/analytic.hpp"
#include "srmwa/experiments.hpp"

using namespace srmwa;

namespace {

ModelParams base(std::int64_t n, std::int64_t items, double nu) {
  ModelParams out;
  out.n_agents = n;
  out.n_items = items;
  out.capacity = 1;
  out.interactions_per_pair = nu;
  return out;
}

}  // namespace

TEST_CASE("capacity grid from rho") {
  const std::vector<double> grid{0.01, 0.35, 1.0};
  CHECK(capacities_for_rho(100, grid) == std::vector<std::int64_t>{1, 35, 100});
  CHECK(default_rho_grid().size() == 15);
  CHECK(capacities_for_rho(100, default_rho_grid()).front() == 1);

  const std::vector<double> fractional{0.015};
  try {
    capacities_for_rho(100, fractional);
    FAIL("expected NonIntegerCapacity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegerCapacity);
  }
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(capacities_for_rho(100, zero), Error);
}

TEST_CASE("analytic policy per sweep point") {
  CHECK(std::holds_alternative<ExactM1>(analytic_policy_for(Approximation{}, 1)));
  CHECK(std::holds_alternative<Approximation>(analytic_policy_for(Approximation{}, 3)));
  CHECK(std::holds_alternative<ExactM1>(analytic_policy_for(ExactM1{}, 3)));
  CHECK(analytic_policy_for(FixedGamma{0.2}, 1) == GammaPolicy{FixedGamma{0.2}});
}

TEST_CASE("rho sweep yields one record per pressure and ratio") {
  const std::vector<double> grid{0.05, 0.25, 1.0};
  const std::vector<double> pressures{0.1, 0.0};
  const auto records = sweep_rho(base(20, 20, 10.0), grid, pressures, 4, 7, 2);
  REQUIRE(records.size() == 6);
  CHECK(records[0].params.pressure == 0.1);
  CHECK(records[0].params.capacity == 1);
  CHECK(std::holds_alternative<ExactM1>(records[0].params.gamma_policy));
  CHECK(records[1].params.capacity == 5);
  CHECK(records[3].params.pressure == 0.0);
  for (const auto& r : records) {
    CHECK(r.rho == doctest::Approx(static_cast<double>(r.params.capacity) / 20.0));
    CHECK(r.seed_base == 7u);
    if (r.params.pressure == 0.0 && (r.params.capacity == 1 || r.params.capacity == 20)) {
      // Absorbing at both ends (M = 1 exactly, or gamma = max{0.5, M/I} = 1).
      CHECK_FALSE(r.analytic_f_a.has_value());
      continue;
    }
    REQUIRE(r.analytic_f_a.has_value());
    CHECK(*r.analytic_f_a == doctest::Approx(expected_advertised_share(r.params)));
    CHECK(r.stats.f_min <= r.stats.f_top);
    CHECK(r.stats.n_realizations == 4);
  }
  for (std::size_t i = 3; i < 6; ++i) CHECK(records[i].stats.f_a == 0.0);
  CHECK(*records[4].analytic_f_a == 0.0);
  // Matches a direct ensemble at the same point.
  CHECK(records[1].stats == run_ensemble(records[1].params, 4, 7));
}

TEST_CASE("item-size experiment is relative to I = 100") {
  const std::vector<std::int64_t> ks{100, 200};
  const std::vector<double> grid{0.01, 0.1};
  const auto rows = item_size_experiment(base(10, 100, 5.0), ks, grid, 0.1, 3, 11);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].items == 100);
  CHECK(rows[0].relative == 1.0);
  CHECK(rows[1].relative == 1.0);
  CHECK(rows[2].items == 200);
  CHECK(rows[2].capacity == 2);
  CHECK(rows[3].capacity == 20);
  CHECK(rows[3].reference_f_a == rows[1].stats.f_a);
  CHECK(rows[3].relative == doctest::Approx(rows[3].stats.f_a / rows[1].stats.f_a));

  try {
    item_size_experiment(base(10, 100, 2.0), ks, grid, 0.0, 2, 1);
    FAIL("expected DivisionByZeroShare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZeroShare);
  }
}

TEST_CASE("stationarity experiment compares interaction budgets") {
  const std::vector<double> nus{5.0, 10.0};
  const std::vector<double> grid{0.1, 0.5};
  const std::vector<double> pressures{0.1};
  const auto rows = stationarity_experiment(base(20, 20, 1.0), nus, 5.0, grid, pressures, 3, 5);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].nu == 5.0);
  CHECK(rows[0].relative == 1.0);
  CHECK(rows[0].stationary);
  CHECK(rows[2].nu == 5.0);
  CHECK(rows[2].relative == 1.0);
  CHECK(rows[1].rho == 0.1);
  CHECK(rows[3].rho == 0.5);
  for (const auto& r : rows) CHECK(r.stationary == (std::abs(r.relative - 1.0) <= kStationarityBand));

  const auto same = stationarity_experiment(base(20, 20, 1.0), std::vector<double>{5.0}, 5.0, grid, pressures, 2, 5);
  for (const auto& r : same) CHECK(r.relative == 1.0);
}
