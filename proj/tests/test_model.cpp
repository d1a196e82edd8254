#include <doctest.h>

#include "srmwa/model.hpp"

using namespace srmwa;

namespace {

ModelParams params(std::int64_t n, std::int64_t items, std::int64_t m, double p) {
  ModelParams out;
  out.n_agents = n;
  out.n_items = items;
  out.capacity = m;
  out.pressure = p;
  return out;
}

ErrorCode code_of(const ModelParams& p) {
  const auto error = validate(p);
  REQUIRE(error.has_value());
  return error->code;
}

}  // namespace

TEST_CASE("validate accepts the standard operating point") {
  CHECK_FALSE(validate(params(100, 100, 10, 0.1)).has_value());
  CHECK_FALSE(validate(params(2, 1, 1, 0.0)).has_value());
  CHECK_FALSE(validate(params(100, 100, 100, 1.0)).has_value());
}

TEST_CASE("validate names the violated constraint") {
  CHECK(code_of(params(100, 100, 101, 0.1)) == ErrorCode::CapacityExceedsItems);
  CHECK(code_of(params(1, 10, 1, 0.0)) == ErrorCode::TooFewAgents);
  CHECK(code_of(params(100, 100, 10, 1.5)) == ErrorCode::PressureOutOfRange);
  CHECK(code_of(params(100, 100, 10, -0.01)) == ErrorCode::PressureOutOfRange);
  CHECK(code_of(params(100, 100, 0, 0.1)) == ErrorCode::NonPositiveCount);
  CHECK(code_of(params(0, 100, 10, 0.1)) == ErrorCode::NonPositiveCount);
  CHECK(code_of(params(100, 0, 1, 0.1)) == ErrorCode::NonPositiveCount);

  auto p = params(100, 100, 10, 0.1);
  p.interactions_per_pair = 0.0;
  CHECK(code_of(p) == ErrorCode::NonPositiveCount);
  p = params(100, 100, 10, 0.1);
  p.gamma_policy = FixedGamma{1.2};
  CHECK(code_of(p) == ErrorCode::GammaOutOfRange);

  const auto error = validate(params(100, 100, 101, 0.1));
  CHECK(error->field == "capacity");
  CHECK_THROWS_AS(require_valid(params(1, 10, 1, 0.0)), Error);
}

TEST_CASE("rho is capacity over items") {
  CHECK(rho(params(100, 100, 1, 0.1)) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(rho(params(100, 100, 100, 0.1)) == 1.0);
  CHECK(rho(params(100, 100, 35, 0.1)) == doctest::Approx(0.35).epsilon(1e-15));
}

TEST_CASE("recommendation budget is ceil(nu N^2)") {
  auto p = params(100, 100, 10, 0.1);
  p.interactions_per_pair = 1000.0;
  CHECK(total_recommendations(p) == 10'000'000u);
  p.interactions_per_pair = 0.1;
  p.n_agents = 10;
  CHECK(total_recommendations(p) == 10u);
  p.interactions_per_pair = 0.015;
  CHECK(total_recommendations(p) == 2u);
}

TEST_CASE("gamma policy text form") {
  CHECK(std::holds_alternative<ExactM1>(parse_gamma_policy("exact-m1")));
  CHECK(std::holds_alternative<Approximation>(parse_gamma_policy("approx")));
  CHECK(std::get<FixedGamma>(parse_gamma_policy("fixed:0.25")).value == 0.25);
  CHECK_THROWS_AS(parse_gamma_policy("fixed:abc"), Error);
  CHECK_THROWS_AS(parse_gamma_policy("fixed:2"), Error);
  CHECK_THROWS_AS(parse_gamma_policy("sometimes"), Error);
  const GammaPolicy fixed = FixedGamma{0.1};
  CHECK(parse_gamma_policy(format_gamma_policy(fixed)) == fixed);
  CHECK(std::holds_alternative<ExactM1>(default_gamma_policy(1)));
  CHECK(std::holds_alternative<Approximation>(default_gamma_policy(2)));
}

TEST_CASE("item references keep the advertised item apart") {
  CHECK(ItemRef::advertised().is_advertised());
  CHECK_FALSE(ItemRef::regular(1).is_advertised());
  CHECK(ItemRef::regular(1) != ItemRef::advertised());
  CHECK_THROWS_AS(ItemRef::regular(0), Error);
}
