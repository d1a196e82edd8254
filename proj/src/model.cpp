#include "srmwa/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace srmwa {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapacityExceedsItems: return "CapacityExceedsItems";
    case ErrorCode::TooFewAgents: return "TooFewAgents";
    case ErrorCode::PressureOutOfRange: return "PressureOutOfRange";
    case ErrorCode::NonPositiveCount: return "NonPositiveCount";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::PolicyMismatch: return "PolicyMismatch";
    case ErrorCode::DegenerateRates: return "DegenerateRates";
    case ErrorCode::ReducibleChain: return "ReducibleChain";
    case ErrorCode::NonIntegerCapacity: return "NonIntegerCapacity";
    case ErrorCode::DivisionByZeroShare: return "DivisionByZeroShare";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

GammaPolicy default_gamma_policy(std::int64_t capacity) {
  if (capacity == 1) return ExactM1{};
  return Approximation{};
}

std::string format_gamma_policy(const GammaPolicy& policy) {
  if (std::holds_alternative<ExactM1>(policy)) return "exact-m1";
  if (std::holds_alternative<Approximation>(policy)) return "approx";
  std::ostringstream out;
  out.precision(17);
  out << "fixed:" << std::get<FixedGamma>(policy).value;
  return out.str();
}

GammaPolicy parse_gamma_policy(const std::string& text) {
  if (text == "exact-m1") return ExactM1{};
  if (text == "approx") return Approximation{};
  constexpr std::string_view prefix = "fixed:";
  if (text.starts_with(prefix)) {
    const std::string number = text.substr(prefix.size());
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != number.size()) {
      throw Error(ErrorCode::InvalidArgument, "gamma-policy: cannot parse fixed value '" + number + "'");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw Error(ErrorCode::GammaOutOfRange, "gamma-policy: fixed value must lie in [0,1]");
    }
    return FixedGamma{value};
  }
  throw Error(ErrorCode::InvalidArgument,
              "gamma-policy: expected exact-m1, approx or fixed:<v>, got '" + text + "'");
}

std::optional<ValidationError> validate(const ModelParams& params) {
  auto fail = [](ErrorCode code, const char* field, std::string message) {
    return std::optional<ValidationError>(ValidationError{code, field, std::move(message)});
  };
  if (params.n_agents <= 0) return fail(ErrorCode::NonPositiveCount, "agents", "agents must be positive");
  if (params.n_items <= 0) return fail(ErrorCode::NonPositiveCount, "items", "items must be positive");
  if (params.capacity <= 0) return fail(ErrorCode::NonPositiveCount, "capacity", "capacity must be positive");
  if (!(params.interactions_per_pair > 0.0) || !std::isfinite(params.interactions_per_pair)) {
    return fail(ErrorCode::NonPositiveCount, "nu", "nu must be a positive finite number");
  }
  if (params.n_agents < 2) {
    return fail(ErrorCode::TooFewAgents, "agents", "at least two agents are needed (giver and taker)");
  }
  if (params.capacity > params.n_items) {
    return fail(ErrorCode::CapacityExceedsItems, "capacity", "capacity must not exceed items");
  }
  if (!(params.pressure >= 0.0 && params.pressure <= 1.0)) {
    return fail(ErrorCode::PressureOutOfRange, "pressure", "pressure must lie in [0,1]");
  }
  if (const auto* fixed = std::get_if<FixedGamma>(&params.gamma_policy)) {
    if (!(fixed->value >= 0.0 && fixed->value <= 1.0)) {
      return fail(ErrorCode::GammaOutOfRange, "gamma-policy", "fixed gamma must lie in [0,1]");
    }
  }
  return std::nullopt;
}

void require_valid(const ModelParams& params) {
  if (auto error = validate(params)) {
    throw Error(error->code, error->field + ": " + error->message);
  }
}

double rho(const ModelParams& params) {
  return static_cast<double>(params.capacity) / static_cast<double>(params.n_items);
}

std::uint64_t total_recommendations(const ModelParams& params) {
  const double n = static_cast<double>(params.n_agents);
  const double exact = params.interactions_per_pair * n * n;
  const double nearest = std::round(exact);
  // nu given in decimal (e.g. 0.1) may land a hair above an integer.
  if (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) {
    return static_cast<std::uint64_t>(nearest);
  }
  return static_cast<std::uint64_t>(std::ceil(exact));
}

}  // namespace srmwa
