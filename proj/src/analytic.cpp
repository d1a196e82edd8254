#include "srmwa/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

namespace srmwa {
namespace {

void require_state_index(std::int64_t i, std::int64_t n) {
  if (i < 0 || i > n) {
    throw Error(ErrorCode::InvalidArgument,
                "state index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  }
}

}  // namespace

TridiagonalMatrix::TridiagonalMatrix(const TransitionRates& rates)
    : lower_(rates.down), diag_(rates.stay), upper_(rates.up) {
  if (lower_.size() != diag_.size() || upper_.size() != diag_.size() || diag_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "transition rates: vectors must share a nonzero length");
  }
}

double TridiagonalMatrix::at(std::int64_t row, std::int64_t col) const {
  const auto r = static_cast<std::size_t>(row);
  if (col == row) return diag_[r];
  if (col == row - 1) return lower_[r];
  if (col == row + 1) return upper_[r];
  return 0.0;
}

double TridiagonalMatrix::row_sum(std::int64_t row) const {
  double sum = 0.0;
  for (std::int64_t col = std::max<std::int64_t>(0, row - 1); col <= std::min(size() - 1, row + 1); ++col) {
    sum += at(row, col);
  }
  return sum;
}

std::vector<double> TridiagonalMatrix::left_multiply(const std::vector<double>& x) const {
  const std::size_t n = diag_.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += x[i] * diag_[i];
    if (i > 0) y[i - 1] += x[i] * lower_[i];
    if (i + 1 < n) y[i + 1] += x[i] * upper_[i];
  }
  return y;
}

double gamma_value(const ModelParams& params) {
  if (std::holds_alternative<ExactM1>(params.gamma_policy)) {
    if (params.capacity != 1) {
      throw Error(ErrorCode::PolicyMismatch, "exact-m1 gamma policy requires capacity 1");
    }
    return 0.0;
  }
  if (std::holds_alternative<Approximation>(params.gamma_policy)) {
    return std::max(0.5, rho(params));
  }
  const double value = std::get<FixedGamma>(params.gamma_policy).value;
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "fixed gamma must lie in [0,1]");
  }
  return value;
}

double transition_up(std::int64_t i, const ModelParams& params) {
  require_state_index(i, params.n_agents);
  const double n = static_cast<double>(params.n_agents);
  const double m = static_cast<double>(params.capacity);
  const double x = static_cast<double>(i);
  const double p = params.pressure;
  return (n - x) / (n * (n - 1.0)) * ((n - 1.0 - x / m) * p + x / m);
}

double transition_down(std::int64_t i, const ModelParams& params, double gamma) {
  require_state_index(i, params.n_agents);
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "gamma must lie in [0,1]");
  }
  const double n = static_cast<double>(params.n_agents);
  const double m = static_cast<double>(params.capacity);
  const double x = static_cast<double>(i);
  const double p = params.pressure;
  return x * (1.0 - p) * (1.0 - gamma) / (n * (n - 1.0) * m) * (n - x + (x - 1.0) * (m - 1.0) / m);
}

TransitionRates build_rates(const ModelParams& params) {
  require_valid(params);
  TransitionRates rates;
  rates.gamma_used = gamma_value(params);
  const auto size = static_cast<std::size_t>(params.n_agents + 1);
  rates.up.resize(size);
  rates.down.resize(size);
  rates.stay.resize(size);
  for (std::int64_t i = 0; i <= params.n_agents; ++i) {
    const auto k = static_cast<std::size_t>(i);
    rates.up[k] = transition_up(i, params);
    rates.down[k] = transition_down(i, params, rates.gamma_used);
    const double stay = 1.0 - rates.up[k] - rates.down[k];
    if (stay < -1e-12) {
      throw Error(ErrorCode::DegenerateRates, "negative stay probability at state " + std::to_string(i));
    }
    rates.stay[k] = std::max(0.0, stay);
  }
  return rates;
}

StationaryDistribution stationary(const TransitionRates& rates) {
  const std::int64_t n = rates.n_agents();
  if (n < 0 || rates.down.size() != rates.up.size() || rates.stay.size() != rates.up.size()) {
    throw Error(ErrorCode::InvalidArgument, "transition rates: vectors must share a nonzero length");
  }
  auto up = [&](std::int64_t i) { return rates.up[static_cast<std::size_t>(i)]; };
  auto down = [&](std::int64_t i) { return rates.down[static_cast<std::size_t>(i)]; };

  // States i and i+1 communicate iff up(i) > 0 and down(i+1) > 0. A maximal run
  // [lo, hi] is closed iff nothing leaks out of either end.
  std::int64_t closed_lo = -1;
  std::int64_t closed_hi = -1;
  int closed_runs = 0;
  for (std::int64_t lo = 0; lo <= n;) {
    std::int64_t hi = lo;
    while (hi < n && up(hi) > 0.0 && down(hi + 1) > 0.0) ++hi;
    const bool leaks_down = lo > 0 && down(lo) > 0.0;
    const bool leaks_up = hi < n && up(hi) > 0.0;
    if (!leaks_down && !leaks_up) {
      ++closed_runs;
      closed_lo = lo;
      closed_hi = hi;
    }
    lo = hi + 1;
  }
  if (closed_runs != 1) {
    throw Error(ErrorCode::ReducibleChain,
                "chain has " + std::to_string(closed_runs) + " closed classes; stationary distribution is not unique");
  }

  StationaryDistribution result;
  result.pi.assign(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<double> log_weight(static_cast<std::size_t>(closed_hi - closed_lo + 1), 0.0);
  for (std::int64_t k = closed_lo + 1; k <= closed_hi; ++k) {
    const auto j = static_cast<std::size_t>(k - closed_lo);
    log_weight[j] = log_weight[j - 1] + std::log(up(k - 1)) - std::log(down(k));
  }
  const double peak = *std::max_element(log_weight.begin(), log_weight.end());
  double total = 0.0;
  for (double w : log_weight) total += std::exp(w - peak);
  const double log_norm = peak + std::log(total);
  for (std::int64_t k = closed_lo; k <= closed_hi; ++k) {
    result.pi[static_cast<std::size_t>(k)] = std::exp(log_weight[static_cast<std::size_t>(k - closed_lo)] - log_norm);
  }
  return result;
}

double expected_advertised_share(const ModelParams& params) {
  const StationaryDistribution dist = stationary(build_rates(params));
  double mean = 0.0;
  for (std::size_t i = 0; i < dist.pi.size(); ++i) mean += static_cast<double>(i) * dist.pi[i];
  return mean / static_cast<double>(params.n_agents);
}

double m1_up_down_ratio(std::int64_t i, const ModelParams& params) {
  if (params.capacity != 1) {
    throw Error(ErrorCode::PolicyMismatch, "closed-form up/down ratio requires capacity 1");
  }
  if (!(params.pressure > 0.0 && params.pressure < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "closed-form up/down ratio requires 0 < p < 1");
  }
  if (i < 1 || i > params.n_agents - 1) {
    throw Error(ErrorCode::InvalidArgument, "closed-form up/down ratio requires 1 <= i <= N-1");
  }
  const double n = static_cast<double>(params.n_agents);
  const double p = params.pressure;
  return 1.0 + (n - 1.0) / static_cast<double>(i) * (p / (1.0 - p));
}

TridiagonalMatrix build_transition_matrix(const TransitionRates& rates) {
  return TridiagonalMatrix(rates);
}

}  // namespace srmwa
