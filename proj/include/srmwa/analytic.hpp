#pragma once

#include <cstdint>
#include <vector>

#include "srmwa/model.hpp"

namespace srmwa {

/// Birth-death chain on the number i of agents holding the advertised item.
/// Index i runs over 0..N.
struct TransitionRates {
  std::vector<double> up;
  std::vector<double> down;
  std::vector<double> stay;
  double gamma_used = 0.0;

  std::int64_t n_agents() const { return static_cast<std::int64_t>(up.size()) - 1; }
};

struct StationaryDistribution {
  std::vector<double> pi;
};

/// Row i holds (down[i], stay[i], up[i]) at columns (i-1, i, i+1).
class TridiagonalMatrix {
 public:
  explicit TridiagonalMatrix(const TransitionRates& rates);

  std::int64_t size() const { return static_cast<std::int64_t>(diag_.size()); }
  double at(std::int64_t row, std::int64_t col) const;
  double row_sum(std::int64_t row) const;
  /// x -> x T for a row vector x.
  std::vector<double> left_multiply(const std::vector<double>& x) const;

 private:
  std::vector<double> lower_;  // lower_[i] = T(i, i-1)
  std::vector<double> diag_;
  std::vector<double> upper_;  // upper_[i] = T(i, i+1)
};

/// Probability that the recommended item is already held by the taker.
/// ExactM1 gives 0 and requires M == 1; Approximation gives max{0.5, M/I}.
double gamma_value(const ModelParams& params);

double transition_up(std::int64_t i, const ModelParams& params);
double transition_down(std::int64_t i, const ModelParams& params, double gamma);

TransitionRates build_rates(const ModelParams& params);

/// Stationary distribution by detailed balance, accumulated in log space.
///
/// A birth-death chain splits into communicating runs of states; exactly one
/// of them may be closed. The distribution is supported on that run (e.g. the
/// single absorbing state N when down vanishes, or state 0 when p = 0). More
/// than one closed run raises ReducibleChain.
StationaryDistribution stationary(const TransitionRates& rates);

/// Mean of the stationary distribution divided by N.
double expected_advertised_share(const ModelParams& params);

/// up(i)/down(i) for M = 1 in closed form: 1 + ((N-1)/i) * p/(1-p).
double m1_up_down_ratio(std::int64_t i, const ModelParams& params);

TridiagonalMatrix build_transition_matrix(const TransitionRates& rates);

}  // namespace srmwa
