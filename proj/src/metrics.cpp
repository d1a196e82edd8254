#include "srmwa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "srmwa/parallel.hpp"
#include "srmwa/simulator.hpp"

namespace srmwa {

double top_percentile_share(const MarketState& state, double fraction, bool include_advertised) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "top fraction must lie in (0,1)");
  }
  auto counts = state.owner_counts();
  std::vector<std::int64_t> pool(counts.begin(), counts.begin() + state.n_items());
  if (include_advertised) pool.push_back(counts[state.advertised_id()]);

  const double scaled = fraction * static_cast<double>(pool.size());
  auto k = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  k = std::clamp<std::size_t>(k, 1, pool.size());
  std::nth_element(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k - 1), pool.end(),
                   std::greater<>());
  return static_cast<double>(pool[k - 1]) / static_cast<double>(state.n_agents());
}

double min_share(const MarketState& state) {
  auto counts = state.owner_counts();
  return static_cast<double>(*std::min_element(counts.begin(), counts.end())) /
         static_cast<double>(state.n_agents());
}

RealizationMetrics measure(const MarketState& state) {
  return {market_share(state, ItemRef::advertised()), top_percentile_share(state, kTopFraction), min_share(state)};
}

ShareStats summarize(std::span<const RealizationMetrics> runs) {
  ShareStats stats;
  stats.n_realizations = static_cast<std::int64_t>(runs.size());
  if (runs.empty()) return stats;
  const double n = static_cast<double>(runs.size());
  for (const auto& r : runs) {
    stats.f_a += r.f_a;
    stats.f_top += r.f_top;
    stats.f_min += r.f_min;
  }
  stats.f_a /= n;
  stats.f_top /= n;
  stats.f_min /= n;
  if (runs.size() > 1) {
    double ss = 0.0;
    for (const auto& r : runs) ss += (r.f_a - stats.f_a) * (r.f_a - stats.f_a);
    stats.std_f_a = std::sqrt(ss / (n - 1.0));
  }
  return stats;
}

std::vector<ShareStats> run_ensembles(std::span<const ModelParams> points, std::int64_t n_realizations,
                                      std::uint64_t seed_base, unsigned jobs) {
  if (n_realizations < 1) throw Error(ErrorCode::NonPositiveCount, "realizations must be positive");
  for (const auto& p : points) require_valid(p);

  const auto per_point = static_cast<std::size_t>(n_realizations);
  std::vector<RealizationMetrics> metrics(points.size() * per_point);
  parallel_for(metrics.size(), jobs, [&](std::size_t task) {
    const std::size_t point = task / per_point;
    const std::uint64_t seed = seed_base + task % per_point;
    metrics[task] = measure(run(points[point], seed).final_state);
  });

  std::vector<ShareStats> stats;
  stats.reserve(points.size());
  for (std::size_t point = 0; point < points.size(); ++point) {
    stats.push_back(summarize(std::span(metrics).subspan(point * per_point, per_point)));
  }
  return stats;
}

ShareStats run_ensemble(const ModelParams& params, std::int64_t n_realizations, std::uint64_t seed_base,
                        unsigned jobs) {
  return run_ensembles(std::span(&params, 1), n_realizations, seed_base, jobs).front();
}

}  // namespace srmwa
