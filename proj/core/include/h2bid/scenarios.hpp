// scenarios.hpp - green-signal scenario sets from historical forecast errors
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace h2bid {

/// One hour of market and wind data.
struct HourRecord {
  std::int64_t time = 0;   ///< hour start, Unix seconds UTC
  double lambda_da = 0.0;  ///< day-ahead price, EUR/MWh
  double forecast = 0.0;   ///< wind day-ahead forecast, MWh
  double realized = 0.0;   ///< wind realized production, MWh
};

/// Discrete distribution of the green signal: strictly increasing unique
/// values with probabilities in (0,1] summing to 1 (within 1e-12).
struct ScenarioSet {
  std::vector<double> values;  ///< MWh, ascending, unique
  std::vector<double> probs;

  /// Throws std::invalid_argument when the invariants above are violated.
  void validate() const;
};

/// Per-unit forecast errors of the K historical hours whose forecasts are
/// nearest the current one.
struct ErrorPool {
  std::vector<double> errors;              ///< e_j = (realized - forecast) / forecast
  std::vector<std::size_t> source_hours;   ///< indices into the history
};

/// Forecasts below this fraction of RES capacity are treated as zero: their
/// per-unit error is undefined, so such hours are excluded from the neighbor
/// pool and a current hour below the floor gets the degenerate set {0}.
inline constexpr double kZeroForecastFloorFraction = 1e-6;

/// Collects the per-unit forecast errors of the (up to) k past hours whose
/// forecasts are closest in absolute difference to the forecast of hour t.
/// Only indices j < t are eligible; ties in distance break toward more
/// recent hours. Returns an empty pool when no eligible past hour exists.
ErrorPool build_error_pool(std::span<const HourRecord> history, std::size_t t,
                           std::size_t k, double res_capacity);

/// Builds a scenario set by drawing n-1 errors from the pool without
/// replacement (all of them when the pool is smaller), applying them to the
/// forecast, and appending the point forecast itself as the n-th candidate.
/// Candidates are clamped to [0, res_capacity], then saturated at the
/// electrolyzer capacity; equal values are merged by summing probabilities.
/// Deterministic in (pool, forecast, n, rng_seed).
ScenarioSet sample_scenario_set(const ErrorPool& pool, double forecast, int n,
                                std::uint64_t rng_seed, double res_capacity,
                                double electrolyzer_capacity);

}  // namespace h2bid
