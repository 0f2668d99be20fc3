#include "h2bid/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "h2bid/rng.hpp"

namespace h2bid {

void ScenarioSet::validate() const {
  if (values.empty() || values.size() != probs.size())
    throw std::invalid_argument("ScenarioSet: values/probs size mismatch or empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      throw std::invalid_argument("ScenarioSet: values must be finite and >= 0");
    if (i > 0 && !(values[i] > values[i - 1]))
      throw std::invalid_argument("ScenarioSet: values must be strictly increasing");
    if (!(probs[i] > 0.0) || probs[i] > 1.0)
      throw std::invalid_argument("ScenarioSet: probabilities must lie in (0,1]");
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("ScenarioSet: probabilities must sum to 1");
}

ErrorPool build_error_pool(std::span<const HourRecord> history, std::size_t t,
                           std::size_t k, double res_capacity) {
  if (t >= history.size())
    throw std::out_of_range("build_error_pool: index past end of history");
  ErrorPool pool;
  if (t == 0 || k == 0) return pool;

  const double floor = kZeroForecastFloorFraction * res_capacity;
  const double current = history[t].forecast;

  struct Candidate {
    double dist;
    std::size_t idx;
  };
  std::vector<Candidate> cands;
  cands.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    if (history[j].forecast < floor) continue;  // per-unit error undefined
    cands.push_back({std::abs(history[j].forecast - current), j});
  }
  if (cands.empty()) return pool;

  const std::size_t take = std::min(k, cands.size());
  // Nearest forecast first; equally close forecasts prefer the newer hour.
  std::nth_element(cands.begin(), cands.begin() + (take - 1), cands.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.dist != b.dist) return a.dist < b.dist;
                     return a.idx > b.idx;
                   });
  cands.resize(take);
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.idx < b.idx;
  });

  pool.errors.reserve(take);
  pool.source_hours.reserve(take);
  for (const Candidate& c : cands) {
    const HourRecord& h = history[c.idx];
    pool.errors.push_back((h.realized - h.forecast) / h.forecast);
    pool.source_hours.push_back(c.idx);
  }
  return pool;
}

ScenarioSet sample_scenario_set(const ErrorPool& pool, double forecast, int n,
                                std::uint64_t rng_seed, double res_capacity,
                                double electrolyzer_capacity) {
  if (n < 1) throw std::invalid_argument("sample_scenario_set: n must be >= 1");
  if (forecast < 0.0 || !std::isfinite(forecast))
    throw std::invalid_argument("sample_scenario_set: forecast must be finite and >= 0");

  ScenarioSet out;
  if (forecast < kZeroForecastFloorFraction * res_capacity) {
    out.values = {0.0};
    out.probs = {1.0};
    return out;
  }

  std::vector<double> candidates;
  const std::size_t draw =
      std::min<std::size_t>(static_cast<std::size_t>(n - 1), pool.errors.size());
  if (draw > 0) {
    std::mt19937_64 gen(rng_seed);
    for (std::size_t i : sample_without_replacement(gen, pool.errors.size(), draw))
      candidates.push_back(forecast * (1.0 + pool.errors[i]));
  }
  candidates.push_back(forecast);  // the point forecast is always a scenario

  const double m = static_cast<double>(candidates.size());
  for (double& v : candidates) {
    v = std::clamp(v, 0.0, res_capacity);
    v = std::min(v, electrolyzer_capacity);
  }
  std::sort(candidates.begin(), candidates.end());

  for (std::size_t i = 0; i < candidates.size();) {
    std::size_t j = i;
    while (j < candidates.size() && candidates[j] == candidates[i]) ++j;
    out.values.push_back(candidates[i]);
    out.probs.push_back(static_cast<double>(j - i) / m);
    i = j;
  }
  out.validate();
  return out;
}

}  // namespace h2bid
