#include "h2bid/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "h2bid/rng.hpp"

namespace h2bid {

namespace {

// Static index-strided schedule; every worker count yields the same
// per-index results, so outputs never depend on scheduling.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
  unsigned w = workers == 0 ? std::thread::hardware_concurrency() : workers;
  if (w == 0) w = 1;
  w = static_cast<unsigned>(std::min<std::size_t>(w, n));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += w) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

void validate_config(const BacktestConfig& cfg) {
  if (cfg.n_scenarios < 1)
    throw std::invalid_argument("BacktestConfig: n_scenarios must be >= 1");
  if (cfg.k_pool < 1) throw std::invalid_argument("BacktestConfig: k_pool must be >= 1");
  if (!(cfg.res_capacity > 0.0))
    throw std::invalid_argument("BacktestConfig: res_capacity must be > 0");
}

BidCurve build_curve(const Dataset& data, const BacktestConfig& cfg, std::size_t i) {
  const HourRecord& h = data.hours[i];
  switch (cfg.method) {
    case BidMethod::point:
      return point_forecast_curve(h.forecast, cfg.params);
    case BidMethod::perfect:
      return perfect_info_curve(h.realized, cfg.params);
    case BidMethod::scenario: {
      const ErrorPool pool = build_error_pool(data.hours, i,
                                              static_cast<std::size_t>(cfg.k_pool),
                                              cfg.res_capacity);
      const ScenarioSet scen =
          sample_scenario_set(pool, h.forecast, cfg.n_scenarios,
                              mix_seed(cfg.base_seed, i), cfg.res_capacity,
                              cfg.params.capacity());
      return scenario_curve(scen, cfg.params);
    }
  }
  throw std::logic_error("unreachable bid method");
}

}  // namespace

std::string_view method_name(BidMethod m) {
  switch (m) {
    case BidMethod::point: return "point";
    case BidMethod::scenario: return "scenario";
    case BidMethod::perfect: return "perfect";
  }
  return "?";
}

std::optional<BidMethod> parse_method(std::string_view name) {
  if (name == "point") return BidMethod::point;
  if (name == "scenario") return BidMethod::scenario;
  if (name == "perfect") return BidMethod::perfect;
  return std::nullopt;
}

BacktestResult run_backtest(const Dataset& data, const BacktestConfig& cfg) {
  validate_config(cfg);

  std::vector<std::size_t> eval_idx;
  eval_idx.reserve(data.hours.size());
  for (std::size_t i = 0; i < data.hours.size(); ++i) {
    if (!cfg.eval_start || data.hours[i].time >= *cfg.eval_start)
      eval_idx.push_back(i);
  }

  struct Slot {
    bool ok = false;
    HourOutcome outcome;
  };
  std::vector<Slot> slots(eval_idx.size());

  parallel_for(eval_idx.size(), cfg.workers, [&](std::size_t n) {
    const std::size_t i = eval_idx[n];
    const HourRecord& h = data.hours[i];
    if (!std::isfinite(h.lambda_da) || !std::isfinite(h.forecast) ||
        !std::isfinite(h.realized) || h.forecast < 0.0 || h.realized < 0.0)
      return;  // skipped, counted below
    const BidCurve curve = build_curve(data, cfg, i);
    const double q = clear_price_taker(curve, h.lambda_da);
    Slot& s = slots[n];
    s.outcome.time = h.time;
    s.outcome.lambda_da = h.lambda_da;
    s.outcome.forecast = h.forecast;
    s.outcome.realized = h.realized;
    s.outcome.settle = settle_hour(q, h.lambda_da, h.realized, cfg.params);
    s.ok = true;
  });

  BacktestResult result;
  result.hours.reserve(slots.size());
  const double gray = cfg.params.gray_value();
  const double green = cfg.params.green_value();
  for (const Slot& s : slots) {
    if (!s.ok) {
      ++result.skipped_hours;
      continue;
    }
    if (s.outcome.lambda_da >= gray && s.outcome.lambda_da <= green)
      ++result.interest_hours;
    result.hours.push_back(s.outcome);
  }

  std::vector<SettlementResult> settles;
  settles.reserve(result.hours.size());
  for (const HourOutcome& h : result.hours) settles.push_back(h.settle);
  result.summary = aggregate_results(settles);
  return result;
}

SweepNResult sweep_scenario_count(const Dataset& data, const BacktestConfig& cfg,
                                  std::span<const int> n_values, int repeats) {
  if (repeats < 1)
    throw std::invalid_argument("sweep_scenario_count: repeats must be >= 1");
  validate_config(cfg);

  BacktestConfig perfect_cfg = cfg;
  perfect_cfg.method = BidMethod::perfect;
  SweepNResult out;
  out.perfect_profit = run_backtest(data, perfect_cfg).summary.profit_eur;

  for (int n : n_values) {
    for (int r = 0; r < repeats; ++r) {
      BacktestConfig c = cfg;
      c.method = BidMethod::scenario;
      c.n_scenarios = n;
      c.base_seed = r == 0 ? cfg.base_seed : mix_seed(cfg.base_seed, static_cast<std::uint64_t>(r));
      const double profit = run_backtest(data, c).summary.profit_eur;
      SweepNCell cell;
      cell.n_scenarios = n;
      cell.repeat = r;
      cell.seed = c.base_seed;
      cell.profit_eur = profit;
      cell.ratio = out.perfect_profit > 0.0 ? profit / out.perfect_profit : 0.0;
      out.cells.push_back(cell);
    }
  }
  return out;
}

PriceSweepResult sweep_hydrogen_prices(const Dataset& data, const BacktestConfig& cfg,
                                       std::span<const double> gray_grid,
                                       std::span<const double> green_grid) {
  if (gray_grid.empty() || green_grid.empty())
    throw std::invalid_argument("sweep_hydrogen_prices: grids must be non-empty");
  validate_config(cfg);

  PriceSweepResult out;
  for (double pg : gray_grid) {
    for (double pgr : green_grid) {
      BacktestConfig cell_cfg = cfg;
      cell_cfg.params = cfg.params.with_prices(pg, pgr);

      const BidMethod methods[] = {BidMethod::perfect, BidMethod::point,
                                   BidMethod::scenario};
      double perfect_profit = 0.0;
      for (BidMethod m : methods) {
        cell_cfg.method = m;
        const BacktestResult r = run_backtest(data, cell_cfg);
        if (m == BidMethod::perfect) perfect_profit = r.summary.profit_eur;
        PriceSweepCell cell;
        cell.pi_gray = pg;
        cell.pi_green = pgr;
        cell.method = m;
        cell.profit_eur = r.summary.profit_eur;
        cell.ratio = perfect_profit > 0.0 ? r.summary.profit_eur / perfect_profit : 0.0;
        cell.green_share = r.summary.green_share();
        out.cells.push_back(cell);
      }
    }
  }
  return out;
}

PriceImpactResult run_price_impact_study(const Dataset& data,
                                         const AggregateCurveData& curves,
                                         const BacktestConfig& cfg,
                                         std::span<const double> capacities) {
  if (curves.hours.empty())
    throw std::invalid_argument("run_price_impact_study: no aggregate-curve hours");

  std::map<std::int64_t, double> realized_by_time;
  for (const HourRecord& h : data.hours) realized_by_time.emplace(h.time, h.realized);

  PriceImpactResult out;
  for (double cap : capacities) {
    PriceImpactSeries series;
    series.capacity_mw = cap;
    for (const HourlyCurves& hc : curves.hours) {
      const auto it = realized_by_time.find(hc.time);
      if (it == realized_by_time.end()) {
        ++series.hours_skipped;
        continue;
      }
      BidCurve bid;
      if (cap > 0.0)
        bid = perfect_info_curve(it->second, cfg.params.with_capacity(cap));
      const std::optional<double> delta = price_impact(hc.supply, hc.demand, bid);
      if (!delta) {
        ++series.hours_skipped;
        continue;
      }
      series.dprice.push_back(*delta);
    }
    std::sort(series.dprice.begin(), series.dprice.end(), std::greater<double>());
    series.hours_used = series.dprice.size();
    out.series.push_back(std::move(series));
  }
  return out;
}

}  // namespace h2bid
