// backtest.hpp - year-long hourly simulation, sweeps, and the price-impact study
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "h2bid/bidcurve.hpp"
#include "h2bid/clearing.hpp"
#include "h2bid/dataio.hpp"
#include "h2bid/settlement.hpp"

namespace h2bid {

enum class BidMethod { point, scenario, perfect };

std::string_view method_name(BidMethod m);
std::optional<BidMethod> parse_method(std::string_view name);

struct BacktestConfig {
  BidMethod method = BidMethod::point;
  int n_scenarios = 10;
  int k_pool = 50;
  std::uint64_t base_seed = 0;
  EconomicParams params{18.0, 2.0, 4.0, 50.0};  // case-study base values
  double res_capacity = 66.0;
  /// Hours before this timestamp feed the neighbor pool but are not
  /// evaluated; unset evaluates the whole dataset.
  std::optional<std::int64_t> eval_start;
  /// Worker threads for the hourly loop; 0 picks hardware concurrency.
  /// Results are byte-identical for any worker count.
  unsigned workers = 0;
};

/// One evaluated hour of a backtest.
struct HourOutcome {
  std::int64_t time = 0;
  double lambda_da = 0.0;
  double forecast = 0.0;
  double realized = 0.0;
  SettlementResult settle;
};

struct BacktestResult {
  std::vector<HourOutcome> hours;  ///< evaluated hours, timestamp order
  YearSummary summary;
  std::size_t skipped_hours = 0;   ///< non-finite records inside the window
  /// Hours whose day-ahead price falls inside [gray value, green value];
  /// only these can differ across bid methods.
  std::size_t interest_hours = 0;
};

/// Runs the configured method over every evaluation hour: build the curve,
/// clear it against the day-ahead price (price taker), settle against the
/// realized wind. Deterministic given the seed, for any worker count.
BacktestResult run_backtest(const Dataset& data, const BacktestConfig& cfg);

/// Scenario-count sweep with cross-validation over repeated scenario draws.
struct SweepNCell {
  int n_scenarios = 0;
  int repeat = 0;
  std::uint64_t seed = 0;
  double profit_eur = 0.0;
  double ratio = 0.0;  ///< profit relative to perfect information
};

struct SweepNResult {
  std::vector<SweepNCell> cells;
  double perfect_profit = 0.0;
};

/// For each scenario count and repeat, the scenario method's profit as a
/// fraction of the perfect-information profit. Repeat 0 reuses the base
/// seed, so its cells match a plain run_backtest; later repeats derive
/// distinct seeds. With n = 1 every repeat equals the point-forecast total.
SweepNResult sweep_scenario_count(const Dataset& data, const BacktestConfig& cfg,
                                  std::span<const int> n_values, int repeats);

/// Hydrogen-price sensitivity grid.
struct PriceSweepCell {
  double pi_gray = 0.0;
  double pi_green = 0.0;
  BidMethod method = BidMethod::point;
  double profit_eur = 0.0;
  double ratio = 0.0;        ///< vs the same cell's perfect profit
  double green_share = 0.0;  ///< green hydrogen share of total mass
};

struct PriceSweepResult {
  std::vector<PriceSweepCell> cells;  ///< gray-major, then green, then method
};

/// Re-runs all three methods for every (pi_gray, pi_green) pair. Scenario
/// draws are price-independent, so each cell re-prices the same schedule
/// decisions problem under the new utilities.
PriceSweepResult sweep_hydrogen_prices(const Dataset& data, const BacktestConfig& cfg,
                                       std::span<const double> gray_grid,
                                       std::span<const double> green_grid);

/// Sorted price-impact series for one electrolyzer capacity.
struct PriceImpactSeries {
  double capacity_mw = 0.0;
  std::vector<double> dprice;  ///< EUR/MWh, sorted descending
  std::size_t hours_used = 0;
  std::size_t hours_skipped = 0;
};

struct PriceImpactResult {
  std::vector<PriceImpactSeries> series;
};

/// Inserts the perfect-information bid of each capacity into every hour's
/// aggregate demand curve and records the clearing-price change. Hours
/// without wind data or with infeasible clearing are skipped and counted.
PriceImpactResult run_price_impact_study(const Dataset& data,
                                         const AggregateCurveData& curves,
                                         const BacktestConfig& cfg,
                                         std::span<const double> capacities);

}  // namespace h2bid
