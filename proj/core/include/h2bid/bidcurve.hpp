// bidcurve.hpp - stepwise day-ahead bid curves for a temporally-matched electrolyzer
#pragma once

#include <vector>

#include "h2bid/economics.hpp"
#include "h2bid/scenarios.hpp"

namespace h2bid {

/// One step of a consumer bid curve: the buyer takes every MWh up to
/// `q_upto` at any price not above `price`. Quantity intervals are half-open
/// on the left and closed on the right.
struct BidStep {
  double price;   ///< EUR/MWh
  double q_upto;  ///< cumulative quantity, MWh
};

/// Market-submittable stepwise bid curve: strictly decreasing prices over
/// strictly increasing cumulative quantities, ending at the electrolyzer
/// capacity. A zero-capacity curve has no steps.
class BidCurve {
 public:
  BidCurve() = default;
  BidCurve(std::vector<BidStep> steps, double capacity);

  const std::vector<BidStep>& steps() const { return steps_; }
  double capacity() const { return capacity_; }
  bool empty() const { return steps_.empty(); }

 private:
  std::vector<BidStep> steps_;
  double capacity_ = 0.0;
};

/// Which segment of the bid curve an optimal quantity falls on.
enum class BidCase { no_bid, partial_at_scenario, partial_interior, max_capacity };

struct QuantityDecision {
  double q = 0.0;
  BidCase case_tag = BidCase::no_bid;
};

/// Absolute tolerance for treating a day-ahead price as equal to a step
/// price; keeps the tie rule deterministic for CSV-round-tripped prices.
inline constexpr double kPriceTieTol = 1e-9;

/// Two-step curve from a single certain wind level: green value up to
/// min(forecast, capacity), gray value for the rest. Collapses to one step
/// at zero or saturated forecast.
BidCurve point_forecast_curve(double forecast, const EconomicParams& params);

/// Same construction from the realized production; the ex-post upper bound.
BidCurve perfect_info_curve(double realized, const EconomicParams& params);

/// Stepwise curve from a scenario set: the price over each quantity range is
/// eta * (pi_gray + pi_green * P[green signal >= quantity]), evaluated on
/// the empirical distribution. Requires scenario values saturated at the
/// electrolyzer capacity.
BidCurve scenario_curve(const ScenarioSet& scen, const EconomicParams& params);

/// Expected profit of buying quantity q at the given day-ahead price:
/// sum_s rho_s * min(green piece, gray piece) - lambda_da * q.
/// Throws std::domain_error when q lies outside [0, capacity].
double expected_profit(double q, const ScenarioSet& scen, double lambda_da,
                       const EconomicParams& params);

/// Independent check on the curve construction: evaluates expected_profit at
/// every breakpoint {0, scenario values, capacity} and returns the maximizer.
/// The objective is piecewise-linear concave in q, so a breakpoint is always
/// optimal. Profits within 1e-9 are treated as tied; ties break toward the
/// larger quantity, matching the clearing rule.
QuantityDecision optimal_quantity_oracle(const ScenarioSet& scen, double lambda_da,
                                         const EconomicParams& params);

/// Price-taker clearing: the largest q_upto whose step price is >= lambda_da
/// (within kPriceTieTol), or 0 when the price exceeds the first step.
double clear_price_taker(const BidCurve& curve, double lambda_da);

}  // namespace h2bid
