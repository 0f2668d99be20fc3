#include "h2bid/bidcurve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace h2bid {

BidCurve::BidCurve(std::vector<BidStep> steps, double capacity)
    : steps_(std::move(steps)), capacity_(capacity) {
  if (capacity_ < 0.0) throw std::invalid_argument("BidCurve: negative capacity");
  if (capacity_ == 0.0) {
    if (!steps_.empty())
      throw std::invalid_argument("BidCurve: zero-capacity curve must have no steps");
    return;
  }
  if (steps_.empty()) throw std::invalid_argument("BidCurve: no steps");
  double prev_q = 0.0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (!(steps_[i].q_upto > prev_q))
      throw std::invalid_argument("BidCurve: quantities must be strictly increasing");
    if (i > 0 && !(steps_[i].price < steps_[i - 1].price))
      throw std::invalid_argument("BidCurve: prices must be strictly decreasing");
    prev_q = steps_[i].q_upto;
  }
  if (steps_.back().q_upto != capacity_)
    throw std::invalid_argument("BidCurve: last step must end at capacity");
}

namespace {

BidCurve single_signal_curve(double level, const EconomicParams& params) {
  if (level < 0.0 || !std::isfinite(level))
    throw std::invalid_argument("bid curve: wind level must be finite and >= 0");
  const double cap = params.capacity();
  const double green_upto = std::min(level, cap);
  std::vector<BidStep> steps;
  if (green_upto <= 0.0) {
    steps.push_back({params.gray_value(), cap});
  } else if (green_upto >= cap) {
    steps.push_back({params.green_value(), cap});
  } else {
    steps.push_back({params.green_value(), green_upto});
    steps.push_back({params.gray_value(), cap});
  }
  return BidCurve(std::move(steps), cap);
}

}  // namespace

BidCurve point_forecast_curve(double forecast, const EconomicParams& params) {
  return single_signal_curve(forecast, params);
}

BidCurve perfect_info_curve(double realized, const EconomicParams& params) {
  return single_signal_curve(realized, params);
}

BidCurve scenario_curve(const ScenarioSet& scen, const EconomicParams& params) {
  scen.validate();
  const double cap = params.capacity();
  if (scen.values.back() > cap)
    throw std::invalid_argument("scenario_curve: scenario values must be saturated at capacity");

  // Over (P_{s-1}, P_s] the probability of the green signal reaching the
  // quantity is the tail sum over scenarios s..S; above P_S it is zero.
  std::vector<BidStep> steps;
  double tail = 1.0;
  for (std::size_t s = 0; s < scen.values.size(); ++s) {
    if (scen.values[s] > 0.0)
      steps.push_back({params.eta() * (params.pi_gray() + params.pi_green() * tail),
                       scen.values[s]});
    tail -= scen.probs[s];
  }
  if (scen.values.back() < cap) steps.push_back({params.gray_value(), cap});
  return BidCurve(std::move(steps), cap);
}

double expected_profit(double q, const ScenarioSet& scen, double lambda_da,
                       const EconomicParams& params) {
  scen.validate();
  if (q < 0.0 || q > params.capacity())
    throw std::domain_error("expected_profit: q outside [0, capacity]");
  const double green_slope = params.green_value();
  const double gray_slope = params.gray_value();
  const double subsidy = params.eta() * params.pi_green();
  double value = 0.0;
  for (std::size_t s = 0; s < scen.values.size(); ++s)
    value += scen.probs[s] *
             std::min(green_slope * q, gray_slope * q + subsidy * scen.values[s]);
  return value - lambda_da * q;
}

QuantityDecision optimal_quantity_oracle(const ScenarioSet& scen, double lambda_da,
                                         const EconomicParams& params) {
  scen.validate();
  const double cap = params.capacity();
  std::vector<double> breakpoints;
  breakpoints.push_back(0.0);
  for (double v : scen.values)
    if (v > 0.0 && v < cap) breakpoints.push_back(v);
  breakpoints.push_back(cap);

  constexpr double tie_tol = 1e-9;
  double best_q = 0.0;
  double best_profit = expected_profit(0.0, scen, lambda_da, params);
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const double profit = expected_profit(breakpoints[i], scen, lambda_da, params);
    if (profit >= best_profit - tie_tol) {
      // ascending scan, so >= keeps the larger quantity on ties
      if (profit > best_profit) best_profit = profit;
      best_q = breakpoints[i];
    }
  }

  QuantityDecision d;
  d.q = best_q;
  if (best_q == 0.0) {
    d.case_tag = BidCase::no_bid;
  } else if (best_q == cap) {
    d.case_tag = BidCase::max_capacity;
  } else if (std::find(scen.values.begin(), scen.values.end(), best_q) !=
             scen.values.end()) {
    d.case_tag = BidCase::partial_at_scenario;
  } else {
    d.case_tag = BidCase::partial_interior;
  }
  return d;
}

double clear_price_taker(const BidCurve& curve, double lambda_da) {
  double cleared = 0.0;
  for (const BidStep& step : curve.steps()) {
    if (step.price >= lambda_da - kPriceTieTol)
      cleared = step.q_upto;
    else
      break;
  }
  return cleared;
}

}  // namespace h2bid
