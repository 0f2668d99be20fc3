#include "h2bid/settlement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace h2bid {

SettlementResult settle_hour(double q, double lambda_da, double realized,
                             const EconomicParams& params) {
  if (q < 0.0 || !std::isfinite(q) || q > params.capacity())
    throw std::domain_error("settle_hour: q outside [0, capacity]");
  if (realized < 0.0 || !std::isfinite(realized))
    throw std::domain_error("settle_hour: realized must be finite and >= 0");
  if (!std::isfinite(lambda_da))
    throw std::domain_error("settle_hour: non-finite day-ahead price");

  SettlementResult r;
  r.q = q;
  r.green_mwh = std::min(q, realized);
  r.gray_mwh = q - r.green_mwh;  // max(q - realized, 0)
  r.green_kg = params.eta() * r.green_mwh;
  r.gray_kg = params.eta() * r.gray_mwh;
  r.value = params.gray_value() * q + params.eta() * params.pi_green() * r.green_mwh;
  r.cost = lambda_da * q;
  r.profit = r.value - r.cost;
  return r;
}

YearSummary aggregate_results(std::span<const SettlementResult> hours) {
  YearSummary s;
  s.hours = hours.size();
  s.cumulative_gray_mwh.reserve(hours.size());
  double cum_gray = 0.0;
  for (const SettlementResult& h : hours) {
    s.profit_eur += h.profit;
    s.cost_eur += h.cost;
    s.green_kg += h.green_kg;
    s.gray_kg += h.gray_kg;
    s.green_mwh += h.green_mwh;
    s.gray_mwh += h.gray_mwh;
    cum_gray += h.gray_mwh;
    s.cumulative_gray_mwh.push_back(cum_gray);
  }
  return s;
}

}  // namespace h2bid
