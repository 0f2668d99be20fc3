// settlement.hpp - ex-post accounting of a cleared hour
#pragma once

#include <span>
#include <vector>

#include "h2bid/economics.hpp"

namespace h2bid {

/// Outcome of one cleared, delivered hour.
struct SettlementResult {
  double q = 0.0;          ///< cleared consumption, MWh
  double cost = 0.0;       ///< electricity cost, EUR
  double value = 0.0;      ///< hydrogen value, EUR
  double profit = 0.0;     ///< value - cost, EUR
  double green_mwh = 0.0;  ///< consumption matched by realized wind
  double gray_mwh = 0.0;   ///< over-consumption beyond realized wind
  double green_kg = 0.0;
  double gray_kg = 0.0;
};

/// Settles a cleared quantity against the realized wind: the matched part
/// min(q, realized) earns the subsidy, the rest only the gray price.
/// Throws std::domain_error on negative inputs or q beyond capacity.
SettlementResult settle_hour(double q, double lambda_da, double realized,
                             const EconomicParams& params);

/// Season/year totals over a sequence of settled hours.
struct YearSummary {
  std::size_t hours = 0;
  double profit_eur = 0.0;
  double cost_eur = 0.0;
  double green_kg = 0.0;
  double gray_kg = 0.0;
  double green_mwh = 0.0;
  double gray_mwh = 0.0;
  std::vector<double> cumulative_gray_mwh;  ///< running sum, one entry per hour

  double total_kg() const { return green_kg + gray_kg; }
  double green_tonnes() const { return green_kg / 1000.0; }
  double gray_tonnes() const { return gray_kg / 1000.0; }
  /// Share of green hydrogen in total production; 0 for an empty summary.
  double green_share() const {
    const double total = total_kg();
    return total > 0.0 ? green_kg / total : 0.0;
  }
};

/// Deterministic fold in input order (callers pass hours in timestamp order).
YearSummary aggregate_results(std::span<const SettlementResult> hours);

}  // namespace h2bid
