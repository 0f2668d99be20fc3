// clearing.hpp - merit-order clearing of aggregate supply/demand curves
#pragma once

#include <optional>
#include <vector>

#include "h2bid/bidcurve.hpp"

namespace h2bid {

enum class CurveSide { supply, demand };

struct CurvePoint {
  double price;     ///< EUR/MWh
  double quantity;  ///< cumulative MWh
};

/// Sampled aggregate market curve, interpreted piecewise-linearly between
/// points. Supply prices are non-decreasing in quantity, demand prices
/// non-increasing; repeated quantities encode vertical segments.
class AggregateCurve {
 public:
  AggregateCurve(CurveSide side, std::vector<CurvePoint> points);

  CurveSide side() const { return side_; }
  const std::vector<CurvePoint>& points() const { return points_; }
  double max_quantity() const { return points_.back().quantity; }

  /// Price as quantity approaches q from below (the value "just before" q).
  double price_left(double q) const;
  /// Price as quantity leaves q from above; sentinel beyond the last point
  /// (-inf for demand, +inf for supply).
  double price_right(double q) const;

 private:
  CurveSide side_;
  std::vector<CurvePoint> points_;
};

struct ClearingOutcome {
  double price = 0.0;   ///< EUR/MWh
  double volume = 0.0;  ///< MWh
  bool feasible = false;
};

/// Intersects the two curves. The traded volume is the largest quantity at
/// which demand still values the marginal MWh at least at the supply curve;
/// when the admissible price interval at that volume has positive width
/// (both curves vertical there, or both exhausted), the midpoint is
/// returned. No crossing (demand everywhere below supply) gives
/// feasible = false.
ClearingOutcome clear(const AggregateCurve& supply, const AggregateCurve& demand);

/// Places the electrolyzer's stepwise bid into the merit order of the
/// aggregate demand curve: each step inserts a flat segment of its width at
/// its bid price, quantities re-accumulated. An empty bid returns the
/// demand curve unchanged.
AggregateCurve insert_bid(const AggregateCurve& demand, const BidCurve& bid);

/// Change in clearing price caused by the bid. Returns nullopt when either
/// clearing is infeasible (the hour is then skipped and counted by the
/// study). Never negative: added demand cannot lower the price.
std::optional<double> price_impact(const AggregateCurve& supply,
                                   const AggregateCurve& demand,
                                   const BidCurve& bid);

}  // namespace h2bid
