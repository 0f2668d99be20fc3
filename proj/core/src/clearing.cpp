#include "h2bid/clearing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace h2bid {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

AggregateCurve::AggregateCurve(CurveSide side, std::vector<CurvePoint> points)
    : side_(side), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("AggregateCurve: no points");
  double prev_q = -1.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const CurvePoint& p = points_[i];
    if (!std::isfinite(p.price) || !std::isfinite(p.quantity) || p.quantity < 0.0)
      throw std::invalid_argument("AggregateCurve: non-finite or negative point");
    if (i > 0) {
      if (p.quantity < prev_q)
        throw std::invalid_argument("AggregateCurve: quantities must be non-decreasing");
      const double dp = p.price - points_[i - 1].price;
      if (side_ == CurveSide::supply ? dp < 0.0 : dp > 0.0)
        throw std::invalid_argument("AggregateCurve: price not monotone for side");
    }
    prev_q = p.quantity;
  }
}

double AggregateCurve::price_left(double q) const {
  if (q <= points_.front().quantity) return points_.front().price;
  // first point at or past q; a stack of equal quantities at q resolves to
  // its first entry, which is the limit from below
  auto it = std::lower_bound(points_.begin(), points_.end(), q,
                             [](const CurvePoint& p, double v) { return p.quantity < v; });
  if (it == points_.end()) return points_.back().price;
  if (it->quantity == q) return it->price;
  const CurvePoint& a = *(it - 1);
  const CurvePoint& b = *it;
  const double t = (q - a.quantity) / (b.quantity - a.quantity);
  return a.price + t * (b.price - a.price);
}

double AggregateCurve::price_right(double q) const {
  if (q >= points_.back().quantity)
    return side_ == CurveSide::demand ? -kInf : kInf;
  if (q < points_.front().quantity) return points_.front().price;
  // last point at or before q
  auto it = std::upper_bound(points_.begin(), points_.end(), q,
                             [](double v, const CurvePoint& p) { return v < p.quantity; });
  const CurvePoint& a = *(it - 1);
  if (a.quantity == q) return a.price;
  const CurvePoint& b = *it;
  const double t = (q - a.quantity) / (b.quantity - a.quantity);
  return a.price + t * (b.price - a.price);
}

ClearingOutcome clear(const AggregateCurve& supply, const AggregateCurve& demand) {
  if (supply.side() != CurveSide::supply || demand.side() != CurveSide::demand)
    throw std::invalid_argument("clear: curves passed on the wrong sides");

  const double qmax = std::min(supply.max_quantity(), demand.max_quantity());

  // Quantity breakpoints of both curves restricted to [0, qmax].
  std::vector<double> brk{0.0, qmax};
  for (const CurvePoint& p : supply.points())
    if (p.quantity > 0.0 && p.quantity < qmax) brk.push_back(p.quantity);
  for (const CurvePoint& p : demand.points())
    if (p.quantity > 0.0 && p.quantity < qmax) brk.push_back(p.quantity);
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end()), brk.end());

  // March outward while the marginal unit still clears; between breakpoints
  // the gap demand-minus-supply is linear.
  double volume = 0.0;
  for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
    const double qa = brk[i];
    const double qb = brk[i + 1];
    const double ga = demand.price_right(qa) - supply.price_right(qa);
    if (ga < 0.0) {  // vertical drop at qa already ends the trade
      volume = qa;
      break;
    }
    const double gb = demand.price_left(qb) - supply.price_left(qb);
    if (gb < 0.0) {
      volume = qa + (qb - qa) * ga / (ga - gb);
      break;
    }
    volume = qb;
  }

  const double lo = std::max(supply.price_left(volume), demand.price_right(volume));
  const double hi = std::min(supply.price_right(volume), demand.price_left(volume));
  ClearingOutcome out;
  if (lo > hi + 1e-9) return out;  // no admissible price: no trade
  out.feasible = true;
  out.volume = volume;
  out.price = lo >= hi ? lo : 0.5 * (lo + hi);
  return out;
}

AggregateCurve insert_bid(const AggregateCurve& demand, const BidCurve& bid) {
  if (demand.side() != CurveSide::demand)
    throw std::invalid_argument("insert_bid: expected a demand curve");
  if (bid.empty()) return demand;

  // Explicit start at quantity 0 so a bid above every demand price lands in
  // front of the curve.
  std::vector<CurvePoint> vts = demand.points();
  if (vts.front().quantity > 0.0)
    vts.insert(vts.begin(), {vts.front().price, 0.0});

  std::vector<CurvePoint> out;
  out.reserve(vts.size() + 2 * bid.steps().size());
  double shift = 0.0;
  std::size_t i = 0;
  double prev_upto = 0.0;
  for (const BidStep& step : bid.steps()) {
    const double width = step.q_upto - prev_upto;
    prev_upto = step.q_upto;
    while (i < vts.size() && vts[i].price > step.price) {
      out.push_back({vts[i].price, vts[i].quantity + shift});
      ++i;
    }
    // quantity at which the demand curve first reaches the bid price
    double qd;
    if (i == 0) {
      qd = vts.front().quantity;
    } else if (i == vts.size()) {
      qd = vts.back().quantity;
    } else if (vts[i].price == step.price) {
      qd = vts[i].quantity;
    } else {
      const CurvePoint& a = vts[i - 1];
      const CurvePoint& b = vts[i];
      const double t = (a.price - step.price) / (a.price - b.price);
      qd = a.quantity + t * (b.quantity - a.quantity);
    }
    out.push_back({step.price, qd + shift});
    out.push_back({step.price, qd + shift + width});
    shift += width;
  }
  while (i < vts.size()) {
    out.push_back({vts[i].price, vts[i].quantity + shift});
    ++i;
  }
  return AggregateCurve(CurveSide::demand, std::move(out));
}

std::optional<double> price_impact(const AggregateCurve& supply,
                                   const AggregateCurve& demand,
                                   const BidCurve& bid) {
  const ClearingOutcome base = clear(supply, demand);
  if (!base.feasible) return std::nullopt;
  const ClearingOutcome with = clear(supply, insert_bid(demand, bid));
  if (!with.feasible) return std::nullopt;
  double delta = with.price - base.price;
  if (delta < 0.0 && delta > -1e-9) delta = 0.0;  // rounding at shared vertices
  return delta;
}

}  // namespace h2bid
