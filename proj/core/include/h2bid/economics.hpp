// economics.hpp - electrolyzer price/efficiency parameters and hydrogen utility values
#pragma once

#include <stdexcept>

namespace h2bid {

/// Economic parameters of the electrolyzer and its hydrogen offtake.
///
/// All parameters are strictly positive; violations are rejected at
/// construction so downstream code never re-validates. Values are immutable,
/// the object is safe to share across threads.
class EconomicParams {
 public:
  /// @param eta       conversion efficiency, kg H2 per MWh electric
  /// @param pi_gray   market hydrogen price, EUR per kg
  /// @param pi_green  temporal-matching compliance subsidy, EUR per kg
  /// @param capacity  electrolyzer capacity, MWh per hour
  EconomicParams(double eta, double pi_gray, double pi_green, double capacity)
      : eta_(eta), pi_gray_(pi_gray), pi_green_(pi_green), capacity_(capacity) {
    if (!(eta > 0.0)) throw std::invalid_argument("EconomicParams: eta must be > 0");
    if (!(pi_gray > 0.0)) throw std::invalid_argument("EconomicParams: pi_gray must be > 0");
    if (!(pi_green > 0.0)) throw std::invalid_argument("EconomicParams: pi_green must be > 0");
    if (!(capacity > 0.0)) throw std::invalid_argument("EconomicParams: capacity must be > 0");
  }

  double eta() const { return eta_; }
  double pi_gray() const { return pi_gray_; }
  double pi_green() const { return pi_green_; }
  double capacity() const { return capacity_; }

  /// MWh-electric equivalent value of unsubsidized (gray) hydrogen, EUR/MWh.
  double gray_value() const { return eta_ * pi_gray_; }

  /// MWh-electric equivalent value of subsidized (green) hydrogen, EUR/MWh.
  /// Always strictly greater than gray_value().
  double green_value() const { return eta_ * (pi_gray_ + pi_green_); }

  /// Same parameters with a different hydrogen price pair. Used by the
  /// price-sensitivity sweep.
  EconomicParams with_prices(double pi_gray, double pi_green) const {
    return EconomicParams(eta_, pi_gray, pi_green, capacity_);
  }

  /// Same parameters with a different electrolyzer capacity. Used by the
  /// price-impact study.
  EconomicParams with_capacity(double capacity) const {
    return EconomicParams(eta_, pi_gray_, pi_green_, capacity);
  }

 private:
  double eta_;
  double pi_gray_;
  double pi_green_;
  double capacity_;
};

}  // namespace h2bid
