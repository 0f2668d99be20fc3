// dataio.hpp - CSV ingestion of hourly market data and aggregate curves
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "h2bid/clearing.hpp"
#include "h2bid/scenarios.hpp"

namespace h2bid {

/// Raised when an input file is missing, malformed, or empty after
/// validation; the message carries the path and offending row.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validated, time-ordered hourly dataset.
struct Dataset {
  std::vector<HourRecord> hours;
  double res_capacity = 0.0;       ///< MWh; wind columns rescaled onto this
  std::string prices_digest;
  std::string wind_digest;
  std::size_t dropped_rows = 0;    ///< unmatched timestamps or rejected values
};

/// Joins the price and wind files on timestamp and rescales the wind columns
/// so the dataset maximum maps to `scale_to_capacity`. Rows present in only
/// one file, or with non-finite/negative wind values, are dropped and
/// counted. Throws LoadError on schema mismatch, duplicate timestamps, or an
/// empty join.
///
/// prices.csv: timestamp_utc, price_eur_mwh
/// wind.csv:   timestamp_utc, forecast_mwh, realized_mwh
Dataset load_hourly(const std::filesystem::path& prices_path,
                    const std::filesystem::path& wind_path,
                    double scale_to_capacity);

/// One hour of aggregate market curves.
struct HourlyCurves {
  std::int64_t time = 0;
  AggregateCurve supply;
  AggregateCurve demand;
};

struct AggregateCurveData {
  std::vector<HourlyCurves> hours;  ///< timestamp order
  std::size_t dropped_hours = 0;    ///< one-sided or non-monotone hours
  std::string digest;
};

/// Loads per-hour supply/demand curve samples. Points are re-sorted by
/// quantity before validation; hours missing a side or failing monotonicity
/// are dropped and counted.
///
/// curves.csv: timestamp_utc, side (supply|demand), price_eur_mwh, quantity_mwh
AggregateCurveData load_aggregate_curves(const std::filesystem::path& path);

}  // namespace h2bid
