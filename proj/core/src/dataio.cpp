#include "h2bid/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "h2bid/csv.hpp"
#include "h2bid/timeutil.hpp"

namespace h2bid {

namespace {

double parse_value(const std::string& cell, const std::filesystem::path& path,
                   std::size_t row) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw LoadError(path.string() + ": row " + std::to_string(row) +
                    ": not a number: '" + cell + "'");
  return v;
}

std::int64_t parse_time(const std::string& cell, const std::filesystem::path& path,
                        std::size_t row) {
  try {
    return parse_iso8601_utc(cell);
  } catch (const std::invalid_argument& e) {
    throw LoadError(path.string() + ": row " + std::to_string(row) + ": " + e.what());
  }
}

}  // namespace

Dataset load_hourly(const std::filesystem::path& prices_path,
                    const std::filesystem::path& wind_path,
                    double scale_to_capacity) {
  if (!(scale_to_capacity > 0.0))
    throw LoadError("load_hourly: scale_to_capacity must be > 0");

  CsvTable prices, wind;
  try {
    prices = read_csv(prices_path);
    wind = read_csv(wind_path);
  } catch (const std::runtime_error& e) {
    throw LoadError(e.what());
  }

  std::size_t p_time, p_price, w_time, w_fc, w_re;
  try {
    p_time = prices.column("timestamp_utc");
    p_price = prices.column("price_eur_mwh");
    w_time = wind.column("timestamp_utc");
    w_fc = wind.column("forecast_mwh");
    w_re = wind.column("realized_mwh");
  } catch (const std::runtime_error& e) {
    throw LoadError(e.what());
  }

  std::map<std::int64_t, double> price_by_time;
  for (std::size_t i = 0; i < prices.rows.size(); ++i) {
    const auto& row = prices.rows[i];
    const std::int64_t t = parse_time(row[p_time], prices_path, i + 2);
    if (!price_by_time.emplace(t, parse_value(row[p_price], prices_path, i + 2)).second)
      throw LoadError(prices_path.string() + ": duplicate timestamp " + row[p_time]);
  }

  Dataset ds;
  ds.res_capacity = scale_to_capacity;
  ds.prices_digest = file_digest(prices_path);
  ds.wind_digest = file_digest(wind_path);

  std::map<std::int64_t, std::pair<double, double>> wind_by_time;
  for (std::size_t i = 0; i < wind.rows.size(); ++i) {
    const auto& row = wind.rows[i];
    const std::int64_t t = parse_time(row[w_time], wind_path, i + 2);
    const double fc = parse_value(row[w_fc], wind_path, i + 2);
    const double re = parse_value(row[w_re], wind_path, i + 2);
    if (!wind_by_time.emplace(t, std::make_pair(fc, re)).second)
      throw LoadError(wind_path.string() + ": duplicate timestamp " + row[w_time]);
  }

  double wind_max = 0.0;
  for (const auto& [t, fr] : wind_by_time) {
    const auto it = price_by_time.find(t);
    if (it == price_by_time.end()) continue;
    const auto [fc, re] = fr;
    if (!std::isfinite(it->second) || !std::isfinite(fc) || !std::isfinite(re) ||
        fc < 0.0 || re < 0.0)
      continue;
    ds.hours.push_back({t, it->second, fc, re});
    wind_max = std::max(wind_max, std::max(fc, re));
  }
  // every input row that did not make it into the join
  ds.dropped_rows = price_by_time.size() + wind_by_time.size() - 2 * ds.hours.size();

  if (ds.hours.empty())
    throw LoadError("load_hourly: no overlapping timestamps between " +
                    prices_path.string() + " and " + wind_path.string());
  if (!(wind_max > 0.0))
    throw LoadError("load_hourly: wind columns are identically zero, cannot rescale");

  const double factor = scale_to_capacity / wind_max;
  for (HourRecord& h : ds.hours) {
    h.forecast *= factor;
    h.realized *= factor;
  }
  return ds;  // std::map iteration already gave ascending time order
}

AggregateCurveData load_aggregate_curves(const std::filesystem::path& path) {
  CsvTable table;
  try {
    table = read_csv(path);
  } catch (const std::runtime_error& e) {
    throw LoadError(e.what());
  }
  std::size_t c_time, c_side, c_price, c_qty;
  try {
    c_time = table.column("timestamp_utc");
    c_side = table.column("side");
    c_price = table.column("price_eur_mwh");
    c_qty = table.column("quantity_mwh");
  } catch (const std::runtime_error& e) {
    throw LoadError(e.what());
  }

  std::map<std::int64_t, std::pair<std::vector<CurvePoint>, std::vector<CurvePoint>>>
      by_hour;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::int64_t t = parse_time(row[c_time], path, i + 2);
    const double price = parse_value(row[c_price], path, i + 2);
    const double qty = parse_value(row[c_qty], path, i + 2);
    auto& entry = by_hour[t];
    if (row[c_side] == "supply")
      entry.first.push_back({price, qty});
    else if (row[c_side] == "demand")
      entry.second.push_back({price, qty});
    else
      throw LoadError(path.string() + ": row " + std::to_string(i + 2) +
                      ": side must be 'supply' or 'demand', got '" + row[c_side] + "'");
  }

  AggregateCurveData out;
  out.digest = file_digest(path);
  for (auto& [t, sides] : by_hour) {
    auto& [sup, dem] = sides;
    if (sup.empty() || dem.empty()) {
      ++out.dropped_hours;
      continue;
    }
    std::sort(sup.begin(), sup.end(), [](const CurvePoint& a, const CurvePoint& b) {
      return a.quantity != b.quantity ? a.quantity < b.quantity : a.price < b.price;
    });
    std::sort(dem.begin(), dem.end(), [](const CurvePoint& a, const CurvePoint& b) {
      return a.quantity != b.quantity ? a.quantity < b.quantity : a.price > b.price;
    });
    try {
      out.hours.push_back({t, AggregateCurve(CurveSide::supply, std::move(sup)),
                           AggregateCurve(CurveSide::demand, std::move(dem))});
    } catch (const std::invalid_argument&) {
      ++out.dropped_hours;  // non-monotone after sorting
    }
  }
  return out;
}

}  // namespace h2bid
