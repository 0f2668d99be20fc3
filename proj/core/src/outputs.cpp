#include "h2bid/outputs.hpp"

#include <algorithm>
#include <fstream>

#include "h2bid/csv.hpp"
#include "h2bid/timeutil.hpp"

namespace h2bid {

namespace {
using Rows = std::vector<std::vector<std::string>>;
std::string fmt(double v) { return format_double(v); }
}  // namespace

std::filesystem::path write_hourly_results(const std::filesystem::path& out_dir,
                                           const std::vector<LabeledRun>& runs) {
  Rows rows;
  for (const LabeledRun& run : runs) {
    const std::string method(method_name(run.method));
    for (const HourOutcome& h : run.result.hours) {
      rows.push_back({format_iso8601_utc(h.time), method, fmt(h.lambda_da),
                      fmt(h.settle.q), fmt(h.realized), fmt(h.settle.green_mwh),
                      fmt(h.settle.gray_mwh), fmt(h.settle.profit)});
    }
  }
  const auto path = out_dir / "hourly_results.csv";
  write_csv(path,
            {"timestamp_utc", "method", "lambda_da", "q_mwh", "realized_mwh",
             "green_mwh", "gray_mwh", "profit_eur"},
            rows);
  return path;
}

std::filesystem::path write_profit_duration(const std::filesystem::path& out_dir,
                                            const std::vector<LabeledRun>& runs) {
  Rows rows;
  for (const LabeledRun& run : runs) {
    const std::string method(method_name(run.method));
    std::vector<double> profits;
    profits.reserve(run.result.hours.size());
    for (const HourOutcome& h : run.result.hours) profits.push_back(h.settle.profit);
    std::sort(profits.begin(), profits.end());
    for (std::size_t i = 0; i < profits.size(); ++i)
      rows.push_back({method, std::to_string(i + 1), fmt(profits[i])});
  }
  const auto path = out_dir / "profit_duration.csv";
  write_csv(path, {"method", "rank", "profit_eur"}, rows);
  return path;
}

std::filesystem::path write_gray_cumulative(const std::filesystem::path& out_dir,
                                            const std::vector<LabeledRun>& runs) {
  Rows rows;
  for (const LabeledRun& run : runs) {
    const std::string method(method_name(run.method));
    const auto& cum = run.result.summary.cumulative_gray_mwh;
    for (std::size_t i = 0; i < run.result.hours.size(); ++i)
      rows.push_back({format_iso8601_utc(run.result.hours[i].time), method,
                      fmt(cum[i])});
  }
  const auto path = out_dir / "gray_cumulative.csv";
  write_csv(path, {"timestamp_utc", "method", "cumulative_gray_mwh"}, rows);
  return path;
}

std::filesystem::path write_sweep_n(const std::filesystem::path& out_dir,
                                    const SweepNResult& sweep) {
  Rows rows;
  for (const SweepNCell& c : sweep.cells)
    rows.push_back({std::to_string(c.n_scenarios), std::to_string(c.repeat),
                    std::to_string(c.seed), fmt(c.profit_eur), fmt(c.ratio)});
  const auto path = out_dir / "sweep_n.csv";
  write_csv(path, {"n_scenarios", "repeat", "seed", "profit_eur", "profit_ratio"},
            rows);
  return path;
}

std::filesystem::path write_sweep_prices(const std::filesystem::path& out_dir,
                                         const PriceSweepResult& sweep) {
  Rows rows;
  for (const PriceSweepCell& c : sweep.cells)
    rows.push_back({fmt(c.pi_gray), fmt(c.pi_green), std::string(method_name(c.method)),
                    fmt(c.profit_eur), fmt(c.ratio), fmt(c.green_share)});
  const auto path = out_dir / "sweep_prices.csv";
  write_csv(path,
            {"pi_gray", "pi_green", "method", "profit_eur", "profit_ratio",
             "green_share"},
            rows);
  return path;
}

std::filesystem::path write_price_impact(const std::filesystem::path& out_dir,
                                         const PriceImpactResult& impact) {
  Rows rows;
  for (const PriceImpactSeries& s : impact.series)
    for (std::size_t i = 0; i < s.dprice.size(); ++i)
      rows.push_back({fmt(s.capacity_mw), std::to_string(i + 1), fmt(s.dprice[i])});
  const auto path = out_dir / "price_impact.csv";
  write_csv(path, {"capacity_mw", "rank", "dprice_eur_mwh"}, rows);
  return path;
}

std::filesystem::path write_curve_dump(const std::filesystem::path& out_dir,
                                       const std::vector<CurveDumpRow>& rows_in) {
  Rows rows;
  for (const CurveDumpRow& r : rows_in)
    rows.push_back({r.timestamp, r.method, fmt(r.price), fmt(r.q_upto)});
  const auto path = out_dir / "curve_dump.csv";
  write_csv(path, {"timestamp_utc", "method", "price_eur_mwh", "q_upto_mwh"}, rows);
  return path;
}

std::filesystem::path write_summary_json(const std::filesystem::path& out_dir,
                                         const nlohmann::ordered_json& summary) {
  std::filesystem::create_directories(out_dir);
  const auto path = out_dir / "summary.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << summary.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed on " + path.string());
  return path;
}

nlohmann::ordered_json summarize_run(const BacktestResult& result) {
  const YearSummary& s = result.summary;
  nlohmann::ordered_json j;
  j["hours_evaluated"] = s.hours;
  j["hours_skipped"] = result.skipped_hours;
  j["hours_in_interest_range"] = result.interest_hours;
  j["profit_eur"] = s.profit_eur;
  j["cost_eur"] = s.cost_eur;
  j["green_tonnes"] = s.green_tonnes();
  j["gray_tonnes"] = s.gray_tonnes();
  j["total_tonnes"] = s.green_tonnes() + s.gray_tonnes();
  j["green_share"] = s.green_share();
  j["gray_mwh"] = s.gray_mwh;
  return j;
}

std::vector<std::filesystem::path> write_outputs(const RunArtifacts& artifacts,
                                                 const std::filesystem::path& out_dir) {
  std::vector<std::filesystem::path> written;
  written.push_back(write_hourly_results(out_dir, artifacts.backtests));
  if (!artifacts.backtests.empty()) {
    written.push_back(write_profit_duration(out_dir, artifacts.backtests));
    written.push_back(write_gray_cumulative(out_dir, artifacts.backtests));
  }
  if (artifacts.sweep_n) written.push_back(write_sweep_n(out_dir, *artifacts.sweep_n));
  if (artifacts.sweep_prices)
    written.push_back(write_sweep_prices(out_dir, *artifacts.sweep_prices));
  if (artifacts.price_impact)
    written.push_back(write_price_impact(out_dir, *artifacts.price_impact));
  if (!artifacts.curve_dump.empty())
    written.push_back(write_curve_dump(out_dir, artifacts.curve_dump));
  written.push_back(write_summary_json(out_dir, artifacts.summary));
  return written;
}

}  // namespace h2bid
