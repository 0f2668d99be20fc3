// outputs.hpp - deterministic result files (CSV + summary JSON)
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "h2bid/backtest.hpp"

namespace h2bid {

/// A backtest run labeled with its method, as written to the result files.
struct LabeledRun {
  BidMethod method = BidMethod::point;
  BacktestResult result;
};

/// One exported bid-curve step row (the `curve` command's output).
struct CurveDumpRow {
  std::string timestamp;
  std::string method;
  double price = 0.0;
  double q_upto = 0.0;
};

/// Everything a command run wants on disk. hourly_results.csv and
/// summary.json are always written (header-only / minimal when empty); the
/// other files appear only when their section is present.
struct RunArtifacts {
  nlohmann::ordered_json summary;
  std::vector<LabeledRun> backtests;
  std::optional<SweepNResult> sweep_n;
  std::optional<PriceSweepResult> sweep_prices;
  std::optional<PriceImpactResult> price_impact;
  std::vector<CurveDumpRow> curve_dump;
};

/// Writes all artifact files into out_dir with fixed names, column orders,
/// and number formatting; two identical runs produce byte-identical files.
/// Returns the paths written. I/O failures throw with the path in the
/// message.
std::vector<std::filesystem::path> write_outputs(const RunArtifacts& artifacts,
                                                 const std::filesystem::path& out_dir);

/// Per-hour results of all labeled runs, in method order then timestamp.
std::filesystem::path write_hourly_results(const std::filesystem::path& out_dir,
                                           const std::vector<LabeledRun>& runs);

/// Per-hour profits sorted ascending per method (log-axis plot data).
std::filesystem::path write_profit_duration(const std::filesystem::path& out_dir,
                                            const std::vector<LabeledRun>& runs);

/// Running sum of gray consumption per method.
std::filesystem::path write_gray_cumulative(const std::filesystem::path& out_dir,
                                            const std::vector<LabeledRun>& runs);

std::filesystem::path write_sweep_n(const std::filesystem::path& out_dir,
                                    const SweepNResult& sweep);

std::filesystem::path write_sweep_prices(const std::filesystem::path& out_dir,
                                         const PriceSweepResult& sweep);

std::filesystem::path write_price_impact(const std::filesystem::path& out_dir,
                                         const PriceImpactResult& impact);

std::filesystem::path write_curve_dump(const std::filesystem::path& out_dir,
                                       const std::vector<CurveDumpRow>& rows);

std::filesystem::path write_summary_json(const std::filesystem::path& out_dir,
                                         const nlohmann::ordered_json& summary);

/// JSON fragment describing a backtest run (totals, shares, diagnostics);
/// embedded into summary.json under the method's name.
nlohmann::ordered_json summarize_run(const BacktestResult& result);

}  // namespace h2bid
