// csv.hpp - minimal CSV table reader/writer (header row, comma separated)
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace h2bid {

/// A parsed CSV file: header names plus rows of string cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index for a header name; throws std::runtime_error when absent.
  std::size_t column(const std::string& name) const;
};

/// Reads a whole CSV file. No quoting support; cells are trimmed of
/// surrounding whitespace. Throws on I/O failure or ragged rows.
CsvTable read_csv(const std::filesystem::path& path);

/// Shortest-round-trip decimal text for a double (std::to_chars), so written
/// files re-read to the exact same value and bytes are deterministic.
std::string format_double(double v);

/// Writes rows to a CSV file, creating parent directories. Throws on I/O
/// failure with the path in the message.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters. Used for
/// input provenance in summaries.
std::string file_digest(const std::filesystem::path& path);

}  // namespace h2bid
