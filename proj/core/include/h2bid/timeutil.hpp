// timeutil.hpp - ISO-8601 UTC timestamp conversion
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace h2bid {

/// Parses "YYYY-MM-DDTHH:MM:SSZ" (trailing Z optional, ' ' accepted for 'T')
/// into Unix seconds. Throws std::invalid_argument on malformed input.
std::int64_t parse_iso8601_utc(std::string_view s);

/// Formats Unix seconds as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601_utc(std::int64_t unix_seconds);

}  // namespace h2bid
