#pragma once

#include <cstdint>
#include <string>

namespace quizmine {

/// UTC instant with millisecond resolution, stored as milliseconds since the
/// Unix epoch. Event-log timestamps are normalized to this on parse.
struct Instant {
  std::int64_t ms_since_epoch = 0;

  auto operator<=>(const Instant&) const = default;
};

/// Parses an ISO-8601 timestamp with an explicit zone ("Z" or +hh:mm/-hh:mm,
/// also +hhmm) and optional fractional seconds. Throws Error(parse_error).
Instant parse_iso8601(const std::string& text);

/// Formats as "YYYY-MM-DDTHH:MM:SSZ", with ".mmm" when sub-second.
std::string format_iso8601(Instant t);

}  // namespace quizmine
