#include "quizmine/timeutil.hpp"

#include <charconv>
#include <chrono>

#include "quizmine/errors.hpp"

namespace quizmine {

namespace {

[[noreturn]] void bad(const std::string& text, const char* why) {
  throw Error(errc::parse_error, "bad ISO-8601 timestamp \"" + text + "\": " + why);
}

int read_int(const std::string& s, std::size_t pos, std::size_t len,
             const std::string& full, const char* what) {
  if (pos + len > s.size()) bad(full, what);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, value);
  if (ec != std::errc() || ptr != s.data() + pos + len) bad(full, what);
  return value;
}

}  // namespace

Instant parse_iso8601(const std::string& text) {
  // YYYY-MM-DDTHH:MM:SS[.fff...](Z|+hh:mm|-hh:mm|+hhmm|-hhmm)
  const std::string& s = text;
  if (s.size() < 20) bad(s, "too short");
  int year = read_int(s, 0, 4, s, "year");
  if (s[4] != '-') bad(s, "expected '-' after year");
  int month = read_int(s, 5, 2, s, "month");
  if (s[7] != '-') bad(s, "expected '-' after month");
  int day = read_int(s, 8, 2, s, "day");
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') bad(s, "expected 'T'");
  int hour = read_int(s, 11, 2, s, "hour");
  if (s[13] != ':') bad(s, "expected ':'");
  int minute = read_int(s, 14, 2, s, "minute");
  if (s[16] != ':') bad(s, "expected ':'");
  int second = read_int(s, 17, 2, s, "second");

  std::size_t pos = 19;
  std::int64_t millis = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) bad(s, "empty fraction");
    // Millisecond resolution; further digits truncate.
    std::int64_t scale = 100;
    for (std::size_t i = start; i < pos && scale > 0; ++i) {
      millis += (s[i] - '0') * scale;
      scale /= 10;
    }
  }
  if (pos >= s.size()) bad(s, "missing zone designator");
  std::int64_t offset_min = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    int sign = s[pos] == '+' ? 1 : -1;
    ++pos;
    int oh = read_int(s, pos, 2, s, "zone hours");
    pos += 2;
    if (pos < s.size() && s[pos] == ':') ++pos;
    int om = read_int(s, pos, 2, s, "zone minutes");
    pos += 2;
    offset_min = sign * (oh * 60 + om);
  } else {
    bad(s, "missing zone designator");
  }
  if (pos != s.size()) bad(s, "trailing characters");

  if (month < 1 || month > 12) bad(s, "month out of range");
  if (day < 1 || day > 31) bad(s, "day out of range");
  if (hour > 23 || minute > 59 || second > 60) bad(s, "time out of range");

  using namespace std::chrono;
  year_month_day ymd{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                     std::chrono::day{unsigned(day)}};
  if (!ymd.ok()) bad(s, "invalid calendar date");
  std::int64_t days = sys_days{ymd}.time_since_epoch().count();
  std::int64_t total_s =
      days * 86400 + hour * 3600 + minute * 60 + second - offset_min * 60;
  return Instant{total_s * 1000 + millis};
}

std::string format_iso8601(Instant t) {
  using namespace std::chrono;
  std::int64_t ms = t.ms_since_epoch;
  std::int64_t s = ms >= 0 ? ms / 1000 : (ms - 999) / 1000;
  int frac = int(ms - s * 1000);
  std::int64_t days = s >= 0 ? s / 86400 : (s - 86399) / 86400;
  int sod = int(s - days * 86400);
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[40];
  int n = std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d",
                        int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                        sod / 3600, (sod / 60) % 60, sod % 60);
  std::string out(buf, std::size_t(n));
  if (frac != 0) {
    std::snprintf(buf, sizeof buf, ".%03d", frac);
    out += buf;
  }
  out += 'Z';
  return out;
}

}  // namespace quizmine
