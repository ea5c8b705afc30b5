#pragma once

#include <cstdint>
#include <string>

namespace quizmine {

/// Exact decimal dollar amount in units of 1e-10 USD. Token pricing is
/// dollars per million tokens with at most four decimal places, so
/// tokens * rate / 1e6 always lands on this grid with no remainder;
/// accumulation stays in integers end to end.
class Money {
 public:
  Money() = default;

  static Money from_units_e10(__int128 units) {
    Money m;
    m.units_e10_ = units;
    return m;
  }

  /// tokens * (usd per 1M tokens). `rate_e4` is the rate scaled by 1e4.
  static Money token_cost(std::int64_t tokens, std::int64_t rate_e4);

  Money operator+(const Money& o) const { return from_units_e10(units_e10_ + o.units_e10_); }
  Money& operator+=(const Money& o) {
    units_e10_ += o.units_e10_;
    return *this;
  }
  bool operator==(const Money& o) const { return units_e10_ == o.units_e10_; }

  /// Decimal string with no trailing zeros beyond the decimal point
  /// ("0.228875", "1.06", "0").
  std::string to_string() const;

  /// Rounded half away from zero to `decimals` places ("0.23", "0.0021").
  std::string to_display(int decimals) const;

  __int128 units_e10() const { return units_e10_; }

 private:
  __int128 units_e10_ = 0;
};

/// Parses a nonnegative decimal rate string like "2.50" or "0.1" into the
/// rate scaled by 1e4. Throws Error(parse_error) on malformed input or more
/// than four decimal places.
std::int64_t parse_rate_e4(const std::string& text);

}  // namespace quizmine
