#include "quizmine/money.hpp"

#include <algorithm>

#include "quizmine/errors.hpp"

namespace quizmine {

namespace {

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

constexpr std::int64_t kPow10[11] = {1,
                                     10,
                                     100,
                                     1000,
                                     10000,
                                     100000,
                                     1000000,
                                     10000000,
                                     100000000,
                                     1000000000,
                                     10000000000};

}  // namespace

Money Money::token_cost(std::int64_t tokens, std::int64_t rate_e4) {
  // tokens * rate_usd_per_1M / 1e6 = tokens * rate_e4 / 1e10 USD.
  return from_units_e10(__int128(tokens) * rate_e4);
}

std::string Money::to_string() const {
  bool negative = units_e10_ < 0;
  unsigned __int128 mag = negative ? unsigned __int128(-units_e10_) : unsigned __int128(units_e10_);
  unsigned __int128 whole = mag / 10000000000ull;
  std::uint64_t frac = std::uint64_t(mag % 10000000000ull);
  std::string out = negative ? "-" : "";
  out += u128_to_string(whole);
  if (frac != 0) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%010llu", (unsigned long long)frac);
    std::string f(buf);
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

std::string Money::to_display(int decimals) const {
  if (decimals < 0 || decimals > 10)
    throw Error(errc::invalid_argument, "display decimals out of range");
  bool negative = units_e10_ < 0;
  unsigned __int128 mag = negative ? unsigned __int128(-units_e10_) : unsigned __int128(units_e10_);
  unsigned __int128 divisor = unsigned __int128(kPow10[10 - decimals]);
  unsigned __int128 scaled = mag / divisor;
  unsigned __int128 rem = mag % divisor;
  if (rem * 2 >= divisor) ++scaled;  // half away from zero
  unsigned __int128 whole = scaled;
  std::string frac_digits;
  if (decimals > 0) {
    unsigned __int128 frac_mod = unsigned __int128(kPow10[decimals]);
    unsigned __int128 frac = scaled % frac_mod;
    whole = scaled / frac_mod;
    frac_digits = u128_to_string(frac);
    frac_digits.insert(0, std::size_t(decimals) - frac_digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  out += u128_to_string(whole);
  if (decimals > 0) out += "." + frac_digits;
  return out;
}

std::int64_t parse_rate_e4(const std::string& text) {
  if (text.empty()) throw Error(errc::parse_error, "empty pricing rate");
  std::size_t pos = 0;
  std::int64_t whole = 0;
  bool any_digit = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > 1000000000) throw Error(errc::parse_error, "pricing rate too large: " + text);
    any_digit = true;
    ++pos;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (frac_digits < 4) {
        frac = frac * 10 + (text[pos] - '0');
        ++frac_digits;
      } else if (text[pos] != '0') {
        throw Error(errc::parse_error,
                    "pricing rate has more than four decimal places: " + text);
      }
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit || pos != text.size())
    throw Error(errc::parse_error, "malformed pricing rate: \"" + text + "\"");
  while (frac_digits < 4) {
    frac *= 10;
    ++frac_digits;
  }
  return whole * 10000 + frac;
}

}  // namespace quizmine
