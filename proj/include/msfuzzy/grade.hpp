#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msfuzzy/error.hpp"

namespace msfuzzy {

/// Exact membership value in [0,1]. Equality is exact rational equality.
class Grade {
 public:
  using rep = boost::rational<std::int64_t>;

  constexpr Grade() = default;

  Grade(std::int64_t num, std::int64_t den) : value_(checked(rep(num, den))) {}

  explicit Grade(rep value) : value_(checked(value)) {}

  static Grade zero() { return Grade(0, 1); }
  static Grade one() { return Grade(1, 1); }
  static Grade half() { return Grade(1, 2); }

  /// Accepts "p/q", an integer, or a finite decimal such as "0.7"; the
  /// decimal is converted exactly (0.7 -> 7/10).
  static Grade parse(std::string_view text) {
    auto value = parse_rational(text);
    if (!value) throw Error(ErrorCode::SyntaxError, "malformed grade '" + std::string(text) + "'");
    return Grade(*value);
  }

  const rep& value() const noexcept { return value_; }
  std::int64_t numerator() const noexcept { return value_.numerator(); }
  std::int64_t denominator() const noexcept { return value_.denominator(); }

  bool is_zero() const noexcept { return value_.numerator() == 0; }
  bool is_one() const noexcept { return value_.numerator() == value_.denominator(); }

  /// "0", "1", or "p/q" in lowest terms.
  std::string str() const {
    if (value_.denominator() == 1) return std::to_string(value_.numerator());
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
  }

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Rational reading of a grade literal without the [0,1] check.
  static std::optional<rep> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_digits(text.substr(0, slash));
      auto den = parse_digits(text.substr(slash + 1));
      if (!num || !den || *den == 0) return std::nullopt;
      return rep(negative ? -*num : *num, *den);
    }

    auto dot = text.find('.');
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (dot != std::string_view::npos && frac_part.empty()) return std::nullopt;
    if (frac_part.size() > 15) return std::nullopt;

    std::int64_t whole = 0;
    if (!int_part.empty()) {
      auto parsed = parse_digits(int_part);
      if (!parsed) return std::nullopt;
      whole = *parsed;
    }
    std::int64_t frac = 0;
    std::int64_t scale = 1;
    if (!frac_part.empty()) {
      auto parsed = parse_digits(frac_part);
      if (!parsed) return std::nullopt;
      frac = *parsed;
      for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    }
    if (whole > 1'000'000) return std::nullopt;
    rep value(whole * scale + frac, scale);
    return negative ? -value : value;
  }

 private:
  static std::optional<std::int64_t> parse_digits(std::string_view digits) {
    if (digits.empty() || digits.size() > 18) return std::nullopt;
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return out;
  }

  static rep checked(rep value) {
    if (value < rep(0) || value > rep(1)) {
      throw Error(ErrorCode::GradeOutOfRange,
                  "grade " + std::to_string(value.numerator()) + "/" + std::to_string(value.denominator()) +
                      " outside [0,1]");
    }
    return value;
  }

  rep value_{0};
};

inline Grade min(const Grade& a, const Grade& b) { return b < a ? b : a; }
inline Grade max(const Grade& a, const Grade& b) { return a < b ? b : a; }

/// Parses a comma-separated grade list ("0,1/2,1"); result is sorted and
/// deduplicated.
inline std::vector<Grade> parse_grade_list(std::string_view text) {
  std::vector<Grade> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) out.push_back(Grade::parse(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace msfuzzy
