#include "majority/numeric.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace majority {
namespace {

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw std::invalid_argument("invalid numeric literal '" + std::string(text) +
                              "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

boost::multiprecision::mpz_int parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  // A leading 0 would make GMP read octal.
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  boost::multiprecision::mpz_int value{std::string(s)};
  return negative ? boost::multiprecision::mpz_int(-value) : value;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text, "empty");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !all_digits(den)) {
      bad_literal(text, "expected p/q with integer p and positive integer q");
    }
    auto d = parse_integer(den);
    if (d == 0) bad_literal(text, "zero denominator");
    return Rational(parse_integer(num), d);
  }
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view whole = s;
  std::string_view frac;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
  }
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac))) {
    bad_literal(text, "expected a decimal or p/q");
  }
  std::string digits = std::string(whole) + std::string(frac);
  boost::multiprecision::mpz_int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Rational value(parse_integer(digits), scale);
  return negative ? Rational(-value) : value;
}

double parse_double(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text, "empty");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return parse_rational(s).convert_to<double>();
  }
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    bad_literal(text, "expected a decimal or p/q");
  }
  if (!std::isfinite(value)) bad_literal(text, "not finite");
  return value;
}

}  // namespace

template <>
Rational from_ratio<Rational>(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("from_ratio: zero denominator");
  return Rational(num, den);
}

template <>
double from_ratio<double>(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("from_ratio: zero denominator");
  return static_cast<double>(num) / static_cast<double>(den);
}

template <>
double to_double<double>(const double& value) {
  return value;
}

template <>
double to_double<Rational>(const Rational& value) {
  return value.convert_to<double>();
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
double parse_scalar<double>(std::string_view text) {
  return parse_double(text);
}

template <>
std::string format_scalar<Rational>(const Rational& value) {
  return value.str();
}

template <>
std::string format_scalar<double>(const double& value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_scalar: to_chars failed");
  return std::string(buf.data(), ptr);
}

bool is_fraction_literal(std::string_view text) {
  return text.find('/') != std::string_view::npos;
}

}  // namespace majority
