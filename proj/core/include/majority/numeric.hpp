#pragma once

// Scalar support for the two arithmetic modes: IEEE doubles for the fast path
// and GMP rationals for the exact path.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace majority {

using Rational = boost::multiprecision::mpq_rational;

template <typename T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <typename T>
inline constexpr bool kIsExact = std::same_as<T, Rational>;

// Exact p/q for rationals; correctly rounded p/q for doubles.
template <Scalar T>
T from_ratio(std::int64_t num, std::int64_t den = 1);

template <Scalar T>
double to_double(const T& value);

// Accepts integers, decimals ("0.25", "-1.5e-3" for doubles) and "p/q".
// Decimals parse exactly in rational mode ("0.4" is 2/5).
// Throws std::invalid_argument on malformed input or a zero denominator.
template <Scalar T>
T parse_scalar(std::string_view text);

// Doubles use the shortest round-trip representation; rationals print "p" or
// "p/q" in lowest terms. parse_scalar(format_scalar(x)) == x for both.
template <Scalar T>
std::string format_scalar(const T& value);

template <> Rational from_ratio<Rational>(std::int64_t, std::int64_t);
template <> double from_ratio<double>(std::int64_t, std::int64_t);
template <> double to_double<double>(const double&);
template <> double to_double<Rational>(const Rational&);
template <> Rational parse_scalar<Rational>(std::string_view);
template <> double parse_scalar<double>(std::string_view);
template <> std::string format_scalar<Rational>(const Rational&);
template <> std::string format_scalar<double>(const double&);

// True when the literal is written as a fraction "p/q".
bool is_fraction_literal(std::string_view text);

template <Scalar T>
bool is_finite(const T& value) {
  if constexpr (kIsExact<T>) {
    return true;
  } else {
    return std::isfinite(value);
  }
}

template <Scalar T>
T abs_value(const T& value) {
  return value < T(0) ? T(-value) : value;
}

}  // namespace majority
