#pragma once

// Scalar fields the library is instantiated over: exact rationals (GMP) and binary64.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace clifford {

using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_negative(const Rational& x) { return sgn(x) < 0; }
  static Rational from_ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  /// `p/q`, or `p` when the denominator is 1.
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "f64";

  static bool is_zero(double x) { return x == 0.0; }
  static bool is_negative(double x) { return x < 0.0; }
  static double from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static double magnitude(double x) { return std::fabs(x); }
  /// Shortest text that reads back to the same double.
  static std::string to_string(double x);
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
S scalar_from_int(long v) {
  return ScalarTraits<S>::from_ratio(v, 1);
}

}  // namespace clifford
