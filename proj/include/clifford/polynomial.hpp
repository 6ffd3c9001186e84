#pragma once

// Dense univariate polynomials stored highest degree first, as returned by char_poly.

#include <string>
#include <vector>

#include "clifford/scalar.hpp"

namespace clifford {

template <Scalar S>
S poly_eval(const std::vector<S>& coeffs, const S& v) {
  S acc = 0;
  for (const auto& c : coeffs) acc = acc * v + c;
  return acc;
}

template <Scalar S>
std::vector<S> poly_mul(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<S> out(a.size() + b.size() - 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <Scalar S>
std::vector<S> poly_pow(const std::vector<S>& a, unsigned exponent) {
  std::vector<S> out{S(1)};
  for (unsigned k = 0; k < exponent; ++k) out = poly_mul(out, a);
  return out;
}

/// `v^4 - 4*v^3 + 48*v^2 - 88*v + 484`; zero terms are skipped.
template <Scalar S>
std::string format_polynomial(const std::vector<S>& coeffs, const std::string& var = "v") {
  using T = ScalarTraits<S>;
  std::string out;
  const std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const S& c = coeffs[k];
    if (T::is_zero(c)) continue;
    const std::size_t power = degree - k;
    const bool negative = T::is_negative(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mag = T::to_string(negative ? S(-c) : c);
    if (power == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

}  // namespace clifford
