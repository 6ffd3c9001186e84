#pragma once

// Faddeev-LeVerrier-Souriau recursion carried out directly on multivectors.
//
// With N steps and M_0 = 1:
//   K_i = A M_{i-1},   c_i = -(N/i) <K_i>_0,   M_i = K_i + c_i.
// After N steps M_N = 0; c_1..c_N are the coefficients of the monic
// characteristic polynomial of A in an N-dimensional real representation and
// A^{-1} = -M_{N-1} / c_N whenever c_N != 0.
//
// N is chosen by StepMode: the full regular representation (2^n), its Bott
// reduction (2^ceil(n/2)), or the same two counts restricted to the
// generators that occur in A.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "clifford/multivector.hpp"

namespace clifford {

enum class StepMode {
  full,          // N = 2^n
  bott,          // N = 2^ceil(n/2)
  span_reduced,  // N = 2^ceil(s/2), s = |span(A)|
  span_full,     // N = 2^s
};

std::string_view to_string(StepMode mode) noexcept;
/// Accepts "full", "bott", "reduced" and "span-full".
std::optional<StepMode> parse_step_mode(std::string_view text) noexcept;

/// `span_count` is the number of generators in the (effective) span.
std::size_t step_count(const Signature& sig, int span_count, StepMode mode);

template <Scalar S>
std::size_t step_count(const Multivector<S>& a, StepMode mode) {
  return step_count(a.signature(), std::popcount(effective_span_mask(a)), mode);
}

template <Scalar S>
struct FvsIterate {
  S t;               // c_i
  Multivector<S> m;  // K_i = A M_{i-1}
};

template <Scalar S>
struct FvsResult {
  StepMode mode;
  std::size_t steps;      // N
  std::size_t steps_run;  // recursion steps actually evaluated
  std::vector<S> coeffs;  // c_1 .. c_degree
  std::vector<FvsIterate<S>> iterates;
  std::optional<Multivector<S>> inverse;
  bool singular;

  std::size_t degree() const noexcept { return coeffs.size(); }
};

template <Scalar S>
FvsResult<S> fvs_run(const Multivector<S>& a, StepMode mode, bool want_trace = false) {
  using T = ScalarTraits<S>;
  const Signature& sig = a.signature();
  const std::size_t n = step_count(a, mode);

  FvsResult<S> r{mode, n, 0, {}, {}, std::nullopt, false};
  r.coeffs.reserve(n);

  const double a_norm = max_norm(a);
  auto tolerance = [a_norm](std::size_t power) {
    return 1e-12 * std::max(1.0, std::pow(a_norm, static_cast<double>(power)));
  };
  auto vanishes = [&](const Multivector<S>& x, std::size_t power) {
    if constexpr (T::exact)
      return x.is_zero();
    else
      return max_norm(x) <= tolerance(power);
  };

  Multivector<S> prev = Multivector<S>::scalar(sig, S(1));  // M_{i-1}
  for (std::size_t i = 1; i <= n; ++i) {
    Multivector<S> k = mul(a, prev);
    S c = -T::from_ratio(static_cast<long>(n), static_cast<long>(i)) * scalar_part(k);
    r.steps_run = i;
    if (want_trace) r.iterates.push_back({c, k});

    if (i < n && vanishes(k, i)) {
      // A annihilates M_{i-1} != 0, so A is a zero divisor and every later
      // coefficient is zero.
      r.coeffs.resize(n, S(0));
      r.singular = true;
      return r;
    }
    r.coeffs.push_back(c);
    Multivector<S> next = add_scalar(k, c);

    if (i < n) {
      if (!T::is_zero(c) && vanishes(next, i)) {
        // A M_{i-1} = -c_i: the recursion closed early at degree i.
        r.inverse = scale(prev, S(S(-1) / c));
        return r;
      }
      prev = std::move(next);
      continue;
    }

    if constexpr (T::exact) {
      if (!next.is_zero()) throw NonTermination(n);
    }
    const bool zero_c = T::exact ? T::is_zero(c) : T::magnitude(c) <= tolerance(n);
    if (zero_c)
      r.singular = true;
    else
      r.inverse = scale(prev, S(S(-1) / c));
  }
  return r;
}

/// Monic characteristic polynomial, highest degree first: [1, c_1, ..., c_N].
template <Scalar S>
std::vector<S> char_poly(const FvsResult<S>& r) {
  std::vector<S> out;
  out.reserve(r.coeffs.size() + 1);
  out.push_back(S(1));
  out.insert(out.end(), r.coeffs.begin(), r.coeffs.end());
  return out;
}

template <Scalar S>
std::vector<S> char_poly(const Multivector<S>& a, StepMode mode) {
  return char_poly(fvs_run(a, mode));
}

/// (-1)^N c_N: determinant of the N-dimensional representation of A.
template <Scalar S>
S rep_determinant(const FvsResult<S>& r) {
  if (r.coeffs.empty()) return S(1);
  const S& last = r.coeffs.back();
  return (r.degree() % 2 == 0) ? last : S(-last);
}

template <Scalar S>
S rep_determinant(const Multivector<S>& a, StepMode mode) {
  return rep_determinant(fvs_run(a, mode));
}

/// Throws SingularError when A has no inverse.
template <Scalar S>
Multivector<S> inverse(const Multivector<S>& a, StepMode mode = StepMode::span_reduced) {
  auto r = fvs_run(a, mode);
  if (!r.inverse) throw SingularError();
  return std::move(*r.inverse);
}

extern template FvsResult<Rational> fvs_run(const Multivector<Rational>&, StepMode, bool);
extern template FvsResult<double> fvs_run(const Multivector<double>&, StepMode, bool);

}  // namespace clifford
