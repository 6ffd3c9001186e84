#pragma once

// Text form of multivectors.
//
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := scalar ['*' blade] | blade
//   scalar     := integer | integer '/' positive-integer | decimal (binary64 only)
//   blade      := 'e' digit+ | 'e[' index (',' index)* ']'
//
// Blade indices must be strictly ascending and within 1..p+q. Whitespace
// between tokens is ignored.

#include <string>
#include <string_view>

#include "clifford/multivector.hpp"

namespace clifford {

/// Throws ParseError.
template <Scalar S>
Multivector<S> parse(std::string_view input, const Signature& sig);

/// Canonical form: terms in blade order, unit coefficients elided on
/// non-unit blades, e.g. `1 - 2*e15 + 5*e134`. The zero multivector is `0`.
template <Scalar S>
std::string format(const Multivector<S>& a);

/// Scalar literal in the same grammar (`-5/22`, `3`, `0.25`).
template <Scalar S>
S parse_scalar(std::string_view input);

extern template Multivector<Rational> parse(std::string_view, const Signature&);
extern template Multivector<double> parse(std::string_view, const Signature&);
extern template std::string format(const Multivector<Rational>&);
extern template std::string format(const Multivector<double>&);
extern template Rational parse_scalar(std::string_view);
extern template double parse_scalar(std::string_view);

}  // namespace clifford
