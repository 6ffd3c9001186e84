#pragma once

// Sparse multivectors over a scalar field.
//
// Terms are kept sorted by blade order with no stored zero coefficients, so
// two multivectors are equal exactly when their term lists are equal.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "clifford/blades.hpp"
#include "clifford/errors.hpp"
#include "clifford/scalar.hpp"

namespace clifford {

template <Scalar S>
class Multivector {
 public:
  struct Term {
    Blade blade;
    S coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, const S& value) { return Multivector(sig).with(Blade::unit(), value); }
  static Multivector blade(Signature sig, Blade b, const S& value = scalar_from_int<S>(1)) {
    return Multivector(sig).with(b, value);
  }

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  S coefficient(Blade b) const {
    auto it = find(b);
    return it != terms_.end() && it->blade == b ? it->coeff : S(0);
  }

  /// Sets the coefficient of `b`; a zero value removes the term.
  void set(Blade b, const S& value) {
    if (!b.valid_for(sig_)) throw std::invalid_argument("blade " + to_string(b) + " outside the algebra");
    auto it = find(b);
    const bool present = it != terms_.end() && it->blade == b;
    if (ScalarTraits<S>::is_zero(value)) {
      if (present) terms_.erase(it);
    } else if (present) {
      it->coeff = value;
    } else {
      terms_.insert(it, Term{b, value});
    }
  }

  /// Adds `value` to the coefficient of `b`.
  void accumulate(Blade b, const S& value) { set(b, S(coefficient(b) + value)); }

  Multivector with(Blade b, const S& value) && {
    set(b, value);
    return std::move(*this);
  }

  /// Builds from terms already sorted by blade order with no zero coefficients.
  static Multivector from_sorted_terms(Signature sig, std::vector<Term> terms) {
    Multivector m(sig);
    m.terms_ = std::move(terms);
    m.audit();
    return m;
  }

  /// Normalization audit: sorted, unique, no stored zeros. Active in debug builds.
  void audit() const {
#ifndef NDEBUG
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      assert(!ScalarTraits<S>::is_zero(terms_[i].coeff));
      assert(terms_[i].blade.valid_for(sig_));
      if (i) assert(blade_cmp(terms_[i - 1].blade, terms_[i].blade) < 0);
    }
#endif
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  typename std::vector<Term>::iterator find(Blade b) {
    return std::lower_bound(terms_.begin(), terms_.end(), b,
                            [](const Term& t, Blade key) { return blade_cmp(t.blade, key) < 0; });
  }
  typename std::vector<Term>::const_iterator find(Blade b) const {
    return std::lower_bound(terms_.begin(), terms_.end(), b,
                            [](const Term& t, Blade key) { return blade_cmp(t.blade, key) < 0; });
  }

  Signature sig_;
  std::vector<Term> terms_;
};

namespace detail {

inline void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw SignatureMismatch();
}

/// Applies `sign(grade)` (+1/-1) to every term.
template <Scalar S, class SignFn>
Multivector<S> map_grade_sign(const Multivector<S>& a, SignFn sign) {
  auto terms = a.terms();
  for (auto& t : terms)
    if (sign(t.blade.grade()) < 0) t.coeff = -t.coeff;
  return Multivector<S>::from_sorted_terms(a.signature(), std::move(terms));
}

}  // namespace detail

template <Scalar S>
Multivector<S> add(const Multivector<S>& a, const Multivector<S>& b) {
  detail::require_same(a.signature(), b.signature());
  using Term = typename Multivector<S>::Term;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && blade_cmp(i->blade, j->blade) < 0)) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || blade_cmp(j->blade, i->blade) < 0) {
      out.push_back(*j++);
    } else {
      S sum = i->coeff + j->coeff;
      if (!ScalarTraits<S>::is_zero(sum)) out.push_back(Term{i->blade, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return Multivector<S>::from_sorted_terms(a.signature(), std::move(out));
}

template <Scalar S>
Multivector<S> scale(const Multivector<S>& a, const S& factor) {
  if (ScalarTraits<S>::is_zero(factor)) return Multivector<S>(a.signature());
  auto terms = a.terms();
  for (auto& t : terms) t.coeff *= factor;
  // binary64 products can underflow to zero
  if constexpr (!ScalarTraits<S>::exact)
    std::erase_if(terms, [](const auto& t) { return ScalarTraits<S>::is_zero(t.coeff); });
  return Multivector<S>::from_sorted_terms(a.signature(), std::move(terms));
}

template <Scalar S>
Multivector<S> negate(const Multivector<S>& a) {
  return detail::map_grade_sign(a, [](int) { return -1; });
}

template <Scalar S>
Multivector<S> sub(const Multivector<S>& a, const Multivector<S>& b) {
  return add(a, negate(b));
}

/// a + value (value added to the scalar part).
template <Scalar S>
Multivector<S> add_scalar(const Multivector<S>& a, const S& value) {
  return add(a, Multivector<S>::scalar(a.signature(), value));
}

/// Geometric product: bilinear extension of blade_mul.
template <Scalar S>
Multivector<S> mul(const Multivector<S>& a, const Multivector<S>& b) {
  detail::require_same(a.signature(), b.signature());
  const Signature& sig = a.signature();
  struct Contribution {
    std::uint32_t bits;
    std::uint32_t ia;
    std::uint32_t ib;
    int sign;
  };
  std::vector<Contribution> parts;
  parts.reserve(a.size() * b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    for (std::uint32_t j = 0; j < b.size(); ++j) {
      const auto p = blade_mul(sig, a.terms()[i].blade, b.terms()[j].blade);
      parts.push_back({p.blade.bits, i, j, p.sign});
    }
  std::sort(parts.begin(), parts.end(),
            [](const Contribution& x, const Contribution& y) { return blade_cmp(Blade{x.bits}, Blade{y.bits}) < 0; });

  using Term = typename Multivector<S>::Term;
  std::vector<Term> out;
  S acc, prod;
  for (std::size_t k = 0; k < parts.size();) {
    const std::uint32_t bits = parts[k].bits;
    acc = 0;
    for (; k < parts.size() && parts[k].bits == bits; ++k) {
      prod = a.terms()[parts[k].ia].coeff * b.terms()[parts[k].ib].coeff;
      if (parts[k].sign > 0)
        acc += prod;
      else
        acc -= prod;
    }
    if (!ScalarTraits<S>::is_zero(acc)) out.push_back(Term{Blade{bits}, acc});
  }
  return Multivector<S>::from_sorted_terms(sig, std::move(out));
}

template <Scalar S>
Multivector<S> grade_part(const Multivector<S>& a, int k) {
  std::vector<typename Multivector<S>::Term> out;
  for (const auto& t : a.terms())
    if (t.blade.grade() == k) out.push_back(t);
  return Multivector<S>::from_sorted_terms(a.signature(), std::move(out));
}

template <Scalar S>
S scalar_part(const Multivector<S>& a) {
  // The unit blade sorts first.
  if (!a.terms().empty() && a.terms().front().blade.is_unit()) return a.terms().front().coeff;
  return S(0);
}

/// <a b>_0, without implicit reversion.
template <Scalar S>
S scalar_product(const Multivector<S>& a, const Multivector<S>& b) {
  detail::require_same(a.signature(), b.signature());
  // Only equal blades contribute to the scalar part.
  S acc = 0;
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    const auto c = blade_cmp(i->blade, j->blade);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      S prod = i->coeff * j->coeff;
      if (blade_square(a.signature(), i->blade) > 0)
        acc += prod;
      else
        acc -= prod;
      ++i;
      ++j;
    }
  }
  return acc;
}

template <Scalar S>
Multivector<S> reverse(const Multivector<S>& a) {
  return detail::map_grade_sign(a, reversion_sign);
}

/// Grade involution: grade-k part times (-1)^k.
template <Scalar S>
Multivector<S> grade_negation(const Multivector<S>& a) {
  return detail::map_grade_sign(a, [](int k) { return (k & 1) ? -1 : 1; });
}

/// Union of generator indices over all stored blades, as a bitmask.
template <Scalar S>
std::uint32_t span_mask(const Multivector<S>& a) {
  std::uint32_t mask = 0;
  for (const auto& t : a.terms()) mask |= t.blade.bits;
  return mask;
}

/// Ascending generator indices occurring in `a`.
template <Scalar S>
std::vector<int> span(const Multivector<S>& a) {
  return Blade{span_mask(a)}.indices();
}

/// Span used to size restricted representations: an empty span (pure scalar)
/// falls back to every generator of the signature.
template <Scalar S>
std::uint32_t effective_span_mask(const Multivector<S>& a) {
  const std::uint32_t mask = span_mask(a);
  return mask != 0 ? mask : a.signature().full_mask();
}

/// Largest coefficient magnitude.
template <Scalar S>
double max_norm(const Multivector<S>& a) {
  double m = 0.0;
  for (const auto& t : a.terms()) m = std::max(m, ScalarTraits<S>::magnitude(t.coeff));
  return m;
}

template <Scalar S>
Multivector<S> operator+(const Multivector<S>& a, const Multivector<S>& b) {
  return add(a, b);
}
template <Scalar S>
Multivector<S> operator-(const Multivector<S>& a, const Multivector<S>& b) {
  return sub(a, b);
}
template <Scalar S>
Multivector<S> operator-(const Multivector<S>& a) {
  return negate(a);
}
template <Scalar S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
  return mul(a, b);
}

extern template class Multivector<Rational>;
extern template class Multivector<double>;
extern template Multivector<Rational> mul(const Multivector<Rational>&, const Multivector<Rational>&);
extern template Multivector<double> mul(const Multivector<double>&, const Multivector<double>&);
extern template Multivector<Rational> add(const Multivector<Rational>&, const Multivector<Rational>&);
extern template Multivector<double> add(const Multivector<double>&, const Multivector<double>&);

}  // namespace clifford
