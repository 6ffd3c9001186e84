#include "clifford/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace clifford {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

template <Scalar S>
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Multivector<S> expression(const Signature& sig) {
    sig_ = &sig;
    Multivector<S> out(sig);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    term_into(out, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("'+', '-' or end of input");
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      term_into(out, negative);
    }
    return out;
  }

  S lone_scalar() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    S value = scalar();
    skip_ws();
    if (!at_end()) fail("end of input");
    return negative ? S(-value) : value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected, 1); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& expected, std::size_t len) const {
    std::string found = pos < text_.size() ? std::string(text_.substr(pos, len)) : std::string();
    throw ParseError(pos, expected, found);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void term_into(Multivector<S>& out, bool negative) {
    S coeff(1);
    Blade blade = Blade::unit();
    if (peek() == 'e') {
      blade = parse_blade();
    } else if (is_digit(peek())) {
      coeff = scalar();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'e') fail("blade after '*'");
        blade = parse_blade();
      }
    } else {
      fail("term (number or blade)");
    }
    out.accumulate(blade, negative ? S(-coeff) : coeff);
  }

  S scalar() {
    const std::size_t start = pos_;
    const std::string_view whole = digits();
    if (whole.empty()) fail("number");
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      const std::string_view den = digits();
      if (den.empty()) fail("positive integer denominator");
      if (den.find_first_not_of('0') == std::string_view::npos) fail_at(den_pos, "positive integer denominator", den.size());
      return ratio(whole, den);
    }
    const bool decimal_point = peek() == '.';
    const bool exponent = (peek() == 'e' || peek() == 'E') && exponent_follows();
    if (!decimal_point && !exponent) return integer(whole);
    if constexpr (ScalarTraits<S>::exact) {
      fail_at(pos_, "integer or fraction (decimal literals need binary64 scalars)", 1);
    } else {
      if (decimal_point) {
        ++pos_;
        if (digits().empty()) fail("digits after decimal point");
      }
      if ((peek() == 'e' || peek() == 'E') && exponent_follows()) {
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        digits();
      }
      double value = 0.0;
      const char* first = text_.data() + start;
      auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
      if (ec != std::errc() || ptr != text_.data() + pos_) fail_at(start, "decimal number", pos_ - start);
      return value;
    }
  }

  bool exponent_follows() const {
    std::size_t k = pos_ + 1;
    if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
    return k < text_.size() && is_digit(text_[k]);
  }

  static S integer(std::string_view text) {
    if constexpr (ScalarTraits<S>::exact) {
      return Rational(mpz_class(std::string(text), 10));
    } else {
      double v = 0.0;
      std::from_chars(text.data(), text.data() + text.size(), v);
      return v;
    }
  }

  static S ratio(std::string_view num, std::string_view den) {
    if constexpr (ScalarTraits<S>::exact) {
      Rational r(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
      r.canonicalize();
      return r;
    } else {
      return integer(num) / integer(den);
    }
  }

  Blade parse_blade() {
    ++pos_;  // 'e'
    std::vector<std::pair<int, std::size_t>> indices;  // (index, offset)
    if (peek() == '[') {
      ++pos_;
      for (;;) {
        skip_ws();
        const std::size_t at = pos_;
        const std::string_view d = digits();
        if (d.empty()) fail("generator index");
        int value = 0;
        auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
        if (ec != std::errc() || ptr != d.data() + d.size()) value = Signature::kMaxGenerators + 1;
        indices.emplace_back(value, at);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          break;
        }
        fail("',' or ']'");
      }
    } else {
      if (!is_digit(peek())) fail("generator index digit or '['");
      while (is_digit(peek())) {
        indices.emplace_back(peek() - '0', pos_);
        ++pos_;
      }
    }
    Blade blade;
    int previous = 0;
    for (const auto& [index, at] : indices) {
      const std::size_t len = std::to_string(index).size();
      if (index < 1 || index > sig_->n())
        fail_at(at, "generator index in 1.." + std::to_string(sig_->n()), len);
      if (index <= previous) fail_at(at, "strictly ascending generator indices", len);
      blade.bits |= Blade::generator(index).bits;
      previous = index;
    }
    return blade;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Signature* sig_ = nullptr;
};

}  // namespace

template <Scalar S>
Multivector<S> parse(std::string_view input, const Signature& sig) {
  return Parser<S>(input).expression(sig);
}

template <Scalar S>
S parse_scalar(std::string_view input) {
  return Parser<S>(input).lone_scalar();
}

template <Scalar S>
std::string format(const Multivector<S>& a) {
  using T = ScalarTraits<S>;
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    const bool negative = T::is_negative(t.coeff);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mag = T::to_string(negative ? S(-t.coeff) : t.coeff);
    if (t.blade.is_unit()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += to_string(t.blade);
    }
  }
  return out;
}

template Multivector<Rational> parse(std::string_view, const Signature&);
template Multivector<double> parse(std::string_view, const Signature&);
template std::string format(const Multivector<Rational>&);
template std::string format(const Multivector<double>&);
template Rational parse_scalar(std::string_view);
template double parse_scalar(std::string_view);

}  // namespace clifford
