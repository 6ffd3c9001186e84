#include <doctest.h>

#include <vector>

#include "clifford/fvs.hpp"
#include "clifford/matrep.hpp"
#include "clifford/polynomial.hpp"
#include "generators.hpp"

using namespace clifford;
using namespace clifford::testing;

namespace {

using MV = Multivector<Rational>;
using Poly = std::vector<Rational>;

Blade bl(std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return Blade::from_indices(v);
}

MV mv(const Signature& sig, std::initializer_list<std::pair<Blade, Rational>> terms) {
  MV out(sig);
  for (const auto& [b, c] : terms) out.accumulate(b, c);
  return out;
}

Rational q(long num, long den = 1) { return ScalarTraits<Rational>::from_ratio(num, den); }

const Blade one = Blade::unit();

MV cl25_example() { return mv(Signature(2, 5), {{one, q(1)}, {bl({1, 5}), q(-2)}, {bl({1, 3, 4}), q(5)}}); }

MV cl52_example() {
  const Signature sig(5, 2);
  return mv(sig, {{one, q(1)}, {bl({2}), q(-1)}, {Blade{sig.full_mask()}, q(1)}});
}

Poly ints(std::initializer_list<long> xs) {
  Poly p;
  for (long x : xs) p.push_back(q(x));
  return p;
}

/// a1 + a2 e1 + a3 e2 + a4 e12
MV quad(const Signature& sig, const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  return mv(sig, {{one, a1}, {bl({1}), a2}, {bl({2}), a3}, {bl({1, 2}), a4}});
}

}  // namespace

TEST_CASE("step_count examples") {
  CHECK(step_count(cl25_example(), StepMode::span_reduced) == 4);
  CHECK(step_count(cl25_example(), StepMode::span_full) == 16);
  CHECK(step_count(cl25_example(), StepMode::bott) == 16);
  CHECK(step_count(cl25_example(), StepMode::full) == 128);
  CHECK(step_count(cl52_example(), StepMode::span_reduced) == 16);
  CHECK(step_count(cl52_example(), StepMode::full) == 128);
  CHECK(step_count(quad(Signature(2, 0), q(1), q(2), q(3), q(4)), StepMode::bott) == 2);
  CHECK(step_count(MV::scalar(Signature(3, 0), q(2)), StepMode::span_reduced) == 4);
  CHECK(step_count(MV(Signature(1, 0)), StepMode::span_reduced) == 2);
}

TEST_CASE("step mode names") {
  for (auto mode : {StepMode::full, StepMode::bott, StepMode::span_reduced, StepMode::span_full})
    CHECK(parse_step_mode(to_string(mode)) == mode);
  CHECK_FALSE(parse_step_mode("half").has_value());
}

TEST_CASE("Cl(2,5) reduced run") {
  const MV a = cl25_example();
  const Signature sig = a.signature();
  const auto r = fvs_run(a, StepMode::span_reduced, true);
  CHECK(r.steps == 4);
  CHECK(r.steps_run == 4);
  CHECK(r.coeffs == ints({-4, 48, -88, 484}));
  REQUIRE(r.iterates.size() == 4);
  CHECK(r.iterates[0].m == a);
  CHECK(r.iterates[1].m == mv(sig, {{one, q(-24)}, {bl({1, 5}), q(4)}, {bl({1, 3, 4}), q(-10)}}));
  CHECK(r.iterates[2].m == mv(sig, {{one, q(66)}, {bl({1, 5}), q(-44)}, {bl({1, 3, 4}), q(110)}}));
  std::vector<Rational> k0;
  for (const auto& it : r.iterates) k0.push_back(scalar_part(it.m));
  CHECK(k0 == ints({1, -24, 66, -484}));
  CHECK(scalar_part(a * add_scalar(r.iterates[2].m, r.coeffs[2])) == -484);
  REQUIRE(r.inverse.has_value());
  CHECK(*r.inverse == mv(sig, {{one, q(1, 22)}, {bl({1, 5}), q(2, 22)}, {bl({1, 3, 4}), q(-5, 22)}}));
  CHECK_FALSE(r.singular);
}

TEST_CASE("Cl(5,2) reduced run") {
  const MV a = cl52_example();
  const Signature sig = a.signature();
  const auto r = fvs_run(a, StepMode::span_reduced, true);
  REQUIRE(r.coeffs.size() == 16);
  const Poly first15(r.coeffs.begin(), r.coeffs.begin() + 15);
  CHECK(first15 == ints({-16, 120, -560, 1836, -4560, 9064, -14960, 20886, -24880, 25480, -22416, 16716, -10480,
                         5400, -2000}));
  const Blade pseudo{sig.full_mask()};
  const Blade c = bl({1, 3, 4, 5, 6, 7});
  CHECK(r.iterates[14].m == mv(sig, {{one, q(1875)}, {bl({2}), q(125)}, {pseudo, q(375)}, {c, q(-250)}}));
  REQUIRE(r.inverse.has_value());
  CHECK(*r.inverse == mv(sig, {{one, q(1, 5)}, {bl({2}), q(-1, 5)}, {pseudo, q(-3, 5)}, {c, q(2, 5)}}));
  // p_A(v) = (1 + v^2)^4 (5 - 4v + v^2)^4
  CHECK(char_poly(a, StepMode::span_reduced) == poly_mul(poly_pow(ints({1, 0, 1}), 4), poly_pow(ints({1, -4, 5}), 4)));
}

TEST_CASE("unit and scalars") {
  const Signature sig(2, 0);
  for (auto mode : {StepMode::full, StepMode::bott, StepMode::span_reduced, StepMode::span_full}) {
    const auto r = fvs_run(MV::scalar(sig, q(1)), mode);
    REQUIRE(r.inverse.has_value());
    CHECK(*r.inverse == MV::scalar(sig, q(1)));
    CHECK_FALSE(r.singular);
    CHECK(rep_determinant(r) == 1);
  }
  CHECK(inverse(MV::scalar(sig, q(3))) == MV::scalar(sig, q(1, 3)));
  CHECK(char_poly(MV::scalar(sig, q(3)), StepMode::span_reduced) == ints({1, -6, 9}));
}

TEST_CASE("zero divisor in Cl(1,1)") {
  const MV a = mv(Signature(1, 1), {{one, q(1)}, {bl({1}), q(1)}});
  const auto r = fvs_run(a, StepMode::span_reduced);
  CHECK(r.singular);
  CHECK_FALSE(r.inverse.has_value());
  CHECK(r.coeffs == ints({-2, 0}));
  CHECK(rep_determinant(a, StepMode::span_reduced) == 0);
  CHECK(bareiss_det(pi(a, ExtendedBasis(a.signature(), std::vector<int>{1}))) == 0);
  CHECK_THROWS_AS(inverse(a), SingularError);
}

TEST_CASE("vanishing K before step N pads the polynomial") {
  // Full mode, N = 4: K_3 = A (2 - 2e1) = 0 while M_2 != 0.
  const MV a = mv(Signature(1, 1), {{one, q(1)}, {bl({1}), q(1)}});
  const auto r = fvs_run(a, StepMode::full);
  CHECK(r.steps == 4);
  CHECK(r.steps_run == 3);
  CHECK(r.singular);
  CHECK(r.coeffs == ints({-4, 4, 0, 0}));
  // Oracle: det(vI - pi(A)) over the full 4-dimensional basis.
  const auto m = pi(a, ExtendedBasis::full(a.signature()));
  Rng rng(7);
  for (int k = 0; k < 5; ++k) {
    const Rational v = random_rational(rng, 9, 5);
    CHECK(poly_eval(char_poly(a, StepMode::full), v) == bareiss_det(shifted_negation(m, v)));
  }

  const MV zero(Signature(1, 0));
  CHECK(char_poly(zero, StepMode::bott) == ints({1, 0, 0}));
  CHECK(fvs_run(zero, StepMode::bott).singular);

  // Nilpotent: (e1 + e12)^2 = 0 in Cl(2,0).
  const MV nil = mv(Signature(2, 0), {{bl({1}), q(1)}, {bl({1, 2}), q(1)}});
  CHECK(char_poly(nil, StepMode::full) == ints({1, 0, 0, 0, 0}));
}

TEST_CASE("char_poly examples") {
  const MV a = cl25_example();
  CHECK(char_poly(a, StepMode::span_reduced) == ints({1, -4, 48, -88, 484}));
  CHECK(char_poly(a, StepMode::span_reduced) == poly_pow(ints({1, -2, 22}), 2));
  CHECK(char_poly(a, StepMode::span_full) == poly_pow(ints({1, -2, 22}), 8));
  CHECK(format_polynomial(char_poly(a, StepMode::span_reduced)) == "v^4 - 4*v^3 + 48*v^2 - 88*v + 484");
}

TEST_CASE("rep_determinant examples") {
  CHECK(rep_determinant(cl25_example(), StepMode::span_reduced) == 484);
  CHECK(rep_determinant(MV::scalar(Signature(2, 0), q(1)), StepMode::span_reduced) == 1);
}

TEST_CASE("two-generator closed forms at (2,1,1,1)") {
  const MV expected = quad(Signature(2, 0), q(2, 3), q(-1, 3), q(-1, 3), q(-1, 3));
  CHECK(inverse(quad(Signature(2, 0), q(2), q(1), q(1), q(1))) == expected);
  CHECK(inverse(quad(Signature(0, 2), q(2), q(1), q(1), q(1))) ==
        quad(Signature(0, 2), q(2, 7), q(-1, 7), q(-1, 7), q(-1, 7)));
  CHECK(inverse(quad(Signature(1, 1), q(2), q(1), q(1), q(1))) ==
        quad(Signature(1, 1), q(-2, -3), q(1, -3), q(1, -3), q(1, -3)));
  CHECK(char_poly(quad(Signature(2, 0), q(2), q(1), q(1), q(1)), StepMode::span_reduced) == ints({1, -4, 3}));
}

TEST_CASE("inverse correctness and mode independence on random inputs") {
  Rng rng(0xf00d);
  for (const auto& sig : signatures_up_to(5)) {
    for (int k = 0; k < 30; ++k) {
      const MV a = random_multivector(rng, sig, 6);
      const auto reduced = fvs_run(a, StepMode::span_reduced);
      const auto bott = fvs_run(a, StepMode::bott);
      const auto full = fvs_run(a, StepMode::span_full);
      CHECK(reduced.singular == bott.singular);
      CHECK(reduced.singular == full.singular);
      if (reduced.inverse) {
        const MV one_mv = MV::scalar(sig, q(1));
        CHECK(a * *reduced.inverse == one_mv);
        CHECK(*reduced.inverse * a == one_mv);
        CHECK(*bott.inverse == *reduced.inverse);
        CHECK(*full.inverse == *reduced.inverse);
      }
    }
  }
}

TEST_CASE("char_poly over the span equals det(vI - pi(A))") {
  Rng rng(0xabc);
  for (const auto& sig : signatures_up_to(4)) {
    for (int k = 0; k < 12; ++k) {
      const MV a = random_multivector(rng, sig, 6);
      const MulTable t{ExtendedBasis(sig, effective_span_mask(a))};
      const auto m = pi(a, t);
      const Poly p = char_poly(a, StepMode::span_full);
      REQUIRE(p.size() == t.dim() + 1);
      for (int j = 0; j < 4; ++j) {
        const Rational v = random_rational(rng, 7, 5);
        CHECK(poly_eval(p, v) == bareiss_det(shifted_negation(m, v)));
      }
      CHECK(fvs_run(a, StepMode::span_reduced).singular == (bareiss_det(m) == 0));
    }
  }
}

TEST_CASE("span-full polynomial is a power of the reduced one, p+q <= 5") {
  Rng rng(0x1234);
  for (const auto& sig : signatures_up_to(5)) {
    for (int k = 0; k < 8; ++k) {
      const MV a = random_multivector(rng, sig, 5);
      const Poly reduced = char_poly(a, StepMode::span_reduced);
      const Poly full = char_poly(a, StepMode::span_full);
      const unsigned exponent = static_cast<unsigned>((full.size() - 1) / (reduced.size() - 1));
      CHECK(full == poly_pow(reduced, exponent));
    }
  }
}

TEST_CASE("binary64 recursion") {
  Rng rng(0xf1047);
  int checked = 0;
  for (const auto& sig : signatures_up_to(4)) {
    for (int k = 0; k < 20; ++k) {
      const auto a = random_float_multivector(rng, sig);
      const auto r = fvs_run(a, StepMode::span_reduced);
      if (r.singular || std::fabs(r.coeffs.back()) <= 1e-6) continue;
      const auto& inv = *r.inverse;
      const auto residual = a * inv - Multivector<double>::scalar(sig, 1.0);
      CHECK(max_norm(residual) <= 1e-9 * max_norm(a) * max_norm(inv));
      ++checked;
    }
  }
  CHECK(checked > 100);

  // Float and exact agree on the Cl(2,5) example.
  const auto f = fvs_run(to_float(cl25_example()), StepMode::span_reduced);
  CHECK(f.coeffs == std::vector<double>{-4, 48, -88, 484});
  CHECK(fvs_run(to_float(MV(Signature(1, 1)).with(one, q(1)).with(bl({1}), q(1))), StepMode::span_reduced).singular);
}
