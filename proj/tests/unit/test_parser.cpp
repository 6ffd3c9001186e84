#include <doctest.h>

#include <string>

#include "clifford/parser.hpp"
#include "generators.hpp"

using namespace clifford;
using namespace clifford::testing;

namespace {

using MV = Multivector<Rational>;

Blade bl(std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return Blade::from_indices(v);
}

Rational q(long num, long den = 1) { return ScalarTraits<Rational>::from_ratio(num, den); }

std::size_t error_offset(std::string_view text, const Signature& sig) {
  try {
    parse<Rational>(text, sig);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  const Signature cl25(2, 5);
  const MV a = parse<Rational>("1 - 2*e15 + 5*e134", cl25);
  CHECK(a.size() == 3);
  CHECK(a.coefficient(Blade::unit()) == 1);
  CHECK(a.coefficient(bl({1, 5})) == -2);
  CHECK(a.coefficient(bl({1, 3, 4})) == 5);

  CHECK(parse<Rational>("0", cl25).is_zero());
  CHECK(parse<Rational>("3/2*e[1,2]", Signature(1, 1)) == MV(Signature(1, 1)).with(bl({1, 2}), q(3, 2)));
  CHECK(parse<Rational>("  -e1+e1 ", cl25).is_zero());
  CHECK(parse<Rational>("e[ 3 , 10 ]", Signature(5, 5)).coefficient(bl({3, 10})) == 1);
  CHECK(parse<Rational>("4/6", cl25) == MV::scalar(cl25, q(2, 3)));
  CHECK(parse<Rational>("123456789012345678901234567890", cl25).coefficient(Blade::unit()) ==
        Rational("123456789012345678901234567890"));
}

TEST_CASE("worked-example inputs parse to the intended multivectors") {
  const Signature cl52(5, 2);
  const MV a = parse<Rational>("1 - e2 + e1234567", cl52);
  CHECK(a == MV(cl52).with(Blade::unit(), q(1)).with(bl({2}), q(-1)).with(Blade{cl52.full_mask()}, q(1)));

  for (const auto& sig : {Signature(2, 0), Signature(1, 1), Signature(0, 2)}) {
    const MV b = parse<Rational>("2 + e1 + e2 + e12", sig);
    CHECK(b == MV(sig).with(Blade::unit(), q(2)).with(bl({1}), q(1)).with(bl({2}), q(1)).with(bl({1, 2}), q(1)));
  }
}

TEST_CASE("parse errors carry the offending position") {
  const Signature cl25(2, 5);
  CHECK(error_offset("", cl25) == 0);
  CHECK(error_offset("1 +", cl25) == 3);
  CHECK(error_offset("1 + x", cl25) == 4);
  CHECK(error_offset("e21", cl25) == 2);      // descending
  CHECK(error_offset("e11", cl25) == 2);      // repeated
  CHECK(error_offset("2*e18", cl25) == 4);    // index 8 > 7
  CHECK(error_offset("e0", cl25) == 1);
  CHECK(error_offset("e[1,1]", cl25) == 4);
  CHECK(error_offset("e[2,1]", cl25) == 4);
  CHECK(error_offset("e[1,3", cl25) == 5);
  CHECK(error_offset("1.5", cl25) == 1);      // decimal in rational mode
  CHECK(error_offset("3/0", cl25) == 2);
  CHECK(error_offset("2 e1", cl25) == 2);
  CHECK(error_offset("2*", cl25) == 2);
  CHECK(error_offset("1 + -2", cl25) == 4);

  try {
    parse<Rational>("1 + e19", cl25);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(e.found() == "9");
    CHECK(e.expected().find("1..7") != std::string::npos);
  }
}

TEST_CASE("every out-of-range or repeated index is rejected") {
  Rng rng(77);
  for (const auto& sig : signatures_up_to(6)) {
    for (int k = 0; k < 30; ++k) {
      const int bad = rng.uniform(sig.n() + 1, 9);
      const int i = rng.uniform(1, sig.n());
      CHECK_THROWS_AS(parse<Rational>("1 + e" + std::to_string(bad), sig), ParseError);
      CHECK_THROWS_AS(parse<Rational>("e[" + std::to_string(i) + "," + std::to_string(i) + "]", sig), ParseError);
      CHECK_THROWS_AS(parse<Rational>("2*e" + std::to_string(i) + std::to_string(i), sig), ParseError);
    }
  }
}

TEST_CASE("binary64 literals") {
  const Signature sig(2, 0);
  const auto a = parse<double>("0.5 - 1.25*e12 + 1e-3*e1 + 3/4*e2", sig);
  CHECK(a.coefficient(Blade::unit()) == 0.5);
  CHECK(a.coefficient(bl({1, 2})) == -1.25);
  CHECK(a.coefficient(bl({1})) == 0.001);
  CHECK(a.coefficient(bl({2})) == 0.75);
  CHECK_THROWS_AS(parse<double>("1.", sig), ParseError);
}

TEST_CASE("format examples") {
  const Signature cl25(2, 5);
  CHECK(format(MV(cl25)) == "0");
  CHECK(format(MV(cl25).with(Blade::unit(), q(1)).with(bl({1, 5}), q(2)).with(bl({1, 3, 4}), q(-5))) ==
        "1 + 2*e15 - 5*e134");
  CHECK(format(MV(cl25).with(bl({1, 2}), q(1))) == "e12");
  CHECK(format(MV(cl25).with(bl({1, 2}), q(-1))) == "-e12");
  CHECK(format(MV(cl25).with(Blade::unit(), q(-5, 22))) == "-5/22");
  CHECK(format(MV(Signature(6, 6)).with(bl({2, 11}), q(3))) == "3*e[2,11]");
  CHECK(parse_scalar<Rational>("-5/22") == q(-5, 22));
  CHECK(parse_scalar<double>("0.25") == 0.25);
}

TEST_CASE("parse(format(a)) = a") {
  Rng rng(0x9a55e);
  int checked = 0;
  for (const auto& sig : signatures_up_to(12)) {
    for (int k = 0; k < 15; ++k, ++checked) {
      const MV a = random_multivector(rng, sig, 10);
      REQUIRE(parse<Rational>(format(a), sig) == a);
      const auto f = to_float(a);
      REQUIRE(parse<double>(format(f), sig) == f);
    }
  }
  CHECK(checked >= 1000);
}
