#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stevin/errors.hpp"
#include "stevin/exact.hpp"

#include <random>

using namespace stevin;

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 50) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(rng)) / den(rng);
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng, 20);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("rationals stay normalized") {
  const Rational q = parse_rational("6/8");
  CHECK(numerator_of(q) == 3);
  CHECK(denominator_of(q) == 4);
  CHECK(parse_rational("-0") == 0);
  CHECK(denominator_of(parse_rational("0")) == 1);
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::exception);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("floor, ceil and powers") {
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(ceil_of(Rational(6, 2)) == 3);
  CHECK(pow10(3) == 1000);
  CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_int(Rational(5), 0) == 1);
  CHECK(is_integer(Rational(4, 2)));
  CHECK(sign_of(Rational(-1, 9)) == -1);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("poly_eval examples") {
  const Polynomial p{-2, 0, 1};
  CHECK(p(Rational(3, 2)) == Rational(1, 4));
  CHECK(Polynomial()(Rational(17, 3)) == 0);
  CHECK(parse_polynomial("x^3 - 2*x - 5")(2) == -1);
}

TEST_CASE("poly_parse examples") {
  CHECK(parse_polynomial("x^2 - 2").coefficients() == std::vector<Rational>{-2, 0, 1});
  CHECK(parse_polynomial("x^3 - 2*x - 5").coefficients() == std::vector<Rational>{-5, -2, 0, 1});
  CHECK(parse_polynomial("3/2").coefficients() == std::vector<Rational>{Rational(3, 2)});
  CHECK(parse_polynomial("x^2-2") == parse_polynomial(" x ^ 2 - 2 "));
  CHECK(parse_polynomial("-x") == Polynomial{0, -1});
  CHECK(parse_polynomial("2x + 0.5*x^2") == Polynomial{0, 2, Rational(1, 2)});
  CHECK(parse_polynomial("x - x").is_zero());
  CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("poly_parse errors carry a position") {
  try {
    parse_polynomial("x^2 + y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x^1.5"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 3"), ParseError);
}

TEST_CASE("printing") {
  CHECK(to_string(Polynomial{-5, -2, 0, 1}) == "x^3 - 2*x - 5");
  CHECK(to_string(Polynomial{0, 0, Rational(3, 2)}) == "3/2*x^2");
  CHECK(to_string(Polynomial()) == "0");
  CHECK(to_string(Polynomial{Rational(-1, 2), -1}) == "-x - 1/2");
}

TEST_CASE("sign_change examples") {
  const Polynomial p{-2, 0, 1};
  CHECK(sign_change(p, 1, 2));
  CHECK_FALSE(sign_change(p, 2, 3));
  CHECK_FALSE(sign_change(Polynomial{Rational(-1, 2), 1}, 0, Rational(1, 2)));
}

TEST_CASE("division and root bound") {
  const Polynomial a = parse_polynomial("x^3 - 2*x - 5");
  const Polynomial b = parse_polynomial("x - 2");
  const PolyDivision d = divide(a, b);
  CHECK(d.quotient * b + d.remainder == a);
  CHECK(d.remainder == Polynomial::constant(-1));
  CHECK_THROWS_AS(divide(a, Polynomial()), ZeroDivision);
  // Roots of x^2 - 2 are inside the bound.
  CHECK(cauchy_root_bound(Polynomial{-2, 0, 1}) >= Rational(3, 2));
}

TEST_CASE("property: evaluation respects algebra") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_polynomial(rng, 6);
    const Polynomial q = random_polynomial(rng, 6);
    const Rational x = random_rational(rng, 9);
    CHECK((p + q)(x) == p(x) + q(x));
    CHECK((p - q)(x) == p(x) - q(x));
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK(p.compose(q)(x) == p(q(x)));
  }
}

TEST_CASE("property: parse/print round trip") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = random_polynomial(rng, 8);
    const std::string text = to_string(p);
    CHECK(parse_polynomial(text) == p);
    CHECK(to_string(parse_polynomial(text)) == text);
  }
}

TEST_CASE("property: root bound encloses rational roots") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const Rational r = random_rational(rng, 30);
    const Polynomial p = Polynomial{-r, 1} * random_polynomial(rng, 3);
    if (p.is_zero()) continue;
    CHECK(abs(r) <= cauchy_root_bound(p));
  }
}
