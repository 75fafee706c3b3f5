#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stevin/decimal.hpp"

#include <random>

using namespace stevin;

namespace {

// Schoolbook long division, kept separate from to_decimal.
std::string long_division(Integer num, Integer den, std::size_t n) {
  std::string out;
  if (num < 0) {
    num = -num;
    out = "-";
  }
  out += (num / den).str();
  Integer rem = num % den;
  if (n > 0) out += '.';
  for (std::size_t k = 0; k < n; ++k) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

}  // namespace

TEST_CASE("to_decimal examples") {
  const StevinDigits third = to_decimal(Rational(1, 3), 5);
  CHECK(third.to_string() == "0.33333");
  CHECK_FALSE(third.exact);
  const StevinDigits half = to_decimal(Rational(1, 2), 5);
  CHECK(half.to_string() == "0.50000");
  CHECK(half.exact);
  const StevinDigits pi = to_decimal(Rational(-22, 7), 3);
  CHECK(pi.to_string() == "-3.142");
  CHECK(pi.negative);
  CHECK_FALSE(pi.exact);
  CHECK(to_decimal(Rational(7), 0).to_string() == "7");
  CHECK(to_decimal(Rational(-1, 3), 2).to_string() == "-0.33");
  CHECK(to_decimal(Rational(0), 3).to_string() == "0.000");
}

TEST_CASE("property: to_decimal matches long division") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-100000, 100000);
  std::uniform_int_distribution<int> den(1, 997);
  std::uniform_int_distribution<int> len(0, 30);
  for (int k = 0; k < 500; ++k) {
    const Rational q = Rational(num(rng)) / den(rng);
    const std::size_t n = len(rng);
    const StevinDigits d = to_decimal(q, n);
    std::string expect = long_division(numerator_of(q), denominator_of(q), n);
    if (expect.rfind("-0", 0) == 0 && q > -1 && d.to_string().front() != '-') expect.erase(0, 1);
    CHECK(d.to_string() == expect);
    CHECK(d.exact == is_integer(q * Rational(pow10(n))));
    // Truncation toward zero: |q - value| < 10^-n with the same sign.
    CHECK(abs(q - d.value()) < Rational(Integer(1), pow10(n)));
    CHECK(abs(d.value()) <= abs(q));
  }
}

TEST_CASE("enclosure_mul loses digits") {
  const DecimalEnclosure x(3, 333, 334);
  const DecimalEnclosure three = DecimalEnclosure::exact(0, 3);
  const DecimalEnclosure p = enclosure_mul(x, three);
  CHECK(p == DecimalEnclosure(3, 999, 1002));
  CHECK(p.guaranteed_digits() == 0);
  CHECK_FALSE(p.integer_part_known());
  CHECK(p.to_string() == "[0.999, 1.002]");
}

TEST_CASE("enclosure identities") {
  const DecimalEnclosure y(4, 12345, 12350);
  CHECK(enclosure_mul(DecimalEnclosure::exact(0, 1), y) == y);
  const DecimalEnclosure s =
      enclosure_add(DecimalEnclosure::parse("0.50"), DecimalEnclosure::parse("0.25"));
  CHECK(s == DecimalEnclosure(2, 75, 75));
  CHECK(s.width() == 0);
  CHECK(s.guaranteed_digits() == 2);
}

TEST_CASE("enclosure construction") {
  CHECK_THROWS_AS(DecimalEnclosure(2, 5, 4), std::invalid_argument);
  const DecimalEnclosure a = DecimalEnclosure::around(Rational(1, 3), Rational(2, 3), 2);
  CHECK(a == DecimalEnclosure(2, 33, 67));
  CHECK(DecimalEnclosure(2, 141, 142).guaranteed_digits() == 1);
  CHECK(DecimalEnclosure(2, -142, -141).guaranteed_digits() == 1);
  CHECK(DecimalEnclosure(2, -1, 1).guaranteed_digits() == 1);  // all truncate to 0.0
  CHECK(DecimalEnclosure(2, 99, 101).guaranteed_digits() == 0);
}

TEST_CASE("property: enclosure arithmetic is sound") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> lo(-5000, 5000);
  std::uniform_int_distribution<int> w(0, 300);
  std::uniform_int_distribution<int> scale(0, 4);
  std::uniform_int_distribution<int> frac(0, 1000);
  for (int k = 0; k < 400; ++k) {
    const int l1 = lo(rng), l2 = lo(rng);
    const DecimalEnclosure x(scale(rng), l1, l1 + w(rng));
    const DecimalEnclosure y(scale(rng), l2, l2 + w(rng));
    const Rational px = x.lower() + x.width() * Rational(frac(rng), 1000);
    const Rational py = y.lower() + y.width() * Rational(frac(rng), 1000);
    CHECK(enclosure_mul(x, y).contains(px * py));
    CHECK(enclosure_add(x, y).contains(px + py));
    // Guaranteed digits are shared by every point.
    const DecimalEnclosure prod = enclosure_mul(x, y);
    const std::size_t g = prod.guaranteed_digits();
    if (prod.integer_part_known())
      CHECK(to_decimal(px * py, g).value() == to_decimal(prod.lower(), g).value());
  }
}
