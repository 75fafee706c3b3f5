#include "stevin/decimal.hpp"

#include "stevin/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace stevin {

Rational StevinDigits::value() const {
  Integer scaled = integer_part;
  for (auto d : digits) scaled = scaled * 10 + d;
  Rational v(scaled, pow10(digits.size()));
  return negative ? Rational(-v) : v;
}

std::string StevinDigits::to_string() const {
  std::string out;
  if (negative) out += '-';
  out += integer_part.str();
  if (!digits.empty()) {
    out += '.';
    for (auto d : digits) out += static_cast<char>('0' + d);
  }
  return out;
}

StevinDigits to_decimal(const Rational& q, std::size_t n) {
  StevinDigits out;
  out.negative = q < 0;
  Integer num = abs(numerator_of(q));
  const Integer den = denominator_of(q);
  out.integer_part = num / den;
  Integer rem = num % den;
  out.digits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rem *= 10;
    out.digits.push_back(static_cast<std::uint8_t>(rem / den));
    rem %= den;
  }
  out.exact = rem == 0;
  return out;
}

// ---------------------------------------------------------------------------

DecimalEnclosure::DecimalEnclosure(std::size_t scale, Integer low, Integer high)
    : scale_(scale), low_(std::move(low)), high_(std::move(high)) {
  if (low_ > high_) throw std::invalid_argument("DecimalEnclosure: low > high");
}

DecimalEnclosure DecimalEnclosure::around(const Rational& lo, const Rational& hi,
                                          std::size_t scale) {
  const Integer unit = pow10(scale);
  return {scale, floor_of(lo * unit), ceil_of(hi * unit)};
}

DecimalEnclosure DecimalEnclosure::parse(const std::string& literal) {
  auto dot = literal.find('.');
  std::size_t scale = dot == std::string::npos ? 0 : literal.size() - dot - 1;
  Rational v = parse_rational(literal);
  return exact(scale, numerator_of(v * pow10(scale)));
}

Rational DecimalEnclosure::lower() const { return Rational(low_, pow10(scale_)); }
Rational DecimalEnclosure::upper() const { return Rational(high_, pow10(scale_)); }
Rational DecimalEnclosure::width() const { return Rational(high_ - low_, pow10(scale_)); }

namespace {

// Truncation toward zero of value * 10^-from_scale to `to_scale` digits,
// returned as an integer at `to_scale`.
Integer truncate_to(const Integer& value, std::size_t from_scale, std::size_t to_scale) {
  Integer divisor = pow10(from_scale - to_scale);
  return value / divisor;  // cpp_int division truncates toward zero
}

}  // namespace

std::size_t DecimalEnclosure::guaranteed_digits() const {
  std::size_t d = 0;
  while (d < scale_ && truncate_to(low_, scale_, d + 1) == truncate_to(high_, scale_, d + 1)) ++d;
  return d;
}

bool DecimalEnclosure::integer_part_known() const {
  return truncate_to(low_, scale_, 0) == truncate_to(high_, scale_, 0);
}

std::string DecimalEnclosure::to_string() const {
  return "[" + to_decimal(lower(), scale_).to_string() + ", " +
         to_decimal(upper(), scale_).to_string() + "]";
}

DecimalEnclosure enclosure_add(const DecimalEnclosure& x, const DecimalEnclosure& y) {
  const std::size_t scale = std::max(x.scale(), y.scale());
  return DecimalEnclosure::around(x.lower() + y.lower(), x.upper() + y.upper(), scale);
}

DecimalEnclosure enclosure_mul(const DecimalEnclosure& x, const DecimalEnclosure& y) {
  const std::size_t scale = std::max(x.scale(), y.scale());
  const Rational products[] = {x.lower() * y.lower(), x.lower() * y.upper(),
                               x.upper() * y.lower(), x.upper() * y.upper()};
  auto [lo, hi] = std::minmax_element(std::begin(products), std::end(products));
  return DecimalEnclosure::around(*lo, *hi, scale);
}

}  // namespace stevin
