#pragma once

#include "stevin/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stevin {

// A finite Stevin decimal: sign, integer part and fractional digits. When
// `exact` is set the value is exactly the decimal shown; otherwise it is a
// truncation toward zero of some longer expansion.
struct StevinDigits {
  bool negative = false;
  Integer integer_part = 0;
  std::vector<std::uint8_t> digits;
  bool exact = false;

  Rational value() const;
  // "1.414213", "-3.142", "0.5", "7" (no point when there are no digits).
  std::string to_string() const;

  friend bool operator==(const StevinDigits&, const StevinDigits&) = default;
};

// Truncation toward zero of q to n fractional digits (long division).
StevinDigits to_decimal(const Rational& q, std::size_t n);

// Closed interval [low * 10^-scale, high * 10^-scale].
class DecimalEnclosure {
 public:
  DecimalEnclosure(std::size_t scale, Integer low, Integer high);
  static DecimalEnclosure exact(std::size_t scale, const Integer& value) {
    return {scale, value, value};
  }
  // Smallest enclosure at `scale` containing [lo, hi] (outward rounding).
  static DecimalEnclosure around(const Rational& lo, const Rational& hi, std::size_t scale);
  // "0.333" style literal, scale = number of fractional digits.
  static DecimalEnclosure parse(const std::string& literal);

  std::size_t scale() const noexcept { return scale_; }
  const Integer& low() const noexcept { return low_; }
  const Integer& high() const noexcept { return high_; }
  Rational lower() const;
  Rational upper() const;
  Rational width() const;
  bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }

  // Number of fractional digits d (capped at scale) such that every point of
  // the enclosure has the same truncation to d digits. 0 also covers the case
  // where even the integer part is not determined; see integer_part_known().
  std::size_t guaranteed_digits() const;
  bool integer_part_known() const;

  std::string to_string() const;

  friend bool operator==(const DecimalEnclosure&, const DecimalEnclosure&) = default;

 private:
  std::size_t scale_;
  Integer low_;
  Integer high_;
};

// Results use the finer of the two operand scales, endpoints rounded outward.
DecimalEnclosure enclosure_add(const DecimalEnclosure& x, const DecimalEnclosure& y);
DecimalEnclosure enclosure_mul(const DecimalEnclosure& x, const DecimalEnclosure& y);

}  // namespace stevin
