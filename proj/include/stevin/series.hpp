#pragma once

#include "stevin/exact.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stevin {

struct SeriesTerm {
  Rational exponent;
  Rational coefficient;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

// A finite sum of c * i^e in a base infinitesimal i, with rational exponents,
// plus an optional truncation T meaning "+ O(i^T)": terms at exponents >= T
// are unknown. Without a truncation the value is exact.
class SeriesNumber {
 public:
  SeriesNumber() = default;
  // Sorts, merges equal exponents, drops zero coefficients and every term at
  // or above the truncation.
  SeriesNumber(std::vector<SeriesTerm> terms, std::optional<Rational> truncation = std::nullopt);

  static SeriesNumber from_rational(const Rational& q);
  static SeriesNumber base_i();
  static SeriesNumber monomial(const Rational& coefficient, const Rational& exponent);

  const std::vector<SeriesTerm>& terms() const noexcept { return terms_; }
  const std::optional<Rational>& truncation() const noexcept { return truncation_; }
  bool is_exact() const noexcept { return !truncation_; }
  bool has_terms() const noexcept { return !terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && !truncation_; }

  const SeriesTerm& leading() const;
  Rational coefficient_at(const Rational& exponent) const;

  // Same value with truncation min(T, current).
  SeriesNumber truncated(const Rational& t) const;

  friend SeriesNumber operator+(const SeriesNumber& x, const SeriesNumber& y);
  friend SeriesNumber operator-(const SeriesNumber& x, const SeriesNumber& y);
  friend SeriesNumber operator*(const SeriesNumber& x, const SeriesNumber& y);
  SeriesNumber operator-() const;

  friend bool operator==(const SeriesNumber&, const SeriesNumber&) = default;

 private:
  std::vector<SeriesTerm> terms_;
  std::optional<Rational> truncation_;
};

// Inverse with relative precision `precision` > 0: x * inv(x) = 1 + O(i^precision).
// An exact monomial inverts exactly. Throws ZeroDivision on a zero series.
SeriesNumber inv(const SeriesNumber& x, const Rational& precision);

// Square root with relative precision `precision`: sqrt(x)^2 = x + O(i^(e + precision))
// where e is the leading exponent. An exact monomial with a square
// coefficient has an exact root. Throws NegativeLeadingCoefficient, or
// IrrationalCoefficient when the leading coefficient is not a rational square.
SeriesNumber sqrt(const SeriesNumber& x, const Rational& precision);

struct OrderValue {
  enum class Kind { Finite, Infinite, UndefinedZero };

  Kind kind = Kind::Finite;
  Rational value;  // Finite only

  static OrderValue finite(const Rational& a) { return {Kind::Finite, a}; }
  static OrderValue infinite() { return {Kind::Infinite, 0}; }
  static OrderValue undefined_zero() { return {Kind::UndefinedZero, 0}; }

  std::string to_string() const;
  friend bool operator==(const OrderValue&, const OrderValue&) = default;
};

// Leading exponent. The exact zero series has no order.
OrderValue order(const SeriesNumber& x);

// Sign of the leading coefficient; 0 only for the exact zero series.
int sign(const SeriesNumber& x);
// x < y in the ordered field (sign of y - x).
bool less(const SeriesNumber& x, const SeriesNumber& y);

// Standard part: the exponent-0 coefficient. Throws Unlimited when a
// negative-exponent term is present.
Rational st(const SeriesNumber& x);

// st((p(x0 + i) - p(x0)) / i), computed in exact series arithmetic.
Rational deriv_at(const Polynomial& p, const Rational& x0);

// Evaluate p at a series argument.
SeriesNumber eval(const Polynomial& p, const SeriesNumber& x);

// Sum of terms c*i^e with rational c and e; "i^(1/2)", "i^(-2)", "5*i^5",
// "1 + i", and an optional "O(i^T)" term for the truncation.
SeriesNumber parse_series(std::string_view text);
std::string to_string(const SeriesNumber& x);

}  // namespace stevin
