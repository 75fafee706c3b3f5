#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace stevin {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer pow10(std::size_t k);
Rational pow_int(const Rational& base, long exponent);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);
int sign_of(const Rational& q);

// Accepts "7", "-3/4", "0.25", "-1.5". Decimal literals are converted exactly.
Rational parse_rational(std::string_view text);
// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Dense univariate polynomial with rational coefficients; coefficient i
// multiplies x^i. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial x() { return monomial(1, 1); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  // Composition p(q(x)).
  Polynomial compose(const Polynomial& inner) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division over Q: a = q*b + r with deg r < deg b. Throws
// ZeroDivision when b is the zero polynomial.
struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divide(const Polynomial& a, const Polynomial& b);

// Every real root of p lies in [-bound, bound]. Zero polynomial -> 0.
Rational cauchy_root_bound(const Polynomial& p);

// Parse the polynomial grammar:
//   poly  := term (("+"|"-") term)*      (a leading "-" is allowed)
//   term  := coeff? ("*"? "x" ("^" nat)?)?
//   coeff := nat | nat "/" nat | nat "." digits
// Throws ParseError carrying the offending position.
Polynomial parse_polynomial(std::string_view text);

// Canonical text, highest power first, e.g. "x^3 - 2*x - 5". Parses back
// to the same polynomial.
std::string to_string(const Polynomial& p);

// True iff p(a) * p(b) < 0. An exact zero at either endpoint gives false.
bool sign_change(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace stevin
