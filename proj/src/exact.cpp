#include "stevin/exact.hpp"

#include "stevin/errors.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stevin {

using detail::Cursor;
using detail::is_digit;
using detail::read_unsigned_rational;

Integer pow10(std::size_t k) {
  Integer r = 1;
  static const Integer ten_to_18 = Integer("1000000000000000000");
  while (k >= 18) {
    r *= ten_to_18;
    k -= 18;
  }
  while (k-- > 0) r *= 10;
  return r;
}

Rational pow_int(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw ZeroDivision("zero raised to a negative power");
    return pow_int(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

Integer floor_of(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) quot -= 1;
  return quot;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  bool negative = false;
  if (cur.accept('-')) {
    negative = true;
  } else {
    cur.accept('+');
  }
  Rational q = read_unsigned_rational(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator_of(q);
  if (denominator_of(q) != 1) os << '/' << denominator_of(q);
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r(coeffs_);
  for (auto& c : r) c = -c;
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return {};
  std::vector<Rational> r(p.coeffs_);
  for (auto& x : r) x *= c;
  return Polynomial(std::move(r));
}

PolyDivision divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  const Rational lead = b.leading_coefficient();
  if (rem.size() < db + 1) return {Polynomial(), a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational c = rem[k] / lead;
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coefficient(j);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  Rational lead = abs(p.leading_coefficient());
  Rational worst = 0;
  for (std::size_t i = 0; i + 1 < p.coefficients().size(); ++i)
    worst = std::max(worst, Rational(abs(p.coefficients()[i]) / lead));
  return 1 + worst;
}

// ---------------------------------------------------------------------------
// Polynomial text

namespace {

void parse_term(Cursor& cur, bool negative, std::map<std::size_t, Rational>& acc) {
  std::size_t start = cur.pos();
  Rational coeff = 1;
  bool has_coeff = false;
  bool has_x = false;
  std::size_t power = 0;

  if (is_digit(cur.peek())) {
    coeff = read_unsigned_rational(cur);
    has_coeff = true;
  }
  bool star = false;
  if (has_coeff && cur.peek() == '*') {
    cur.accept('*');
    star = true;
  }
  char c = cur.peek();
  if (c == 'x') {
    cur.accept('x');
    has_x = true;
    power = 1;
    if (cur.accept('^')) {
      char e = cur.peek();
      if (e == '-' || e == '(' || e == '.') cur.fail("non-integer exponent");
      std::string digits = cur.digits();
      if (digits.empty()) cur.fail("expected a natural exponent");
      if (cur.peek_raw() == '.' || cur.peek() == '/') cur.fail("non-integer exponent");
      if (digits.size() > 6) cur.fail("exponent too large");
      power = static_cast<std::size_t>(std::stoul(digits));
    }
  } else if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
    cur.fail(std::string("unsupported variable name '") + c + "'");
  } else if (star) {
    cur.fail("expected 'x' after '*'");
  }
  if (!has_coeff && !has_x) throw ParseError("expected a term", start);
  acc[power] += negative ? Rational(-coeff) : coeff;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  Cursor cur(text);
  std::map<std::size_t, Rational> acc;
  bool negative = cur.accept('-');
  parse_term(cur, negative, acc);
  while (!cur.at_end()) {
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      char c = cur.peek();
      if (std::isalpha(static_cast<unsigned char>(c)) != 0 && c != 'x')
        cur.fail(std::string("unsupported variable name '") + c + "'");
      cur.fail("expected '+' or '-'");
    }
    parse_term(cur, negative, acc);
  }
  std::vector<Rational> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (const auto& [power, c] : acc) coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

bool sign_change(const Polynomial& p, const Rational& a, const Rational& b) {
  return sign_of(p(a)) * sign_of(p(b)) < 0;
}

}  // namespace stevin
