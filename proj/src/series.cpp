#include "stevin/series.hpp"

#include "stevin/errors.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <map>

namespace stevin {

namespace {

using detail::Cursor;

// Optional rational where nullopt stands for +infinity.
using Bound = std::optional<Rational>;

Bound min_bound(const Bound& a, const Bound& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Bound add_bound(const Bound& a, const Bound& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Smallest exponent that may carry a nonzero value: the leading exponent,
// else the truncation, else +infinity for the exact zero.
Bound effective_leading(const SeriesNumber& x) {
  if (x.has_terms()) return x.leading().exponent;
  return x.truncation();
}

}  // namespace

SeriesNumber::SeriesNumber(std::vector<SeriesTerm> terms, std::optional<Rational> truncation)
    : truncation_(std::move(truncation)) {
  std::map<Rational, Rational> merged;
  for (auto& t : terms) merged[t.exponent] += t.coefficient;
  for (auto& [e, c] : merged) {
    if (c == 0) continue;
    if (truncation_ && e >= *truncation_) continue;
    terms_.push_back({e, c});
  }
}

SeriesNumber SeriesNumber::from_rational(const Rational& q) {
  return SeriesNumber({{Rational(0), q}});
}

SeriesNumber SeriesNumber::base_i() { return SeriesNumber({{Rational(1), Rational(1)}}); }

SeriesNumber SeriesNumber::monomial(const Rational& coefficient, const Rational& exponent) {
  return SeriesNumber({{exponent, coefficient}});
}

const SeriesTerm& SeriesNumber::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of an empty series");
  return terms_.front();
}

Rational SeriesNumber::coefficient_at(const Rational& exponent) const {
  for (const auto& t : terms_)
    if (t.exponent == exponent) return t.coefficient;
  return 0;
}

SeriesNumber SeriesNumber::truncated(const Rational& t) const {
  return SeriesNumber(terms_, min_bound(truncation_, t));
}

SeriesNumber operator+(const SeriesNumber& x, const SeriesNumber& y) {
  std::vector<SeriesTerm> all = x.terms_;
  all.insert(all.end(), y.terms_.begin(), y.terms_.end());
  return SeriesNumber(std::move(all), min_bound(x.truncation_, y.truncation_));
}

SeriesNumber SeriesNumber::operator-() const {
  SeriesNumber r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

SeriesNumber operator-(const SeriesNumber& x, const SeriesNumber& y) { return x + (-y); }

// (A + O(i^Tx)) (B + O(i^Ty)) = AB + O(i^(Tx + lead B)) + O(i^(Ty + lead A)).
SeriesNumber operator*(const SeriesNumber& x, const SeriesNumber& y) {
  Bound t = min_bound(add_bound(x.truncation_, effective_leading(y)),
                      add_bound(y.truncation_, effective_leading(x)));
  std::vector<SeriesTerm> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : x.terms_)
    for (const auto& b : y.terms_) prod.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
  return SeriesNumber(std::move(prod), std::move(t));
}

namespace {

// x = c * i^e * (1 + u) with u of strictly positive exponents. Returns u
// truncated at the relative precision still available.
struct Normalized {
  Rational coefficient;
  Rational exponent;
  SeriesNumber tail;  // u
  Rational precision;
};

Normalized normalize(const SeriesNumber& x, const Rational& want) {
  const auto& lead = x.leading();
  Rational precision = want;
  if (x.truncation()) precision = std::min(precision, *x.truncation() - lead.exponent);
  std::vector<SeriesTerm> rest;
  for (std::size_t k = 1; k < x.terms().size(); ++k)
    rest.push_back({x.terms()[k].exponent - lead.exponent, x.terms()[k].coefficient / lead.coefficient});
  return {lead.coefficient, lead.exponent, SeriesNumber(std::move(rest), precision), precision};
}

// Sum_k coeff(k) * u^k truncated at `precision`; u has positive exponents so
// the powers die out after finitely many steps.
template <typename CoefficientFn>
SeriesNumber power_series(const SeriesNumber& u, const Rational& precision, CoefficientFn coeff) {
  SeriesNumber acc = SeriesNumber::from_rational(coeff(0)).truncated(precision);
  SeriesNumber power = SeriesNumber::from_rational(1).truncated(precision);
  for (std::size_t k = 1;; ++k) {
    power = (power * u).truncated(precision);
    if (!power.has_terms()) break;
    acc = acc + SeriesNumber::from_rational(coeff(k)) * power;
  }
  return acc.truncated(precision);
}

SeriesNumber scale_shift(const SeriesNumber& s, const Rational& c, const Rational& shift) {
  std::vector<SeriesTerm> out;
  for (const auto& t : s.terms()) out.push_back({t.exponent + shift, t.coefficient * c});
  std::optional<Rational> trunc;
  if (s.truncation()) trunc = *s.truncation() + shift;
  return SeriesNumber(std::move(out), trunc);
}

std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

SeriesNumber inv(const SeriesNumber& x, const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  if (!x.has_terms()) throw ZeroDivision("inverse of a zero series");
  const auto& lead = x.leading();
  if (x.is_exact() && x.terms().size() == 1)
    return SeriesNumber::monomial(1 / lead.coefficient, -lead.exponent);

  Normalized n = normalize(x, precision);
  SeriesNumber neg_u = -n.tail;
  SeriesNumber geometric = power_series(neg_u, n.precision, [](std::size_t) { return Rational(1); });
  return scale_shift(geometric, 1 / n.coefficient, -n.exponent);
}

SeriesNumber sqrt(const SeriesNumber& x, const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  if (!x.has_terms()) {
    if (x.is_exact()) return x;
    return SeriesNumber({}, *x.truncation() / 2);
  }
  const auto& lead = x.leading();
  if (lead.coefficient < 0)
    throw NegativeLeadingCoefficient("square root of a series with negative leading coefficient");
  auto num = exact_isqrt(numerator_of(lead.coefficient));
  auto den = exact_isqrt(denominator_of(lead.coefficient));
  if (!num || !den)
    throw IrrationalCoefficient("leading coefficient " + to_string(lead.coefficient) +
                                " is not the square of a rational");
  const Rational root_c(*num, *den);
  if (x.is_exact() && x.terms().size() == 1) return SeriesNumber::monomial(root_c, lead.exponent / 2);

  Normalized n = normalize(x, precision);
  // binom(1/2, k) built incrementally.
  std::vector<Rational> binom{1};
  auto coeff = [&binom](std::size_t k) {
    while (binom.size() <= k) {
      const auto j = static_cast<long>(binom.size());
      binom.push_back(binom.back() * (Rational(1, 2) - (j - 1)) / j);
    }
    return binom[k];
  };
  SeriesNumber root = power_series(n.tail, n.precision, coeff);
  return scale_shift(root, root_c, n.exponent / 2);
}

std::string OrderValue::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return "FINITE(" + stevin::to_string(value) + ")";
    case Kind::Infinite:
      return "ORDER_INFINITE";
    case Kind::UndefinedZero:
      return "ORDER_UNDEFINED_ZERO";
  }
  return {};
}

OrderValue order(const SeriesNumber& x) {
  if (x.has_terms()) return OrderValue::finite(x.leading().exponent);
  if (x.is_exact()) return OrderValue::undefined_zero();
  throw InsufficientPrecision("order of O(i^" + to_string(*x.truncation()) + ") is unknown");
}

int sign(const SeriesNumber& x) {
  if (x.has_terms()) return sign_of(x.leading().coefficient);
  if (x.is_exact()) return 0;
  throw InsufficientPrecision("sign of a truncated zero series is unknown");
}

bool less(const SeriesNumber& x, const SeriesNumber& y) { return sign(y - x) > 0; }

Rational st(const SeriesNumber& x) {
  if (x.has_terms() && x.leading().exponent < 0)
    throw Unlimited("series has a term of negative order");
  if (x.truncation() && *x.truncation() <= 0)
    throw InsufficientPrecision("constant term lies beyond the truncation");
  return x.coefficient_at(0);
}

SeriesNumber eval(const Polynomial& p, const SeriesNumber& x) {
  SeriesNumber acc;
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + SeriesNumber::from_rational(*it);
  return acc;
}

Rational deriv_at(const Polynomial& p, const Rational& x0) {
  const SeriesNumber h = SeriesNumber::base_i();
  const SeriesNumber dy = eval(p, SeriesNumber::from_rational(x0) + h) - SeriesNumber::from_rational(p(x0));
  return st(dy * inv(h, 1));
}

// ---------------------------------------------------------------------------
// Text

namespace {

Rational read_exponent(Cursor& cur) {
  if (cur.accept('(')) {
    bool neg = cur.accept('-');
    Rational e = detail::read_unsigned_rational(cur);
    cur.expect(')');
    return neg ? Rational(-e) : e;
  }
  bool neg = cur.accept('-');
  std::string digits = cur.digits();
  if (digits.empty()) cur.fail("expected an exponent");
  Rational e{detail::decimal_integer(digits)};
  return neg ? Rational(-e) : e;
}

}  // namespace

SeriesNumber parse_series(std::string_view text) {
  Cursor cur(text);
  std::vector<SeriesTerm> terms;
  std::optional<Rational> truncation;
  bool first = true;
  while (first || !cur.at_end()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    if (cur.peek() == 'O') {
      if (negative) cur.fail("O-term cannot be negated");
      cur.accept('O');
      cur.expect('(');
      cur.expect('i');
      Rational t = 1;
      if (cur.accept('^')) t = read_exponent(cur);
      cur.expect(')');
      truncation = truncation ? std::min(*truncation, t) : t;
      continue;
    }

    std::size_t start = cur.pos();
    Rational coeff = 1;
    bool has_coeff = false;
    if (detail::is_digit(cur.peek())) {
      coeff = detail::read_unsigned_rational(cur);
      has_coeff = true;
    }
    if (has_coeff) cur.accept('*');
    Rational exponent = 0;
    if (cur.peek() == 'i') {
      cur.accept('i');
      exponent = 1;
      if (cur.accept('^')) exponent = read_exponent(cur);
    } else if (detail::is_alpha(cur.peek())) {
      cur.fail(std::string("unsupported symbol '") + cur.peek() + "'");
    } else if (!has_coeff) {
      throw ParseError("expected a term", start);
    }
    terms.push_back({exponent, negative ? Rational(-coeff) : coeff});
  }
  return SeriesNumber(std::move(terms), truncation);
}

namespace {

std::string exponent_text(const Rational& e) {
  if (e > 0 && is_integer(e)) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

}  // namespace

std::string to_string(const SeriesNumber& x) {
  std::string out;
  for (const auto& t : x.terms()) {
    if (out.empty()) {
      if (t.coefficient < 0) out += "-";
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
    }
    Rational mag = abs(t.coefficient);
    if (t.exponent == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "i";
    if (t.exponent != 1) out += exponent_text(t.exponent);
  }
  if (x.truncation()) {
    std::string o = "O(i";
    if (*x.truncation() != 1) o += exponent_text(*x.truncation());
    o += ")";
    out += out.empty() ? o : " + " + o;
  }
  return out.empty() ? "0" : out;
}

}  // namespace stevin
