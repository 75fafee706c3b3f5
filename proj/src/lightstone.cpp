#include "stevin/lightstone.hpp"

#include "stevin/errors.hpp"

namespace stevin {

std::optional<std::uint8_t> repeating_digit(const Rational& q) {
  const Rational a = abs(q);
  const Rational frac = a - Rational(floor_of(a));
  Integer den = denominator_of(frac);
  std::size_t twos = 0;
  std::size_t fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den == 1) return 0;
  if (9 % den != 0) return std::nullopt;
  const std::size_t pre_period = std::max(twos, fives);
  return to_decimal(frac, pre_period + 1).digits.back();
}

std::string InfinitePattern::describe() const {
  switch (kind) {
    case Kind::Constant:
      return "digit " + std::to_string(first) + " at every unlimited rank";
    case Kind::UpToHThen:
      return "digit " + std::to_string(first) + " at unlimited ranks up to H, then " +
             std::to_string(second);
    case Kind::Unknown:
      return "unlimited-rank digits unknown";
  }
  return {};
}

std::string LightstoneRendering::to_string() const {
  std::string out = negative ? "-" : "";
  out += integer_part.str();
  out += '.';
  for (auto d : finite_digits) out += static_cast<char>('0' + d);
  out += "…;… (" + pattern.describe() + ")";
  return out;
}

namespace {

struct ClosedForm {
  Rational r;  // standard part
  Rational s;  // u = r - s * 10^-n

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

std::optional<ClosedForm> closed_form(const NtFraction& f) {
  if (f.kind() == NtFraction::Kind::Unlimited) return std::nullopt;
  const Rational r = f.limit();
  const NtPolynomial rest = f.num - NtPolynomial::constant(r) * f.den;
  if (rest.is_zero()) return ClosedForm{r, 0};
  // rest must be c * t * den.
  const auto lr = rest.lead();
  const auto ld = f.den.lead();
  if (lr.t_power != ld.t_power + 1 || lr.n_power != ld.n_power) return std::nullopt;
  const Rational c = lr.coefficient / ld.coefficient;
  if (!(rest - NtPolynomial::constant(c) * NtPolynomial::t() * f.den).is_zero()) return std::nullopt;
  return ClosedForm{r, -c};
}

InfinitePattern pattern_of(const ClosedForm& form) {
  InfinitePattern p;
  if (form.s == 0) {
    if (auto d = repeating_digit(form.r)) {
      p.kind = InfinitePattern::Kind::Constant;
      p.first = *d;
    }
    return p;
  }
  // r = I + d1/9 and c = d1/9 - s in [0, 1) with c = d2/9: then
  // 10^H (r - s 10^-H) = I d1...d1 (H digits) + c, so ranks <= H carry d1
  // and ranks > H carry the expansion of c. An integer r also reads as
  // (r - 1) + 9/9, which is the only fit when s > 0.
  const Rational frac = form.r - Rational(floor_of(form.r));
  if (!is_integer(frac * 9)) return p;
  std::vector<Rational> d1_candidates{frac * 9};
  if (frac == 0) d1_candidates.push_back(9);
  for (const Rational& d1 : d1_candidates) {
    const Rational c = d1 / 9 - form.s;
    if (c < 0 || c >= 1 || !is_integer(c * 9)) continue;
    p.kind = InfinitePattern::Kind::UpToHThen;
    p.first = static_cast<std::uint8_t>(static_cast<int>(numerator_of(d1)));
    p.second = static_cast<std::uint8_t>(static_cast<int>(numerator_of(c * 9)));
    return p;
  }
  return p;
}

}  // namespace

LightstoneRendering lightstone_render(const HyperNumber& u, std::size_t k, const FilterOracle& oracle) {
  if (classify(u, oracle).kind == Classification::Kind::Unlimited)
    throw NotFinite(u.to_string() + " is unlimited");

  const auto even = closed_form(u.form(0));
  const auto odd = closed_form(u.form(1));
  std::optional<ClosedForm> chosen;
  if (even && odd && *even == *odd) {
    chosen = even;
  } else if (oracle.kind() == FilterOracle::Kind::ProfinitePoint) {
    const std::int64_t z = oracle.point_value();
    chosen = ((z % 2) + 2) % 2 == 0 ? even : odd;
  } else if (even && odd) {
    throw Undecided("parity classes of " + u.to_string() + " differ under " + oracle.to_string());
  }
  if (!chosen)
    throw UnsupportedForm(u.to_string() + " is neither a constant nor of the form r - s*10^(-n)");

  ClosedForm form = *chosen;
  LightstoneRendering out;
  out.negative = form.r < 0 || (form.r == 0 && form.s > 0);
  if (out.negative) form = {-form.r, -form.s};
  const StevinDigits digits = to_decimal(form.r, k);
  out.integer_part = digits.integer_part;
  out.finite_digits = digits.digits;
  out.pattern = pattern_of(form);
  return out;
}

}  // namespace stevin
