#include "stevin/order_estimate.hpp"

#include "stevin/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace stevin {

namespace {

WorkingFloat to_float(const Integer& n) { return WorkingFloat(n.str()); }

WorkingFloat to_float(const Rational& q) {
  return to_float(numerator_of(q)) / to_float(denominator_of(q));
}

WorkingFloat log10_of(const Rational& q) {
  return log10(to_float(numerator_of(q))) - log10(to_float(denominator_of(q)));
}

enum class Trend { Falling, Rising, Flat, Mixed };

// Differences below this are treated as zero; evaluation error at 100
// digits is far smaller.
const WorkingFloat kFlat("1e-60");

Trend tail_trend(const std::vector<WorkingFloat>& samples) {
  const std::size_t from = (samples.size() - 1) / 2;
  bool rising = true;
  bool falling = true;
  bool flat = true;
  for (std::size_t m = from + 1; m < samples.size(); ++m) {
    WorkingFloat d = samples[m] - samples[m - 1];
    rising = rising && d > kFlat;
    falling = falling && d < -kFlat;
    flat = flat && abs(d) <= kFlat;
  }
  if (flat) return Trend::Flat;
  if (rising) return Trend::Rising;
  if (falling) return Trend::Falling;
  return Trend::Mixed;
}

}  // namespace

CatalogFunction CatalogFunction::parse(const std::string& name) {
  if (name == "exp_neg_inv") return exp_neg_inv();
  if (name == "inv_log") return inv_log();
  const std::string prefix = "monomial:";
  if (name.rfind(prefix, 0) == 0) return monomial(parse_rational(name.substr(prefix.size())));
  throw std::invalid_argument("unknown catalog function '" + name + "'");
}

std::string CatalogFunction::name() const {
  switch (kind) {
    case Kind::ExpNegInv:
      return "exp_neg_inv";
    case Kind::InvLog:
      return "inv_log";
    case Kind::Monomial:
      return "monomial:" + to_string(exponent);
  }
  return {};
}

WorkingFloat CatalogFunction::log10_abs_at(const Rational& i) const {
  if (!(i > 0 && i < 1)) throw std::invalid_argument("catalog functions are sampled on (0, 1)");
  switch (kind) {
    case Kind::ExpNegInv: {
      // log10 e^(-1/i) = -(1/i) log10(e)
      static const WorkingFloat log10_e = log10(exp(WorkingFloat(1)));
      return -to_float(Rational(1) / i) * log10_e;
    }
    case Kind::InvLog: {
      // |1 / ln i| = 1 / |ln i|
      static const WorkingFloat ln_10 = log(WorkingFloat(10));
      return -log10(abs(log10_of(i) * ln_10));
    }
    case Kind::Monomial:
      return to_float(exponent) * log10_of(i);
  }
  return 0;
}

OrderEstimate estimate_order_numeric(const CatalogFunction& f, const std::vector<Rational>& probes,
                                     unsigned depth) {
  if (probes.empty()) throw std::invalid_argument("at least one probe exponent is required");
  if (depth < 4) throw std::invalid_argument("depth must be at least 4");

  std::vector<WorkingFloat> log_f;
  for (unsigned m = 1; m <= depth; ++m) log_f.push_back(f.log10_abs_at(Rational(1, pow10(m))));

  std::vector<Rational> below;  // ratio -> 0
  std::vector<Rational> above;  // ratio -> infinity
  std::vector<Rational> exact;  // ratio constant
  for (const Rational& r : probes) {
    // log10 (f(i) / i^r) = log10 f(i) + r*m at i = 10^-m
    std::vector<WorkingFloat> ratio;
    const WorkingFloat rf = to_float(r);
    for (unsigned m = 1; m <= depth; ++m) ratio.push_back(log_f[m - 1] + rf * m);
    switch (tail_trend(ratio)) {
      case Trend::Falling:
        below.push_back(r);
        break;
      case Trend::Rising:
        above.push_back(r);
        break;
      case Trend::Flat:
        exact.push_back(r);
        break;
      case Trend::Mixed:
        throw Inconclusive("f(i)/i^" + to_string(r) + " is not monotone within depth " +
                           std::to_string(depth));
    }
  }

  OrderEstimate out;
  if (!below.empty()) out.lower = *std::max_element(below.begin(), below.end());
  if (!above.empty()) out.upper = *std::min_element(above.begin(), above.end());
  if (out.lower && out.upper && !(*out.lower < *out.upper))
    throw Inconclusive("probe trends contradict each other");

  if (!exact.empty()) {
    const Rational a = exact.front();
    bool consistent = std::all_of(exact.begin(), exact.end(), [&](const Rational& r) { return r == a; });
    consistent = consistent && (!out.lower || *out.lower < a) && (!out.upper || a < *out.upper);
    if (!consistent) throw Inconclusive("probe trends contradict each other");
    out.value = OrderValue::finite(a);
    out.lower = out.upper = a;
    return out;
  }
  if (!out.upper) {
    out.value = OrderValue::infinite();
    return out;
  }
  if (!out.lower) {
    // Every probe blows up. Order 0 when f itself is infinitesimal and all
    // probes are positive.
    const bool f_vanishes = tail_trend(log_f) == Trend::Falling;
    if (!f_vanishes || *out.upper <= 0)
      throw Inconclusive("every probe diverges; no lower bound on the order");
    out.value = OrderValue::finite(0);
    out.lower = Rational(0);
    return out;
  }
  out.value = OrderValue::finite((*out.lower + *out.upper) / 2);
  return out;
}

}  // namespace stevin
