#pragma once

#include "stevin/exact.hpp"
#include "stevin/series.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stevin {

// 100 significant decimal digits.
using WorkingFloat = boost::multiprecision::cpp_dec_float_100;

// Functions of a positive infinitesimal i that have no finite series form,
// plus plain monomials for calibration.
struct CatalogFunction {
  enum class Kind { ExpNegInv, InvLog, Monomial };

  Kind kind = Kind::Monomial;
  Rational exponent;  // Monomial only

  static CatalogFunction exp_neg_inv() { return {Kind::ExpNegInv, 0}; }
  static CatalogFunction inv_log() { return {Kind::InvLog, 0}; }
  static CatalogFunction monomial(const Rational& a) { return {Kind::Monomial, a}; }

  // "exp_neg_inv", "inv_log", "monomial:3/2".
  static CatalogFunction parse(const std::string& name);
  std::string name() const;

  // log10 |f(i)| for rational i in (0, 1), evaluated in log space so that
  // values like e^(-10^8) stay representable.
  WorkingFloat log10_abs_at(const Rational& i) const;
};

struct OrderEstimate {
  OrderValue value;
  // Probes known to lie below / above the order, when any.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// Samples f(i)/i^r at i = 10^-m for m = 1..depth and classifies each probe's
// trend over the tail of the samples (m >= depth/2): strictly falling means
// the ratio tends to 0 (r below the order), strictly rising means it blows up
// (r above the order), constant means r is the order. Throws Inconclusive
// when a trend is non-monotone or the probes contradict each other.
OrderEstimate estimate_order_numeric(const CatalogFunction& f, const std::vector<Rational>& probes,
                                     unsigned depth);

}  // namespace stevin
