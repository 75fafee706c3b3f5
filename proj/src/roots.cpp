#include "stevin/roots.hpp"

#include "stevin/errors.hpp"

#include <stdexcept>

namespace stevin {

bool EnclosureStream::proves_permanent_interior(const Rational&, const Enclosure&) const {
  return false;
}

std::optional<Enclosure> ListStream::next() {
  if (pos_ >= items_.size()) return std::nullopt;
  return items_[pos_++];
}

namespace {

void require_bracket(const Polynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("bracket requires a < b");
  if (p(a) == 0 || p(b) == 0) return;
  if (!sign_change(p, a, b))
    throw NoSignChange("no sign change of " + to_string(p) + " on [" + to_string(a) + ", " +
                       to_string(b) + "]");
}

// True iff every prime factor of n divides `parts`.
bool is_smooth_over(Integer n, unsigned parts) {
  for (unsigned prime : {2U, 3U, 5U, 7U}) {
    if (parts % prime != 0) continue;
    while (n % prime == 0) n /= prime;
  }
  return n == 1;
}

}  // namespace

SubdivisionStream::SubdivisionStream(Polynomial p, Rational a, Rational b, unsigned parts)
    : p_(std::move(p)), a_(std::move(a)), b_(std::move(b)), parts_(parts) {
  if (parts_ < 2 || parts_ > 10) throw std::invalid_argument("parts must be in [2, 10]");
  require_bracket(p_, a_, b_);
  if (p_(a_) == 0) {
    current_ = {a_, a_, true};
  } else if (p_(b_) == 0) {
    current_ = {b_, b_, true};
  } else {
    current_ = {a_, b_, false};
    sign_lo_ = sign_of(p_(a_));
  }
}

std::optional<Enclosure> SubdivisionStream::next() {
  if (!started_) {
    started_ = true;
    finished_ = current_.exact_root;
    return current_;
  }
  if (finished_) return std::nullopt;

  const Rational step = current_.width() / parts_;
  // Exact roots at interior subdivision points take priority.
  std::vector<Rational> points(parts_ + 1);
  std::vector<int> signs(parts_ + 1);
  points[0] = current_.lo;
  signs[0] = sign_lo_;
  points[parts_] = current_.hi;
  signs[parts_] = -sign_lo_;
  for (unsigned j = 1; j < parts_; ++j) {
    points[j] = current_.lo + step * j;
    signs[j] = sign_of(p_(points[j]));
    if (signs[j] == 0) {
      ++steps_;
      finished_ = true;
      current_ = {points[j], points[j], true};
      return current_;
    }
  }
  for (unsigned j = 0; j < parts_; ++j) {
    if (signs[j] * signs[j + 1] < 0) {
      ++steps_;
      current_ = {points[j], points[j + 1], false};
      sign_lo_ = signs[j];
      return current_;
    }
  }
  // Unreachable while the sign-change invariant holds.
  throw std::logic_error("subdivision lost its sign change");
}

// The point is a simple root, the only root of p in `current`, and no
// subdivision point a + (b - a) * j / parts^m can ever equal it. Then every
// later step keeps it strictly inside.
bool SubdivisionStream::proves_permanent_interior(const Rational& point,
                                                  const Enclosure& current) const {
  if (current.exact_root || !(current.lo < point && point < current.hi)) return false;
  if (p_(point) != 0) return false;

  const Rational t = (point - a_) / (b_ - a_);
  if (is_smooth_over(denominator_of(t), parts_)) return false;

  auto [cofactor, rem] = divide(p_, Polynomial{-point, 1});
  if (!rem.is_zero()) return false;
  // Taylor expansion of the cofactor around the root bounds it away from
  // zero on the enclosure.
  const Polynomial shifted = cofactor.compose(Polynomial{point, 1});
  const Rational radius = std::max(point - current.lo, current.hi - point);
  Rational tail = 0;
  Rational r_pow = 1;
  for (std::size_t j = 1; j < shifted.coefficients().size(); ++j) {
    r_pow *= radius;
    tail += abs(shifted.coefficients()[j]) * r_pow;
  }
  return abs(shifted.coefficient(0)) > tail;
}

SubdivisionStream stevin_stream(const Polynomial& p, const Rational& a, const Rational& b) {
  return {p, a, b, 10};
}

SubdivisionStream bisection_stream(const Polynomial& p, const Rational& a, const Rational& b) {
  return {p, a, b, 2};
}

namespace {

StevinDigits render_exact_root(const Rational& r, std::size_t n_digits) {
  StevinDigits d = to_decimal(r, n_digits);
  if (!d.exact) return d;
  while (!d.digits.empty() && d.digits.back() == 0) d.digits.pop_back();
  return d;
}

}  // namespace

StevinDigits stevin_root(const Polynomial& p, const Rational& a, const Rational& b,
                         std::size_t n_digits) {
  SubdivisionStream stream = stevin_stream(p, a, b);
  const Rational target(1, pow10(n_digits));
  Enclosure e = *stream.next();
  while (!e.exact_root && e.width() > target) e = *stream.next();
  if (e.exact_root) return render_exact_root(e.lo, n_digits);

  // Width <= 10^-n leaves at most one rank-n grid point strictly inside.
  const Integer unit = pow10(n_digits);
  const Integer first = floor_of(e.lo * unit) + 1;
  if (Rational(first, unit) < e.hi) {
    const Rational g(first, unit);
    const int sg = sign_of(p(g));
    if (sg == 0) return render_exact_root(g, n_digits);
    if (sg == sign_of(p(e.lo))) {
      e.lo = g;
    } else {
      e.hi = g;
    }
  }
  const Rational truncated =
      e.lo >= 0 ? Rational(floor_of(e.lo * unit), unit) : Rational(ceil_of(e.hi * unit), unit);
  StevinDigits out = to_decimal(truncated, n_digits);
  out.negative = e.hi <= 0;
  out.exact = false;
  return out;
}

BisectionResult cauchy_bisect(const Polynomial& p, const Rational& a, const Rational& b,
                              const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  require_bracket(p, a, b);
  if (p(a) == 0) return {a, a, 0, true};
  if (p(b) == 0) return {b, b, 0, true};
  BisectionResult r{a, b, 0, false};
  int sign_lo = sign_of(p(a));
  while (r.hi - r.lo > tol) {
    const Rational mid = (r.lo + r.hi) / 2;
    ++r.iterations;
    const int sm = sign_of(p(mid));
    if (sm == 0) {
      r.lo = r.hi = mid;
      r.exact = true;
      break;
    }
    if (sm == sign_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

std::size_t bisection_steps_for_digits(std::size_t d) {
  const Integer target = pow10(d);
  std::size_t m = 0;
  Integer two_m = 1;
  while (two_m < target) {
    two_m <<= 1;
    ++m;
  }
  return m;
}

StrategyComparison compare_strategies(const Polynomial& p, const Rational& a, const Rational& b,
                                      std::size_t d) {
  const Rational target = (b - a) / pow10(d);
  StrategyComparison out;

  auto run = [&](SubdivisionStream stream, std::size_t& iterations, bool& exact) {
    Enclosure e = *stream.next();
    while (!e.exact_root && e.width() > target) e = *stream.next();
    iterations = stream.steps();
    exact = e.exact_root;
  };
  run(stevin_stream(p, a, b), out.stevin_iterations, out.stevin_exact_hit);
  run(bisection_stream(p, a, b), out.bisect_iterations, out.bisect_exact_hit);
  return out;
}

namespace {

std::uint8_t digit_at_rank(const Integer& cell) {
  return static_cast<std::uint8_t>(static_cast<unsigned>(abs(cell) % 10));
}

}  // namespace

StabilityReport digit_stability(EnclosureStream& stream, std::size_t k, std::size_t max_steps) {
  if (k == 0) throw std::invalid_argument("rank must be positive");
  const Integer unit = pow10(k);
  std::optional<Enclosure> previous;
  for (std::size_t i = 0; i < max_steps; ++i) {
    std::optional<Enclosure> e = stream.next();
    if (!e) break;
    if (e->lo > e->hi) throw std::invalid_argument("enclosure with lo > hi");
    if (previous && (e->lo < previous->lo || e->hi > previous->hi))
      throw std::invalid_argument("enclosures are not nested");
    previous = e;

    StabilityReport report;
    report.rank = k;
    report.at_iteration = i;
    if (e->exact_root || e->lo == e->hi) {
      // Truncation toward zero of the point itself.
      report.digit = digit_at_rank(abs(numerator_of(e->lo)) * unit / denominator_of(e->lo));
      return report;
    }
    const Integer first = floor_of(e->lo * unit) + 1;
    const Integer last = ceil_of(e->hi * unit) - 1;
    if (first > last) {
      const Integer cell = e->lo >= 0 ? floor_of(e->lo * unit) : floor_of(-e->hi * unit);
      report.digit = digit_at_rank(cell);
      return report;
    }
    if (first == last) {
      const Rational g(first, unit);
      if (stream.proves_permanent_interior(g, *e)) {
        report.status = StabilityReport::Status::StraddlesGrid;
        report.grid_point = g;
        return report;
      }
    }
  }
  throw BudgetExhausted("digit at rank " + std::to_string(k) + " not settled within " +
                        std::to_string(max_steps) + " steps");
}

}  // namespace stevin
