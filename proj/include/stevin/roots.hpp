#pragma once

#include "stevin/decimal.hpp"
#include "stevin/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace stevin {

// One step of a nested-interval construction. A degenerate enclosure
// (lo == hi) with `exact_root` set means the construction landed on a root.
struct Enclosure {
  Rational lo;
  Rational hi;
  bool exact_root = false;

  Rational width() const { return hi - lo; }
};

// Pull-based producer of nested, shrinking enclosures. Unless an enclosure
// is degenerate, its limit point is assumed to lie strictly inside it.
class EnclosureStream {
 public:
  virtual ~EnclosureStream() = default;

  // nullopt once the stream is finished (after an exact root).
  virtual std::optional<Enclosure> next() = 0;

  // True only when the stream can prove that `point` lies strictly inside
  // `current` and every later enclosure. Default: no proof available.
  virtual bool proves_permanent_interior(const Rational& point, const Enclosure& current) const;
};

// Replays a fixed list of enclosures.
class ListStream final : public EnclosureStream {
 public:
  explicit ListStream(std::vector<Enclosure> items) : items_(std::move(items)) {}
  std::optional<Enclosure> next() override;

 private:
  std::vector<Enclosure> items_;
  std::size_t pos_ = 0;
};

// Subdivides the bracket into `parts` equal pieces per step: 2 gives
// Cauchy's bisection, 10 gives Stevin's one-digit-per-step scheme. The first
// enclosure produced is the bracket itself (step 0).
//
// Each step evaluates the interior subdivision points left to right. The
// leftmost exact root ends the stream; otherwise the leftmost piece with a
// sign change is kept.
class SubdivisionStream final : public EnclosureStream {
 public:
  // Throws NoSignChange unless p(a)*p(b) < 0 or an endpoint is a root.
  SubdivisionStream(Polynomial p, Rational a, Rational b, unsigned parts);

  std::optional<Enclosure> next() override;
  bool proves_permanent_interior(const Rational& point, const Enclosure& current) const override;

  std::size_t steps() const noexcept { return steps_; }
  const Polynomial& polynomial() const noexcept { return p_; }

 private:
  Polynomial p_;
  Rational a_;
  Rational b_;
  unsigned parts_;
  Enclosure current_;
  int sign_lo_ = 0;
  bool started_ = false;
  bool finished_ = false;
  std::size_t steps_ = 0;
};

SubdivisionStream stevin_stream(const Polynomial& p, const Rational& a, const Rational& b);
SubdivisionStream bisection_stream(const Polynomial& p, const Rational& a, const Rational& b);

// First n_digits decimal digits of a root of p in [a, b], by ten-way
// subdivision. |value - root| < 10^-n_digits. An exact landing on a root
// that terminates within n_digits yields exact = true and the shortest
// digit string.
StevinDigits stevin_root(const Polynomial& p, const Rational& a, const Rational& b,
                         std::size_t n_digits);

struct BisectionResult {
  Rational lo;
  Rational hi;
  std::size_t iterations = 0;
  bool exact = false;
};

// Halve until hi - lo <= tol or a midpoint is an exact root.
BisectionResult cauchy_bisect(const Polynomial& p, const Rational& a, const Rational& b,
                              const Rational& tol);

struct StrategyComparison {
  std::size_t stevin_iterations = 0;
  std::size_t bisect_iterations = 0;
  bool stevin_exact_hit = false;
  bool bisect_exact_hit = false;

  bool exact_hit() const { return stevin_exact_hit || bisect_exact_hit; }
};

// Steps each scheme needs to shrink the bracket by a factor 10^d.
StrategyComparison compare_strategies(const Polynomial& p, const Rational& a, const Rational& b,
                                      std::size_t d);

// Least m with 2^-m <= 10^-d.
std::size_t bisection_steps_for_digits(std::size_t d);

struct StabilityReport {
  enum class Status { Stabilized, StraddlesGrid };

  std::size_t rank = 0;
  Status status = Status::Stabilized;
  std::size_t at_iteration = 0;
  std::uint8_t digit = 0;  // Stabilized only
  Rational grid_point;     // StraddlesGrid only
};

inline constexpr std::size_t kDefaultMaxSteps = 10000;

// Watches the digit at decimal rank k (k >= 1) of a nested enclosure stream.
// Stabilized: no rank-k grid point lies strictly inside the enclosure, so
// every later enclosure shares the digit. StraddlesGrid: the stream proved a
// grid point stays strictly inside forever. Throws BudgetExhausted when
// neither is settled within max_steps enclosures.
StabilityReport digit_stability(EnclosureStream& stream, std::size_t k,
                                std::size_t max_steps = kDefaultMaxSteps);

}  // namespace stevin
