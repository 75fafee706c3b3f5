#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stevin {

// Base of every mathematical failure the library reports. `name()` is the
// stable identifier surfaced by the CLI ("NoSignChange", "NotFinite", ...).
class MathError : public std::runtime_error {
 public:
  MathError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define STEVIN_DEFINE_ERROR(Type)                                   \
  class Type : public MathError {                                   \
   public:                                                          \
    explicit Type(const std::string& what) : MathError(#Type, what) {} \
  };

STEVIN_DEFINE_ERROR(NoSignChange)
STEVIN_DEFINE_ERROR(BudgetExhausted)
STEVIN_DEFINE_ERROR(ZeroDivision)
STEVIN_DEFINE_ERROR(NegativeLeadingCoefficient)
STEVIN_DEFINE_ERROR(IrrationalCoefficient)
STEVIN_DEFINE_ERROR(InsufficientPrecision)
STEVIN_DEFINE_ERROR(Unlimited)
STEVIN_DEFINE_ERROR(Inconclusive)
STEVIN_DEFINE_ERROR(DivisorVanishesOnLargeSet)
STEVIN_DEFINE_ERROR(UnsupportedGenerator)
STEVIN_DEFINE_ERROR(NotFinite)
STEVIN_DEFINE_ERROR(Undecided)
STEVIN_DEFINE_ERROR(UnsupportedForm)

#undef STEVIN_DEFINE_ERROR

// Malformed textual input. Carries the 0-based byte offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stevin
