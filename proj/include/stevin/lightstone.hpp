#pragma once

#include "stevin/decimal.hpp"
#include "stevin/hyper.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stevin {

// Digits of a finite hypernumber at unlimited ranks.
struct InfinitePattern {
  enum class Kind {
    Constant,     // digit d1 at every unlimited rank
    UpToHThen,    // digit d1 at ranks <= H (H = [<n>]), digit d2 beyond
    Unknown,
  };

  Kind kind = Kind::Unknown;
  std::uint8_t first = 0;   // d1
  std::uint8_t second = 0;  // d2, UpToHThen only

  std::string describe() const;
  friend bool operator==(const InfinitePattern&, const InfinitePattern&) = default;
};

// Extended decimal expansion "finite digits ; unlimited-rank digits".
struct LightstoneRendering {
  bool negative = false;
  Integer integer_part = 0;
  std::vector<std::uint8_t> finite_digits;
  InfinitePattern pattern;

  // e.g. "0.33333…;… (digit 3 at ranks up to H, then 0)"
  std::string to_string() const;
};

// Supported generators: constants, and sequences of the closed form
// r - s * 10^-n (per residue class, the oracle choosing the class when they
// differ). Throws NotFinite for unlimited u and UnsupportedForm otherwise.
LightstoneRendering lightstone_render(const HyperNumber& u, std::size_t k, const FilterOracle& oracle);

// Eventually-constant digit of q's decimal expansion, if its repeating
// period has length 1 (terminating expansions repeat 0).
std::optional<std::uint8_t> repeating_digit(const Rational& q);

}  // namespace stevin
