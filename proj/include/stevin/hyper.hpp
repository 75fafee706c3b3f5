#pragma once

#include "stevin/decimal.hpp"
#include "stevin/exact.hpp"
#include "stevin/index_set.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stevin {

// Polynomial in n and t = 10^-n with rational coefficients; by_t()[b] holds
// the coefficient polynomial (in n) of t^b.
class NtPolynomial {
 public:
  NtPolynomial() = default;
  explicit NtPolynomial(std::vector<Polynomial> by_t);
  static NtPolynomial constant(const Rational& c);
  static NtPolynomial n();
  static NtPolynomial t();

  const std::vector<Polynomial>& by_t() const noexcept { return by_t_; }
  bool is_zero() const noexcept { return by_t_.empty(); }
  // Nonzero and free of t.
  bool is_univariate() const noexcept { return by_t_.size() == 1; }

  // Asymptotically dominant term as n -> infinity: the lowest power of t,
  // then the highest power of n within it.
  struct Lead {
    std::size_t t_power;
    std::size_t n_power;
    Rational coefficient;
  };
  Lead lead() const;

  Rational eval(Index n) const;

  // Least N >= 1 such that for every n >= N the value is nonzero with the
  // sign of the lead coefficient. Requires a nonzero polynomial.
  Index certified_sign_bound() const;

  friend NtPolynomial operator+(const NtPolynomial& a, const NtPolynomial& b);
  friend NtPolynomial operator-(const NtPolynomial& a, const NtPolynomial& b);
  friend NtPolynomial operator*(const NtPolynomial& a, const NtPolynomial& b);
  NtPolynomial operator-() const;
  friend bool operator==(const NtPolynomial&, const NtPolynomial&) = default;

 private:
  friend struct NtFraction;
  void trim();
  std::vector<Polynomial> by_t_;
};

// num / den, den never the zero polynomial.
struct NtFraction {
  NtPolynomial num;
  NtPolynomial den;

  static NtFraction of(const NtPolynomial& p) { return {p, NtPolynomial::constant(1)}; }
  // Cancels common powers of t and, for t-free parts, the polynomial gcd.
  NtFraction simplified() const;

  // Eventual behaviour along this residue class.
  enum class Kind { Zero, Infinitesimal, Appreciable, Unlimited };
  Kind kind() const;
  // Limit for Appreciable, 0 for Zero/Infinitesimal. Unlimited has none.
  Rational limit() const;
  // Eventual sign: -1, 0, +1.
  int eventual_sign() const;
};

// Elements of Q^N / F: a sequence given by a generator expression in n with
// rationals, (-1)^n, 10^n, 10^(-n), + - * / and natural powers. Division is
// pointwise, with the representative patched to 0 wherever the divisor
// vanishes. For each parity class the generator agrees, from start_index()
// on, with a rational function of n and 10^-n.
class HyperNumber {
 public:
  struct Node;

  static HyperNumber embed(const Rational& q);
  static HyperNumber omega();    // <n>
  static HyperNumber epsilon();  // <1/n>
  static HyperNumber alternating();  // <(-1)^n>
  static HyperNumber ten_power(int sign);  // <10^n> or <10^-n>

  // Identifiers other than n are looked up in `env`.
  static HyperNumber parse(std::string_view text,
                           const std::map<std::string, HyperNumber>& env = {});

  Rational at(Index n) const;
  Index start_index() const;
  // 0 = even indices, 1 = odd indices.
  const NtFraction& form(int parity) const;
  // True when the generator does not depend on n.
  bool is_constant() const;
  std::string to_string() const;

  friend HyperNumber operator+(const HyperNumber& u, const HyperNumber& v);
  friend HyperNumber operator-(const HyperNumber& u, const HyperNumber& v);
  friend HyperNumber operator*(const HyperNumber& u, const HyperNumber& v);
  HyperNumber operator-() const;
  // Pointwise patched quotient, without any filter precondition.
  static HyperNumber pointwise_quotient(const HyperNumber& u, const HyperNumber& v);
  HyperNumber pow(unsigned k) const;

  const std::shared_ptr<const Node>& node() const noexcept { return node_; }

 private:
  explicit HyperNumber(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Quotient-field division. The zero set of v must be decided SMALL by the
// oracle, otherwise DivisorVanishesOnLargeSet.
HyperNumber div(const HyperNumber& u, const HyperNumber& v, const FilterOracle& oracle);

// {n : u_n < v_n}, {n : u_n = v_n}, {n : u_n > v_n}, exactly.
struct ComparisonSets {
  IndexSet less;
  IndexSet equal;
  IndexSet greater;
};
ComparisonSets comparison_sets(const HyperNumber& u, const HyperNumber& v);

enum class Relation { Less, Equal, Greater, Undecided };
std::string to_string(Relation r);
Relation compare(const HyperNumber& u, const HyperNumber& v, const FilterOracle& oracle);

struct Classification {
  enum class Kind { Infinitesimal, Appreciable, Unlimited, Undecided };

  Kind kind = Kind::Undecided;
  // Set for Infinitesimal (0) and for Appreciable when the oracle fixes it.
  std::optional<Rational> standard_part;

  std::string to_string() const;
};
Classification classify(const HyperNumber& u, const FilterOracle& oracle);

// Throws NotFinite for unlimited u and Undecided when the oracle cannot fix
// the value.
Rational standard_part(const HyperNumber& u, const FilterOracle& oracle);
StevinDigits standard_part_digits(const HyperNumber& u, const FilterOracle& oracle,
                                  std::size_t digits);

enum class LosResult { Holds, Fails, Undecided };
std::string to_string(LosResult r);
// Equational transfer: does lhs = rhs hold on a large index set?
LosResult los_check(const HyperNumber& lhs, const HyperNumber& rhs, const FilterOracle& oracle);
LosResult los_check(std::string_view lhs, std::string_view rhs,
                    const std::map<std::string, HyperNumber>& env, const FilterOracle& oracle);

// compare(u, embed(r)) == Equal.
bool rational_trace_check(const HyperNumber& u, const Rational& r, const FilterOracle& oracle);

}  // namespace stevin
