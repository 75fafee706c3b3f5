#include "stevin/hyper.hpp"

#include "stevin/errors.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <stdexcept>

namespace stevin {

namespace {

// Pointwise scans below a certified bound stop being desk-scale past this.
constexpr Index kMaxScan = 200000;

Polynomial monic_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.leading_coefficient()) * a;
}

Rational abs_coefficient_sum(const Polynomial& p, std::size_t below_power) {
  Rational s = 0;
  for (std::size_t j = 0; j < p.coefficients().size() && j < below_power; ++j) s += abs(p.coefficients()[j]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// NtPolynomial

NtPolynomial::NtPolynomial(std::vector<Polynomial> by_t) : by_t_(std::move(by_t)) { trim(); }

void NtPolynomial::trim() {
  while (!by_t_.empty() && by_t_.back().is_zero()) by_t_.pop_back();
}

NtPolynomial NtPolynomial::constant(const Rational& c) {
  if (c == 0) return {};
  return NtPolynomial({Polynomial::constant(c)});
}

NtPolynomial NtPolynomial::n() { return NtPolynomial({Polynomial::x()}); }

NtPolynomial NtPolynomial::t() { return NtPolynomial({Polynomial(), Polynomial::constant(1)}); }

NtPolynomial::Lead NtPolynomial::lead() const {
  for (std::size_t b = 0; b < by_t_.size(); ++b) {
    if (by_t_[b].is_zero()) continue;
    return {b, static_cast<std::size_t>(by_t_[b].degree()), by_t_[b].leading_coefficient()};
  }
  throw std::logic_error("lead of the zero polynomial");
}

Rational NtPolynomial::eval(Index n) const {
  if (by_t_.empty()) return 0;
  const Rational x(n);
  const Rational t(Integer(1), pow10(n));
  Rational acc = 0;
  for (auto it = by_t_.rbegin(); it != by_t_.rend(); ++it) acc = acc * t + it->eval(x);
  return acc;
}

// With F0 the coefficient of the leading t-power (degree d0, lead lc) and
// the rest bounded by t * S * n^D for n >= 1:
//   |F0(n)| >= lc n^d0 - R n^(d0-1) >= lc n^d0 / 2      once n >= 2R/lc
//   lc n^d0 / 2 > S n^D 10^-n                           once 10^n > (2S/lc) n^(D-d0)
// and n^E / 10^n is non-increasing for n >= E, so the second condition,
// once met, holds from then on.
Index NtPolynomial::certified_sign_bound() const {
  const Lead l = lead();
  const Rational lc = abs(l.coefficient);
  const Polynomial& f0 = by_t_[l.t_power];
  const Rational r = abs_coefficient_sum(f0, l.n_power);

  Index bound = 1;
  if (r > 0) bound = std::max<Index>(bound, static_cast<Index>(ceil_of(2 * r / lc)));

  Rational s = 0;
  std::size_t max_degree = 0;
  for (std::size_t b = l.t_power + 1; b < by_t_.size(); ++b) {
    if (by_t_[b].is_zero()) continue;
    s += abs_coefficient_sum(by_t_[b], by_t_[b].coefficients().size());
    max_degree = std::max(max_degree, static_cast<std::size_t>(by_t_[b].degree()));
  }
  if (s > 0) {
    const std::size_t e = max_degree > l.n_power ? max_degree - l.n_power : 0;
    const Rational factor = 2 * s / lc;
    Index n = std::max<Index>(1, e);
    while (Rational(pow10(n)) <= factor * pow_int(Rational(n), static_cast<long>(e))) ++n;
    bound = std::max(bound, n);
  }
  return bound;
}

NtPolynomial operator+(const NtPolynomial& a, const NtPolynomial& b) {
  std::vector<Polynomial> r(std::max(a.by_t_.size(), b.by_t_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.by_t_.size()) r[i] = r[i] + a.by_t_[i];
    if (i < b.by_t_.size()) r[i] = r[i] + b.by_t_[i];
  }
  return NtPolynomial(std::move(r));
}

NtPolynomial NtPolynomial::operator-() const {
  std::vector<Polynomial> r;
  r.reserve(by_t_.size());
  for (const auto& p : by_t_) r.push_back(-p);
  return NtPolynomial(std::move(r));
}

NtPolynomial operator-(const NtPolynomial& a, const NtPolynomial& b) { return a + (-b); }

NtPolynomial operator*(const NtPolynomial& a, const NtPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> r(a.by_t_.size() + b.by_t_.size() - 1);
  for (std::size_t i = 0; i < a.by_t_.size(); ++i)
    for (std::size_t j = 0; j < b.by_t_.size(); ++j) r[i + j] = r[i + j] + a.by_t_[i] * b.by_t_[j];
  return NtPolynomial(std::move(r));
}

// ---------------------------------------------------------------------------
// NtFraction

NtFraction NtFraction::simplified() const {
  if (num.is_zero()) return of(NtPolynomial());
  auto lowest = [](const NtPolynomial& p) {
    std::size_t k = 0;
    while (p.by_t()[k].is_zero()) ++k;
    return k;
  };
  const std::size_t k = std::min(lowest(num), lowest(den));
  std::vector<Polynomial> nv(num.by_t().begin() + static_cast<long>(k), num.by_t().end());
  std::vector<Polynomial> dv(den.by_t().begin() + static_cast<long>(k), den.by_t().end());

  if (nv.size() == 1 && dv.size() == 1) {
    const Polynomial g = monic_gcd(nv[0], dv[0]);
    nv[0] = divide(nv[0], g).quotient;
    dv[0] = divide(dv[0], g).quotient;
  }
  // Scale so the dominant coefficient of the denominator is 1.
  NtFraction out{NtPolynomial(std::move(nv)), NtPolynomial(std::move(dv))};
  const Rational c = out.den.lead().coefficient;
  if (c != 1) {
    const NtPolynomial inv_c = NtPolynomial::constant(1 / c);
    out.num = out.num * inv_c;
    out.den = out.den * inv_c;
  }
  return out;
}

NtFraction::Kind NtFraction::kind() const {
  if (num.is_zero()) return Kind::Zero;
  const auto a = num.lead();
  const auto b = den.lead();
  if (a.t_power < b.t_power) return Kind::Unlimited;
  if (a.t_power > b.t_power) return Kind::Infinitesimal;
  if (a.n_power > b.n_power) return Kind::Unlimited;
  if (a.n_power < b.n_power) return Kind::Infinitesimal;
  return Kind::Appreciable;
}

Rational NtFraction::limit() const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::Infinitesimal:
      return 0;
    case Kind::Appreciable:
      return num.lead().coefficient / den.lead().coefficient;
    case Kind::Unlimited:
      break;
  }
  throw std::logic_error("unlimited sequence has no limit");
}

int NtFraction::eventual_sign() const {
  if (num.is_zero()) return 0;
  return sign_of(num.lead().coefficient) * sign_of(den.lead().coefficient);
}

namespace {

NtFraction add(const NtFraction& a, const NtFraction& b) {
  return NtFraction{a.num * b.den + b.num * a.den, a.den * b.den}.simplified();
}
NtFraction sub(const NtFraction& a, const NtFraction& b) {
  return NtFraction{a.num * b.den - b.num * a.den, a.den * b.den}.simplified();
}
NtFraction mul(const NtFraction& a, const NtFraction& b) {
  return NtFraction{a.num * b.num, a.den * b.den}.simplified();
}
NtFraction quo(const NtFraction& a, const NtFraction& b) {
  if (b.num.is_zero()) return NtFraction::of(NtPolynomial());
  return NtFraction{a.num * b.den, a.den * b.num}.simplified();
}

}  // namespace

// ---------------------------------------------------------------------------
// HyperNumber

struct HyperNumber::Node {
  enum class Op { Const, N, Parity, TenPow, Add, Sub, Mul, Div, Neg };

  Op op = Op::Const;
  Rational value;    // Const
  int ten_sign = 0;  // TenPow: +1 for 10^n, -1 for 10^-n
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  std::array<NtFraction, 2> forms;
  Index start = 0;
  bool constant = true;
};

namespace {

using Node = HyperNumber::Node;
using NodePtr = std::shared_ptr<const Node>;

Rational eval_node(const Node& node, Index n) {
  switch (node.op) {
    case Node::Op::Const:
      return node.value;
    case Node::Op::N:
      return Rational(n);
    case Node::Op::Parity:
      return n % 2 == 0 ? Rational(1) : Rational(-1);
    case Node::Op::TenPow:
      return node.ten_sign > 0 ? Rational(pow10(n)) : Rational(Integer(1), pow10(n));
    case Node::Op::Add:
      return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
    case Node::Op::Sub:
      return eval_node(*node.lhs, n) - eval_node(*node.rhs, n);
    case Node::Op::Mul:
      return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
    case Node::Op::Neg:
      return -eval_node(*node.lhs, n);
    case Node::Op::Div: {
      const Rational d = eval_node(*node.rhs, n);
      if (d == 0) return 0;
      return eval_node(*node.lhs, n) / d;
    }
  }
  return 0;
}

NodePtr make_leaf(Node::Op op, const Rational& value = 0, int ten_sign = 0) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->value = value;
  node->ten_sign = ten_sign;
  for (int c = 0; c < 2; ++c) {
    switch (op) {
      case Node::Op::Const:
        node->forms[c] = NtFraction::of(NtPolynomial::constant(value));
        break;
      case Node::Op::N:
        node->forms[c] = NtFraction::of(NtPolynomial::n());
        break;
      case Node::Op::Parity:
        node->forms[c] = NtFraction::of(NtPolynomial::constant(c == 0 ? 1 : -1));
        break;
      case Node::Op::TenPow:
        node->forms[c] = ten_sign > 0 ? NtFraction{NtPolynomial::constant(1), NtPolynomial::t()}
                                      : NtFraction::of(NtPolynomial::t());
        break;
      default:
        throw std::logic_error("not a leaf");
    }
  }
  node->constant = op == Node::Op::Const;
  return node;
}

// Last index in [from, bound) of the given parity where p vanishes, if any.
// Past the scan limit the bound itself stands in for the last zero.
std::optional<Index> last_zero(const NtPolynomial& p, Index from, int parity) {
  const Index bound = p.certified_sign_bound();
  if (bound > kMaxScan) return bound - 1;
  std::optional<Index> last;
  for (Index n = from; n < bound; ++n)
    if (static_cast<int>(n % 2) == parity && p.eval(n) == 0) last = n;
  return last;
}

NodePtr make_node(Node::Op op, NodePtr lhs, NodePtr rhs = nullptr) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->constant = lhs->constant && (!rhs || rhs->constant);
  node->start = std::max(lhs->start, rhs ? rhs->start : 0);
  for (int c = 0; c < 2; ++c) {
    const NtFraction& a = lhs->forms[c];
    switch (op) {
      case Node::Op::Add:
        node->forms[c] = add(a, rhs->forms[c]);
        break;
      case Node::Op::Sub:
        node->forms[c] = sub(a, rhs->forms[c]);
        break;
      case Node::Op::Mul:
        node->forms[c] = mul(a, rhs->forms[c]);
        break;
      case Node::Op::Neg:
        node->forms[c] = NtFraction{-a.num, a.den};
        break;
      case Node::Op::Div: {
        const NtFraction& b = rhs->forms[c];
        node->forms[c] = quo(a, b);
        if (!b.num.is_zero())
          if (auto z = last_zero(b.num, rhs->start, c)) node->start = std::max(node->start, *z + 1);
        break;
      }
      default:
        throw std::logic_error("not an operator");
    }
  }
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  // Constant subtrees fold to a single constant.
  if (node->constant) return make_leaf(Node::Op::Const, eval_node(*node, 0));
  return node;
}

int precedence(const Node& node) {
  switch (node.op) {
    case Node::Op::Add:
    case Node::Op::Sub:
      return 1;
    case Node::Op::Mul:
    case Node::Op::Div:
      return 2;
    case Node::Op::Neg:
      return 3;
    case Node::Op::Const:
      return node.value >= 0 && is_integer(node.value) ? 4 : 0;
    default:
      return 4;
  }
}

std::string render(const Node& node);

std::string render_operand(const Node& child, int min_precedence) {
  std::string s = render(child);
  return precedence(child) < min_precedence ? "(" + s + ")" : s;
}

std::string render(const Node& node) {
  switch (node.op) {
    case Node::Op::Const:
      return to_string(node.value);
    case Node::Op::N:
      return "n";
    case Node::Op::Parity:
      return "(-1)^n";
    case Node::Op::TenPow:
      return node.ten_sign > 0 ? "10^n" : "10^(-n)";
    case Node::Op::Add:
      return render_operand(*node.lhs, 1) + " + " + render_operand(*node.rhs, 2);
    case Node::Op::Sub:
      return render_operand(*node.lhs, 1) + " - " + render_operand(*node.rhs, 2);
    case Node::Op::Mul:
      return render_operand(*node.lhs, 2) + "*" + render_operand(*node.rhs, 3);
    case Node::Op::Div:
      return render_operand(*node.lhs, 2) + "/" + render_operand(*node.rhs, 3);
    case Node::Op::Neg:
      return "-" + render_operand(*node.lhs, 3);
  }
  return {};
}

}  // namespace

HyperNumber HyperNumber::embed(const Rational& q) { return HyperNumber(make_leaf(Node::Op::Const, q)); }
HyperNumber HyperNumber::omega() { return HyperNumber(make_leaf(Node::Op::N)); }
HyperNumber HyperNumber::epsilon() { return pointwise_quotient(embed(1), omega()); }
HyperNumber HyperNumber::alternating() { return HyperNumber(make_leaf(Node::Op::Parity)); }
HyperNumber HyperNumber::ten_power(int sign) {
  return HyperNumber(make_leaf(Node::Op::TenPow, 0, sign >= 0 ? 1 : -1));
}

Rational HyperNumber::at(Index n) const { return eval_node(*node_, n); }
Index HyperNumber::start_index() const { return node_->start; }
const NtFraction& HyperNumber::form(int parity) const { return node_->forms[parity & 1]; }
bool HyperNumber::is_constant() const { return node_->constant; }
std::string HyperNumber::to_string() const { return render(*node_); }

HyperNumber operator+(const HyperNumber& u, const HyperNumber& v) {
  return HyperNumber(make_node(Node::Op::Add, u.node_, v.node_));
}
HyperNumber operator-(const HyperNumber& u, const HyperNumber& v) {
  return HyperNumber(make_node(Node::Op::Sub, u.node_, v.node_));
}
HyperNumber operator*(const HyperNumber& u, const HyperNumber& v) {
  return HyperNumber(make_node(Node::Op::Mul, u.node_, v.node_));
}
HyperNumber HyperNumber::operator-() const { return HyperNumber(make_node(Node::Op::Neg, node_)); }
HyperNumber HyperNumber::pointwise_quotient(const HyperNumber& u, const HyperNumber& v) {
  return HyperNumber(make_node(Node::Op::Div, u.node_, v.node_));
}

HyperNumber HyperNumber::pow(unsigned k) const {
  HyperNumber result = embed(1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

// ---------------------------------------------------------------------------
// Generator text

namespace {

using detail::Cursor;

class GeneratorParser {
 public:
  GeneratorParser(std::string_view text, const std::map<std::string, HyperNumber>& env)
      : cur_(text), env_(env) {}

  HyperNumber parse() {
    HyperNumber h = expr();
    if (!cur_.at_end()) cur_.fail("unexpected input");
    return h;
  }

 private:
  HyperNumber expr() {
    HyperNumber acc = term();
    for (;;) {
      if (cur_.accept('+')) {
        acc = acc + term();
      } else if (cur_.accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  HyperNumber term() {
    HyperNumber acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc = acc * factor();
      } else if (cur_.accept('/')) {
        acc = HyperNumber::pointwise_quotient(acc, factor());
      } else {
        return acc;
      }
    }
  }

  HyperNumber factor() {
    if (cur_.accept('-')) return -factor();
    if (cur_.accept('+')) return factor();
    return power();
  }

  HyperNumber power() {
    HyperNumber base = primary();
    if (!cur_.accept('^')) return base;
    const std::size_t at = cur_.pos();

    // Exponent: n, -n, (n), (-n) or a natural number.
    bool paren = cur_.accept('(');
    bool negative = cur_.accept('-');
    if (cur_.peek() == 'n') {
      cur_.accept('n');
      if (paren) cur_.expect(')');
      return exponential(base, negative ? -1 : 1, at);
    }
    if (negative) cur_.fail("negative integer exponents are not supported");
    std::string digits = cur_.digits();
    if (digits.empty()) cur_.fail("expected an exponent");
    if (paren) cur_.expect(')');
    if (digits.size() > 2 || std::stoul(digits) > 64) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  HyperNumber exponential(const HyperNumber& base, int sign, std::size_t at) {
    if (!base.is_constant())
      throw UnsupportedGenerator("only constant bases can be raised to the power n (at position " +
                                 std::to_string(at) + ")");
    const Rational b = base.at(0);
    if (b == -1) return HyperNumber::alternating();
    if (b == 1) return HyperNumber::embed(1);
    if (b == 10) return HyperNumber::ten_power(sign);
    if (b == Rational(1, 10)) return HyperNumber::ten_power(-sign);
    throw UnsupportedGenerator("unsupported base " + stevin::to_string(b) +
                               " for ^n (supported: -1, 10, 1/10)");
  }

  HyperNumber primary() {
    char c = cur_.peek();
    if (cur_.accept('(')) {
      HyperNumber inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (detail::is_digit(c)) return HyperNumber::embed(detail::read_unsigned_rational(cur_));
    if (detail::is_alpha(c)) {
      const std::size_t at = cur_.pos();
      std::string name = cur_.identifier();
      if (name == "n") return HyperNumber::omega();
      auto it = env_.find(name);
      if (it == env_.end()) throw ParseError("unknown identifier '" + name + "'", at);
      return it->second;
    }
    cur_.fail("expected a number, n, an identifier or '('");
  }

  Cursor cur_;
  const std::map<std::string, HyperNumber>& env_;
};

}  // namespace

HyperNumber HyperNumber::parse(std::string_view text, const std::map<std::string, HyperNumber>& env) {
  return GeneratorParser(text, env).parse();
}

// ---------------------------------------------------------------------------
// Quotient-level operations

ComparisonSets comparison_sets(const HyperNumber& u, const HyperNumber& v) {
  Index threshold = std::max(u.start_index(), v.start_index());
  std::array<int, 2> eventual{};
  for (int c = 0; c < 2; ++c) {
    const NtFraction d = sub(u.form(c), v.form(c));
    eventual[c] = d.eventual_sign();
    if (!d.num.is_zero()) threshold = std::max(threshold, d.num.certified_sign_bound());
    threshold = std::max(threshold, d.den.certified_sign_bound());
  }
  if (threshold > kMaxScan)
    throw UnsupportedGenerator("certified bound " + std::to_string(threshold) + " is too large to scan");

  std::vector<int> early(threshold);
  for (Index n = 0; n < threshold; ++n) early[n] = sign_of(u.at(n) - v.at(n));

  auto build = [&](int wanted) {
    return IndexSet::eventually(2, {eventual[0] == wanted, eventual[1] == wanted}, threshold,
                                [&](Index n) { return early[n] == wanted; });
  };
  return {build(-1), build(0), build(1)};
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less:
      return "LT";
    case Relation::Equal:
      return "EQ";
    case Relation::Greater:
      return "GT";
    case Relation::Undecided:
      return "UNDECIDED";
  }
  return {};
}

namespace {

// The comparison sets with their finite exceptions dropped. Neither oracle
// looks at finite parts, so every decision agrees with comparison_sets.
ComparisonSets eventual_sets(const HyperNumber& u, const HyperNumber& v) {
  std::array<int, 2> eventual{};
  for (int c = 0; c < 2; ++c) eventual[c] = sub(u.form(c), v.form(c)).eventual_sign();
  auto build = [&](int wanted) {
    return IndexSet(2, {eventual[0] == wanted, eventual[1] == wanted}, {}, {});
  };
  return {build(-1), build(0), build(1)};
}

}  // namespace

Relation compare(const HyperNumber& u, const HyperNumber& v, const FilterOracle& oracle) {
  const ComparisonSets sets = eventual_sets(u, v);
  if (oracle.decide(sets.less) == Decision::Large) return Relation::Less;
  if (oracle.decide(sets.equal) == Decision::Large) return Relation::Equal;
  if (oracle.decide(sets.greater) == Decision::Large) return Relation::Greater;
  return Relation::Undecided;
}

HyperNumber div(const HyperNumber& u, const HyperNumber& v, const FilterOracle& oracle) {
  const IndexSet zeros = eventual_sets(v, HyperNumber::embed(0)).equal;
  const Decision d = oracle.decide(zeros);
  if (d != Decision::Small)
    throw DivisorVanishesOnLargeSet("zero set " + zeros.to_string() + " of the divisor is " +
                                    to_string(d) + " under " + oracle.to_string());
  return HyperNumber::pointwise_quotient(u, v);
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::Infinitesimal:
      return "INFINITESIMAL";
    case Kind::Appreciable:
      return standard_part ? "APPRECIABLE(st=" + stevin::to_string(*standard_part) + ")"
                           : "APPRECIABLE(st undecided)";
    case Kind::Unlimited:
      return "UNLIMITED";
    case Kind::Undecided:
      return "UNDECIDED";
  }
  return {};
}

namespace {

Classification classify_class(const NtFraction& f) {
  switch (f.kind()) {
    case NtFraction::Kind::Zero:
    case NtFraction::Kind::Infinitesimal:
      return {Classification::Kind::Infinitesimal, Rational(0)};
    case NtFraction::Kind::Appreciable:
      return {Classification::Kind::Appreciable, f.limit()};
    case NtFraction::Kind::Unlimited:
      return {Classification::Kind::Unlimited, std::nullopt};
  }
  return {};
}

}  // namespace

// Finite exceptions never affect a decision, so each parity class is judged
// by its eventual rational-function form.
Classification classify(const HyperNumber& u, const FilterOracle& oracle) {
  if (oracle.kind() == FilterOracle::Kind::ProfinitePoint) {
    const std::int64_t z = oracle.point_value();
    return classify_class(u.form(static_cast<int>(((z % 2) + 2) % 2)));
  }
  const Classification even = classify_class(u.form(0));
  const Classification odd = classify_class(u.form(1));
  if (even.kind != odd.kind) return {};
  Classification out{even.kind, std::nullopt};
  if (even.standard_part && odd.standard_part && *even.standard_part == *odd.standard_part)
    out.standard_part = even.standard_part;
  return out;
}

Rational standard_part(const HyperNumber& u, const FilterOracle& oracle) {
  const Classification c = classify(u, oracle);
  switch (c.kind) {
    case Classification::Kind::Unlimited:
      throw NotFinite(u.to_string() + " is unlimited");
    case Classification::Kind::Undecided:
      throw Undecided("classification of " + u.to_string() + " is undecided under " +
                      oracle.to_string());
    default:
      break;
  }
  if (!c.standard_part)
    throw Undecided("standard part of " + u.to_string() + " is undecided under " + oracle.to_string());
  return *c.standard_part;
}

StevinDigits standard_part_digits(const HyperNumber& u, const FilterOracle& oracle,
                                  std::size_t digits) {
  return to_decimal(standard_part(u, oracle), digits);
}

std::string to_string(LosResult r) {
  switch (r) {
    case LosResult::Holds:
      return "HOLDS";
    case LosResult::Fails:
      return "FAILS";
    case LosResult::Undecided:
      return "UNDECIDED";
  }
  return {};
}

LosResult los_check(const HyperNumber& lhs, const HyperNumber& rhs, const FilterOracle& oracle) {
  switch (oracle.decide(eventual_sets(lhs, rhs).equal)) {
    case Decision::Large:
      return LosResult::Holds;
    case Decision::Small:
      return LosResult::Fails;
    case Decision::Undecided:
      break;
  }
  return LosResult::Undecided;
}

LosResult los_check(std::string_view lhs, std::string_view rhs,
                    const std::map<std::string, HyperNumber>& env, const FilterOracle& oracle) {
  return los_check(HyperNumber::parse(lhs, env), HyperNumber::parse(rhs, env), oracle);
}

bool rational_trace_check(const HyperNumber& u, const Rational& r, const FilterOracle& oracle) {
  return compare(u, HyperNumber::embed(r), oracle) == Relation::Equal;
}

}  // namespace stevin
