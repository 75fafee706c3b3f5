// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include "stevin/errors.hpp"
#include "stevin/hyper.hpp"
#include "stevin/index_set.hpp"
#include "stevin/lightstone.hpp"
#include "stevin/order_estimate.hpp"
#include "stevin/roots.hpp"
#include "stevin/series.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

using namespace stevin;

namespace {

// nullopt on success, otherwise what went wrong.
using Outcome = std::optional<std::string>;

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Independent oracles

std::pair<Rational, Rational> reference_bisect(const Polynomial& p, Rational a, Rational b,
                                               const Rational& width) {
  const bool rising = p(a) < 0;
  while (b - a > width) {
    const Rational m = (a + b) / 2;
    const Rational v = p(m);
    if (v == 0) return {m, m};
    if ((v < 0) == rising) {
      a = m;
    } else {
      b = m;
    }
  }
  return {a, b};
}

Rational formal_derivative(const Polynomial& p, const Rational& x0) {
  Rational sum = 0;
  Rational power = 1;
  for (std::size_t k = 1; k < p.coefficients().size(); ++k) {
    sum += Rational(static_cast<long>(k)) * p.coefficients()[k] * power;
    power *= x0;
  }
  return sum;
}

// A cubic with integer coefficients and a strict sign change on [a, a + 1].
struct BracketedCubic {
  Polynomial p;
  Rational a;
  Rational b;
};

BracketedCubic random_bracketed_cubic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cf(-9, 9);
  std::uniform_int_distribution<int> start(-5, 4);
  for (;;) {
    std::vector<Rational> c(4);
    for (auto& v : c) v = cf(rng);
    if (c[3] == 0) continue;
    const Polynomial p(c);
    const Rational a = start(rng);
    if (sign_change(p, a, a + 1)) return {p, a, a + 1};
  }
}

SeriesNumber random_series(std::mt19937_64& rng, bool exact, bool positive_square_lead) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> num(-6, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> cf(-9, 9);
  std::vector<SeriesTerm> terms;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    int v = cf(rng);
    if (v == 0) v = 2;
    terms.push_back({Rational(num(rng)) / den(rng), v});
  }
  SeriesNumber x(terms);
  if (!x.has_terms()) return random_series(rng, exact, positive_square_lead);  // all cancelled
  if (positive_square_lead) {
    std::uniform_int_distribution<int> root(1, 7);
    const int r = root(rng);
    const int s = root(rng);
    x = x * SeriesNumber::from_rational(Rational(r * r, s * s) / x.leading().coefficient);
  }
  if (exact) return x;
  return x.truncated(x.leading().exponent + 3);
}

bool agrees_below(const SeriesNumber& a, const SeriesNumber& b, const Rational& t) {
  for (const auto& term : (a - b).terms())
    if (term.exponent < t) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Criteria

Outcome sqrt2_digits() {
  const auto start = std::chrono::steady_clock::now();
  const StevinDigits r = stevin_root(Polynomial{-2, 0, 1}, 1, 2, 50);
  const double elapsed = seconds_since(start);
  const std::string oracle =
      boost::multiprecision::sqrt(Integer(2) * pow10(100)).str();  // 51 digits: 1 then 50
  const std::string got = r.integer_part.str() + [&] {
    std::string d;
    for (auto x : r.digits) d += static_cast<char>('0' + x);
    return d;
  }();
  if (r.exact || r.digits.size() != 50) return "expected 50 inexact digits";
  if (got != oracle) return cat("digits differ: ", got, " vs ", oracle);
  if (elapsed >= 1.0) return cat("took ", elapsed, " s");
  return std::nullopt;
}

Outcome digit_per_iteration() {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 30; ++k) {
    const BracketedCubic c = random_bracketed_cubic(rng);
    for (unsigned parts : {10u, 2u}) {
      SubdivisionStream s(c.p, c.a, c.b, parts);
      Rational expected = c.b - c.a;
      for (int m = 0; m <= 15; ++m) {
        const auto e = s.next();
        if (!e) return "stream ended early";
        if (e->exact_root) break;  // a rational root was hit; the width law stops there
        if (e->width() != expected)
          return cat("width after ", m, " steps of ", parts, "-way subdivision is ",
                     to_string(e->width()), ", expected ", to_string(expected));
        expected /= parts;
      }
    }
  }
  const Polynomial sqrt2{-2, 0, 1};
  for (std::size_t d = 1; d <= 15; ++d) {
    const StrategyComparison cmp = compare_strategies(sqrt2, 1, 2, d);
    const auto want_bisect = static_cast<std::size_t>(std::ceil(d * std::log2(10.0)));
    if (cmp.stevin_iterations != d || cmp.bisect_iterations != want_bisect || cmp.exact_hit())
      return cat("d=", d, ": stevin ", cmp.stevin_iterations, ", bisect ", cmp.bisect_iterations,
                 " (expected ", d, ", ", want_bisect, ")");
  }
  return std::nullopt;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(103);
  const Rational width(Integer(1), pow10(14));
  for (int k = 0; k < 100; ++k) {
    const BracketedCubic c = random_bracketed_cubic(rng);
    const StevinDigits got = stevin_root(c.p, c.a, c.b, 12);
    auto [lo, hi] = reference_bisect(c.p, c.a, c.b, width);
    // A root within 10^-14 of a rank-12 grid line leaves the reference
    // undecided; keep halving the same bracket until it decides.
    Rational w = width;
    while (to_decimal(lo, 12) != to_decimal(hi, 12) && w > Rational(Integer(1), pow10(80))) {
      w /= 2;
      std::tie(lo, hi) = reference_bisect(c.p, lo, hi, w);
    }
    const Rational want_lo = to_decimal(lo, 12).value();
    const Rational want_hi = to_decimal(hi, 12).value();
    const Rational mine = to_decimal(got.value(), 12).value();
    if (want_lo == want_hi) {
      if (mine != want_lo)
        return cat(to_string(c.p), " on [", to_string(c.a), ", ", to_string(c.b), "]: ",
                   got.to_string(), " vs ", to_decimal(lo, 12).to_string());
      continue;
    }
    // The reference enclosure straddles a rank-12 grid line: both schemes
    // must then certify the same straddled point.
    SubdivisionStream ten = stevin_stream(c.p, c.a, c.b);
    SubdivisionStream two = bisection_stream(c.p, c.a, c.b);
    const StabilityReport r10 = digit_stability(ten, 12);
    const StabilityReport r2 = digit_stability(two, 12);
    if (r10.status != StabilityReport::Status::StraddlesGrid ||
        r2.status != StabilityReport::Status::StraddlesGrid || r10.grid_point != r2.grid_point)
      return cat(to_string(c.p), ": reference straddles a grid line without a matching report");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) return cat("took ", elapsed, " s");
  return std::nullopt;
}

Outcome tail_of_nines() {
  SubdivisionStream s = bisection_stream(Polynomial{Rational(-1, 2), 1}, 0, Rational(9, 10));
  const StabilityReport r = digit_stability(s, 1, 10000);
  if (r.status != StabilityReport::Status::StraddlesGrid) return "reported a stabilized digit";
  if (r.grid_point != Rational(1, 2)) return cat("straddled ", to_string(r.grid_point));
  if (r.at_iteration > 10000) return "proof came after the budget";
  return std::nullopt;
}

Outcome cauchy_orders() {
  std::mt19937_64 rng(107);
  for (int k = 0; k < 500; ++k) {
    const SeriesNumber x = random_series(rng, k % 3 != 0, false);
    const SeriesNumber y = random_series(rng, k % 4 != 0, false);
    if (order(x * y).value != order(x).value + order(y).value)
      return cat("order not additive for ", to_string(x), " times ", to_string(y));
  }
  for (int k = 0; k < 100; ++k) {
    const SeriesNumber x = random_series(rng, k % 2 == 0, true);
    const SeriesNumber r = sqrt(x, 4);
    Rational bound = x.leading().exponent + 4;
    if (x.truncation()) bound = std::min(bound, *x.truncation());
    if (!agrees_below(r * r, x, bound)) return cat("sqrt(x)^2 != x for ", to_string(x));
  }
  const SeriesNumber root = sqrt(SeriesNumber::base_i(), 10);
  if (root != SeriesNumber::monomial(1, Rational(1, 2)) || !root.is_exact())
    return cat("sqrt(i) = ", to_string(root));
  return std::nullopt;
}

Outcome orders_infinity_and_zero() {
  const std::vector<Rational> probes{Rational(1, 10), 1, 10, 100};
  const OrderEstimate e = estimate_order_numeric(CatalogFunction::exp_neg_inv(), probes, 8);
  if (e.value != OrderValue::infinite()) return cat("e^(-1/i): ", e.value.to_string());
  const OrderEstimate l = estimate_order_numeric(CatalogFunction::inv_log(), probes, 8);
  if (l.value != OrderValue::finite(0)) return cat("1/log i: ", l.value.to_string());
  return std::nullopt;
}

Outcome derivative_via_st() {
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_int_distribution<int> cf(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& v : coeffs) v = Rational(cf(rng)) / den(rng);
    const Polynomial p(coeffs);
    const Rational x0 = Rational(cf(rng)) / den(rng);
    const Rational got = deriv_at(p, x0);
    const Rational want = formal_derivative(p, x0);
    if (got != want)
      return cat(to_string(p), " at ", to_string(x0), ": ", to_string(got), " vs ", to_string(want));
  }
  return std::nullopt;
}

Outcome sign_ambiguity() {
  const HyperNumber u = HyperNumber::parse("(-1)^n/n");
  const HyperNumber zero = HyperNumber::embed(0);
  const Relation p0 = compare(u, zero, FilterOracle::point(0));
  const Relation pm1 = compare(u, zero, FilterOracle::point(-1));
  const Relation fr = compare(u, zero, FilterOracle::frechet());
  if (p0 != Relation::Greater || pm1 != Relation::Less || fr != Relation::Undecided)
    return cat("point:0 ", to_string(p0), ", point:-1 ", to_string(pm1), ", frechet ",
               to_string(fr));
  return std::nullopt;
}

Outcome filter_laws() {
  std::vector<FilterOracle> oracles{FilterOracle::frechet()};
  for (std::int64_t z : {-5, -1, 0, 1, 6, 27720}) oracles.push_back(FilterOracle::point(z));
  std::mt19937_64 rng(113);
  auto perturb = [&](const IndexSet& s) {
    std::uniform_int_distribution<Index> pick(0, 50);
    std::set<Index> add{pick(rng), pick(rng)};
    std::set<Index> drop{pick(rng), pick(rng)};
    return (s | IndexSet::finite(add)) & IndexSet::finite(drop).complement();
  };
  std::vector<IndexSet> classes;
  for (Index m = 1; m <= 24; ++m)
    for (Index r = 0; r < m; ++r) classes.push_back(IndexSet::residue_class(r, m));
  for (const auto& base_a : classes) {
    for (const auto& base_b : classes) {
      const IndexSet a = perturb(base_a);
      const IndexSet b = perturb(base_b);
      const IndexSet both = a & b;
      const IndexSet either = a | b;
      for (const auto& f : oracles) {
        const Decision da = f.decide(a);
        const Decision db = f.decide(b);
        if (da == Decision::Large && db == Decision::Large && f.decide(both) != Decision::Large)
          return cat("intersection law fails for ", a.to_string(), " and ", b.to_string());
        if (da == Decision::Large && f.decide(either) != Decision::Large)
          return cat("superset law fails for ", a.to_string());
        if (f.kind() == FilterOracle::Kind::ProfinitePoint &&
            (da == Decision::Undecided || f.decide(both) == Decision::Undecided))
          return cat(f.to_string(), " leaves ", a.to_string(), " undecided");
      }
    }
  }
  for (const auto& f : oracles)
    if (f.decide(IndexSet::empty()) != Decision::Small) return "empty set not small";
  // Refinement consistency.
  for (Index m = 1; m <= 24; ++m) {
    for (Index m2 = 1; m2 <= 24; ++m2) {
      std::vector<bool> residues(m);
      std::bernoulli_distribution coin(0.5);
      for (Index r = 0; r < m; ++r) residues[r] = coin(rng);
      const IndexSet s = perturb(IndexSet(m, residues, {}, {}));
      const IndexSet lifted = s.lifted_to(m2);
      for (const auto& f : oracles)
        if (f.decide(lifted) != f.decide(s))
          return cat(f.to_string(), " changes its decision on ", s.to_string(), " lifted to ", m2);
    }
  }
  return std::nullopt;
}

Outcome st_homomorphism() {
  std::mt19937_64 rng(127);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 99);
  const FilterOracle f = FilterOracle::point(0);
  for (int k = 0; k < 100; ++k) {
    const Rational q = Rational(num(rng)) / den(rng);
    if (standard_part(HyperNumber::embed(q), f) != q) return cat("st(embed(", to_string(q), "))");
  }
  std::uniform_int_distribution<int> cf(-6, 6);
  auto finite_generator = [&] {
    // (a n + b) / (c n + d) + e (-1)^n / n, limit a/c on both parity classes.
    int a = cf(rng), b = cf(rng), c = cf(rng), d = cf(rng), e = cf(rng);
    if (c == 0) c = 3;
    return HyperNumber::parse(cat("(", a, "*n + ", b, ")/(", c, "*n + ", d, ") + ", e,
                                  "*(-1)^n/n"));
  };
  for (int k = 0; k < 100; ++k) {
    const HyperNumber u = finite_generator();
    const HyperNumber v = finite_generator();
    for (const auto& oracle : {f, FilterOracle::frechet()}) {
      const Rational su = standard_part(u, oracle);
      const Rational sv = standard_part(v, oracle);
      if (standard_part(u + v, oracle) != su + sv) return cat("st(u+v) for ", u.to_string());
      if (standard_part(u * v, oracle) != su * sv) return cat("st(uv) for ", u.to_string());
    }
  }
  for (const auto& oracle : {f, FilterOracle::point(-1), FilterOracle::frechet()})
    if (los_check(HyperNumber::epsilon() * HyperNumber::omega(), HyperNumber::embed(1), oracle) !=
        LosResult::Holds)
      return cat("eps*omega = 1 does not hold under ", oracle.to_string());
  return std::nullopt;
}

Outcome lightstone() {
  const HyperNumber third = HyperNumber::embed(Rational(1, 3));
  const HyperNumber truncated = HyperNumber::parse("(10^n - 1)/(3*10^n)");
  const std::vector<FilterOracle> oracles{FilterOracle::frechet(), FilterOracle::point(0),
                                          FilterOracle::point(-1)};
  for (const auto& f : oracles) {
    if (compare(third, truncated, f) != Relation::Greater)
      return cat("1/3 vs truncated thirds under ", f.to_string());
    for (std::size_t k = 1; k <= 10; ++k) {
      const LightstoneRendering a = lightstone_render(third, k, f);
      const LightstoneRendering b = lightstone_render(truncated, k, f);
      if (a.finite_digits != b.finite_digits || a.integer_part != b.integer_part)
        return cat("finite digits differ at K=", k);
      if (a.pattern != InfinitePattern{InfinitePattern::Kind::Constant, 3, 0})
        return cat("1/3 pattern: ", a.pattern.describe());
      if (b.pattern != InfinitePattern{InfinitePattern::Kind::UpToHThen, 3, 0})
        return cat("truncated thirds pattern: ", b.pattern.describe());
    }
  }
  return std::nullopt;
}

struct Process {
  int status;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string command = std::string("'") + STEVIN_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome cli() {
  const Process root = run_cli("root 'x^2-2' --bracket 1 2 --digits 6");
  if (root.status != 0 || root.out != "1.414213\n")
    return cat("root: exit ", root.status, ", output '", root.out, "'");
  const Process sign = run_cli("hyper sign '(-1)^n/n' --filter point:0");
  if (sign.status != 0 || sign.out != "POSITIVE\n")
    return cat("hyper sign: exit ", sign.status, ", output '", sign.out, "'");
  const std::string compare_args = "compare 'x^2-2' --bracket 1 2 --digits 10 --json";
  const Process first = run_cli(compare_args);
  const Process second = run_cli(compare_args);
  if (first.status != 0) return cat("compare: exit ", first.status);
  if (first.out.find("\"stevin_iterations\":10,\"bisect_iterations\":34") == std::string::npos)
    return cat("compare: output '", first.out, "'");
  if (first.out != second.out) return "compare JSON differs between runs";
  const Process bad = run_cli("root 'x^2+1' --bracket 0 1");
  if (bad.status != 1 || bad.out.find("NoSignChange") == std::string::npos)
    return cat("math error: exit ", bad.status);
  const Process usage = run_cli("root 'x^2-2'");
  if (usage.status != 2) return cat("usage error: exit ", usage.status);
  return std::nullopt;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "sqrt(2) to 50 digits matches the integer square root", sqrt2_digits},
      {2, "digit-per-iteration width law and iteration counts", digit_per_iteration},
      {3, "stevin_root agrees with reference bisection on 100 cubics", oracle_equivalence},
      {4, "tail of 9s: x - 1/2 on [0, 9/10] straddles 1/2", tail_of_nines},
      {5, "order is a valuation; sqrt squares back; sqrt(i) = i^(1/2)", cauchy_orders},
      {6, "orders infinity and 0 for e^(-1/i) and 1/log i", orders_infinity_and_zero},
      {7, "derivative as st(dy/dx) equals the formal derivative", derivative_via_st},
      {8, "sign of (-1)^n/n depends on the ultrafilter", sign_ambiguity},
      {9, "filter laws over the progression algebra up to modulus 24", filter_laws},
      {10, "st homomorphism, embedding, eps*omega = 1", st_homomorphism},
      {11, "Lightstone rendering of 1/3 vs truncated thirds", lightstone},
      {12, "CLI examples, exit codes and deterministic JSON", cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = cat("threw ", e.what());
    }
    const double elapsed = seconds_since(start);
    std::printf("%s  %2d  %s  (%.2f s)", outcome ? "FAIL" : "PASS", c.id, c.name, elapsed);
    if (outcome) std::printf(": %s", outcome->c_str());
    std::printf("\n");
    if (outcome) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
