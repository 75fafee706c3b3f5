#include "stevin/cli.hpp"

#include "stevin/decimal.hpp"
#include "stevin/errors.hpp"
#include "stevin/exact.hpp"
#include "stevin/hyper.hpp"
#include "stevin/lightstone.hpp"
#include "stevin/order_estimate.hpp"
#include "stevin/roots.hpp"
#include "stevin/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace stevin {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kFallbackDigits = 10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t default_digits() {
  const char* env = std::getenv("STEVIN_DIGITS");
  if (env == nullptr || *env == '\0') return kFallbackDigits;
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || value == 0)
    throw UsageError("STEVIN_DIGITS must be a positive integer");
  return value;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw UsageError("empty list '" + text + "'");
  return out;
}

std::string stability_text(const StabilityReport& r) {
  if (r.status == StabilityReport::Status::Stabilized)
    return "STABILIZED(iteration " + std::to_string(r.at_iteration) + ", digit " +
           std::to_string(r.digit) + ")";
  return "STRADDLES_GRID(" + to_string(r.grid_point) + ")";
}

Json stability_json(const StabilityReport& r) {
  Json j;
  j["rank"] = r.rank;
  if (r.status == StabilityReport::Status::Stabilized) {
    j["status"] = "STABILIZED";
    j["at_iteration"] = r.at_iteration;
    j["digit"] = r.digit;
  } else {
    j["status"] = "STRADDLES_GRID";
    j["at_iteration"] = r.at_iteration;
    j["grid_point"] = to_string(r.grid_point);
  }
  return j;
}

std::string sign_word(Relation r) {
  switch (r) {
    case Relation::Greater:
      return "POSITIVE";
    case Relation::Less:
      return "NEGATIVE";
    case Relation::Equal:
      return "ZERO";
    case Relation::Undecided:
      break;
  }
  return "UNDECIDED";
}

std::string pattern_name(const InfinitePattern& p) {
  switch (p.kind) {
    case InfinitePattern::Kind::Constant:
      return "CONSTANT(" + std::to_string(p.first) + ")";
    case InfinitePattern::Kind::UpToHThen:
      return "UP_TO_H_THEN(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    case InfinitePattern::Kind::Unknown:
      break;
  }
  return "UNKNOWN";
}

// Collected while a command runs; printed once at the end.
struct Report {
  std::string command;
  Json input = Json::object();
  std::optional<std::string> oracle;
  std::optional<std::size_t> digits;
  Json result;
  std::optional<std::string> pattern;
  std::optional<std::size_t> iterations;
  std::string text;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["input"] = input;
    if (oracle) j["oracle"] = *oracle;
    if (digits) j["digits"] = *digits;
    j["result"] = result;
    if (pattern) j["pattern"] = *pattern;
    if (iterations) j["iterations"] = *iterations;
    return j;
  }
};

struct Options {
  std::string polynomial;
  std::vector<std::string> bracket;
  std::optional<std::size_t> digits;
  std::string tol = "1/1000000";
  std::optional<std::size_t> stability_rank;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string at = "0";
  std::string series;
  std::string catalog;
  std::string probes = "1/10,1,10,100";
  unsigned depth = 8;
  std::string generator;
  std::string rhs;
  std::vector<std::string> lets;
  std::string filter = "point:0";
  bool json = false;
};

std::pair<Rational, Rational> bracket_of(const Options& o) {
  if (o.bracket.size() != 2) throw UsageError("--bracket needs exactly two values");
  return {parse_rational(o.bracket[0]), parse_rational(o.bracket[1])};
}

Json bracket_json(const Options& o) { return Json::array({o.bracket[0], o.bracket[1]}); }

void run_root(const Options& o, Report& rep) {
  const Polynomial p = parse_polynomial(o.polynomial);
  auto [a, b] = bracket_of(o);
  const std::size_t digits = o.digits.value_or(default_digits());
  rep.input = {{"polynomial", to_string(p)}, {"bracket", bracket_json(o)}};
  rep.digits = digits;
  const StevinDigits r = stevin_root(p, a, b, digits);
  rep.result = {{"decimal", r.to_string()}, {"exact", r.exact}};
  rep.text = r.to_string() + (r.exact ? " (exact)" : "");
}

void run_ivt(const Options& o, Report& rep) {
  const Polynomial p = parse_polynomial(o.polynomial);
  auto [a, b] = bracket_of(o);
  const Rational tol = parse_rational(o.tol);
  rep.input = {{"polynomial", to_string(p)}, {"bracket", bracket_json(o)}, {"tol", to_string(tol)}};
  const BisectionResult r = cauchy_bisect(p, a, b, tol);
  rep.iterations = r.iterations;
  rep.result = {{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"exact", r.exact}};
  std::ostringstream text;
  if (r.exact) {
    text << "exact root " << to_string(r.lo);
  } else {
    text << "[" << to_string(r.lo) << ", " << to_string(r.hi) << "]";
  }
  text << " after " << r.iterations << " bisection steps";
  if (o.stability_rank) {
    SubdivisionStream stream = bisection_stream(p, a, b);
    const StabilityReport s = digit_stability(stream, *o.stability_rank, o.max_steps);
    rep.result["stability"] = stability_json(s);
    text << "\nrank " << *o.stability_rank << ": " << stability_text(s);
  }
  rep.text = text.str();
}

void run_compare(const Options& o, Report& rep) {
  const Polynomial p = parse_polynomial(o.polynomial);
  auto [a, b] = bracket_of(o);
  const std::size_t digits = o.digits.value_or(default_digits());
  rep.input = {{"polynomial", to_string(p)}, {"bracket", bracket_json(o)}};
  rep.digits = digits;
  const StrategyComparison c = compare_strategies(p, a, b, digits);
  rep.result = {{"polynomial", to_string(p)},
                {"digits", digits},
                {"stevin_iterations", c.stevin_iterations},
                {"bisect_iterations", c.bisect_iterations},
                {"exact_hit", c.exact_hit()}};
  std::ostringstream text;
  text << "stevin (ten-way): " << c.stevin_iterations << " iterations"
       << (c.stevin_exact_hit ? " (exact hit)" : "") << "\n"
       << "bisection:        " << c.bisect_iterations << " iterations"
       << (c.bisect_exact_hit ? " (exact hit)" : "");
  rep.text = text.str();
}

void run_derive(const Options& o, Report& rep) {
  const Polynomial p = parse_polynomial(o.polynomial);
  const Rational x0 = parse_rational(o.at);
  rep.input = {{"polynomial", to_string(p)}, {"at", to_string(x0)}};
  const Rational d = deriv_at(p, x0);
  rep.result = to_string(d);
  rep.text = to_string(d);
}

void run_order(const Options& o, Report& rep) {
  if (!o.catalog.empty()) {
    if (!o.series.empty()) throw UsageError("give either a series or --catalog, not both");
    const CatalogFunction f = CatalogFunction::parse(o.catalog);
    const std::vector<Rational> probes = parse_list(o.probes);
    Json probe_json = Json::array();
    for (const auto& r : probes) probe_json.push_back(to_string(r));
    rep.input = {{"catalog", f.name()}, {"probes", probe_json}, {"depth", o.depth}};
    const OrderEstimate e = estimate_order_numeric(f, probes, o.depth);
    rep.result = {{"order", e.value.to_string()}};
    if (e.lower) rep.result["lower"] = to_string(*e.lower);
    if (e.upper) rep.result["upper"] = to_string(*e.upper);
    rep.text = e.value.to_string();
    if (e.value.kind == OrderValue::Kind::Finite && (e.lower != e.upper))
      rep.text += " (estimate, bracketed by probes)";
    return;
  }
  if (o.series.empty()) throw UsageError("order needs a series or --catalog");
  const SeriesNumber x = parse_series(o.series);
  rep.input = {{"series", to_string(x)}};
  const OrderValue v = order(x);
  rep.result = {{"order", v.to_string()}};
  rep.text = v.to_string();
}

void run_hyper(const std::string& action, const Options& o, Report& rep) {
  const FilterOracle oracle = FilterOracle::parse(o.filter);
  rep.command = "hyper " + action;
  rep.oracle = oracle.to_string();
  if (action == "los") {
    std::map<std::string, HyperNumber> env;
    Json lets = Json::object();
    for (const auto& binding : o.lets) {
      const auto eq = binding.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--let expects name=generator");
      const std::string name = binding.substr(0, eq);
      if (name == "n") throw UsageError("'n' is reserved for the index");
      env.insert_or_assign(name, HyperNumber::parse(binding.substr(eq + 1)));
      lets[name] = binding.substr(eq + 1);
    }
    rep.input = {{"lhs", o.generator}, {"rhs", o.rhs}, {"let", lets}};
    const LosResult r = los_check(o.generator, o.rhs, env, oracle);
    rep.result = to_string(r);
    rep.text = to_string(r);
    return;
  }
  const HyperNumber u = HyperNumber::parse(o.generator);
  rep.input = {{"generator", u.to_string()}};
  if (action == "sign") {
    const std::string word = sign_word(compare(u, HyperNumber::embed(0), oracle));
    rep.result = word;
    rep.text = word;
  } else if (action == "classify") {
    const Classification c = classify(u, oracle);
    rep.result = c.to_string();
    rep.text = c.to_string();
  } else if (action == "st") {
    const std::size_t digits = o.digits.value_or(default_digits());
    rep.digits = digits;
    const Rational s = standard_part(u, oracle);
    const StevinDigits d = to_decimal(s, digits);
    rep.result = {{"rational", to_string(s)}, {"decimal", d.to_string()}, {"exact", d.exact}};
    rep.text = to_string(s) + " = " + d.to_string() + (d.exact ? "" : "...");
  }
}

void run_render(const Options& o, Report& rep) {
  const FilterOracle oracle = FilterOracle::parse(o.filter);
  const HyperNumber u = HyperNumber::parse(o.generator);
  const std::size_t digits = o.digits.value_or(default_digits());
  rep.input = {{"generator", u.to_string()}};
  rep.oracle = oracle.to_string();
  rep.digits = digits;
  const LightstoneRendering r = lightstone_render(u, digits, oracle);
  std::string finite = (r.negative ? "-" : "") + r.integer_part.str() + ".";
  for (auto d : r.finite_digits) finite += static_cast<char>('0' + d);
  rep.result = finite;
  rep.pattern = pattern_name(r.pattern);
  rep.text = r.to_string();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decimal roots, Cauchy infinitesimal orders and ultrapower hypernumbers"};
  app.name("stevin");
  app.require_subcommand(1);
  Options o;

  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("polynomial", o.polynomial, "polynomial in x, e.g. \"x^2 - 2\"")->required();
  };
  auto add_bracket = [&](CLI::App* sub) {
    sub->add_option("--bracket", o.bracket, "bracket endpoints A B")->expected(2)->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "number of decimal digits (default: $STEVIN_DIGITS or 10)")
        ->check(CLI::PositiveNumber);
  };
  auto add_filter = [&](CLI::App* sub) {
    sub->add_option("--filter", o.filter, "frechet | point:<integer>")->capture_default_str();
  };

  auto* root = app.add_subcommand("root", "decimal digits of a root by ten-way subdivision");
  add_poly(root);
  add_bracket(root);
  add_digits(root);
  add_json(root);

  auto* ivt = app.add_subcommand("ivt", "bisection enclosure of a root");
  add_poly(ivt);
  add_bracket(ivt);
  ivt->add_option("--tol", o.tol, "target width P/Q")->capture_default_str();
  ivt->add_option("--stability", o.stability_rank, "report digit stability at this rank")
      ->check(CLI::PositiveNumber);
  ivt->add_option("--max-steps", o.max_steps, "step budget for --stability")->capture_default_str();
  add_json(ivt);

  auto* cmp = app.add_subcommand("compare", "iterations of ten-way subdivision vs bisection");
  add_poly(cmp);
  add_bracket(cmp);
  add_digits(cmp);
  add_json(cmp);

  auto* derive = app.add_subcommand("derive", "derivative as the standard part of dy/dx");
  add_poly(derive);
  derive->add_option("--at", o.at, "point x0")->required();
  add_json(derive);

  auto* ord = app.add_subcommand("order", "order of an infinitesimal");
  ord->add_option("series", o.series, "series in i, e.g. \"i^3 + 5*i^5\"");
  ord->add_option("--catalog", o.catalog, "exp_neg_inv | inv_log | monomial:<a>");
  ord->add_option("--probes", o.probes, "comma-separated exponents r")->capture_default_str();
  ord->add_option("--depth", o.depth, "samples i = 10^-m, m = 1..depth")->capture_default_str();
  add_json(ord);

  auto* hyper = app.add_subcommand("hyper", "hypernumbers in Q^N modulo a filter");
  hyper->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> hyper_actions;
  for (const char* name : {"sign", "st", "classify"}) {
    auto* sub = hyper->add_subcommand(name);
    sub->add_option("generator", o.generator, "sequence in n, e.g. \"(-1)^n/n\"")->required();
    add_filter(sub);
    add_json(sub);
    if (std::string(name) == "st") add_digits(sub);
    hyper_actions.emplace_back(name, sub);
  }
  auto* los = hyper->add_subcommand("los", "does LHS = RHS hold on a large index set?");
  los->add_option("lhs", o.generator)->required();
  los->add_option("rhs", o.rhs)->required();
  los->add_option("--let", o.lets, "name=generator binding (repeatable)");
  add_filter(los);
  add_json(los);
  hyper_actions.emplace_back("los", los);

  auto* render = app.add_subcommand("render", "Lightstone extended decimal expansion");
  render->add_option("generator", o.generator)->required();
  add_digits(render);
  add_filter(render);
  add_json(render);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Report rep;
  try {
    if (root->parsed()) {
      rep.command = "root";
      run_root(o, rep);
    } else if (ivt->parsed()) {
      rep.command = "ivt";
      run_ivt(o, rep);
    } else if (cmp->parsed()) {
      rep.command = "compare";
      run_compare(o, rep);
    } else if (derive->parsed()) {
      rep.command = "derive";
      run_derive(o, rep);
    } else if (ord->parsed()) {
      rep.command = "order";
      run_order(o, rep);
    } else if (render->parsed()) {
      rep.command = "render";
      run_render(o, rep);
    } else {
      for (auto& [name, sub] : hyper_actions)
        if (sub->parsed()) run_hyper(name, o, rep);
    }
  } catch (const MathError& e) {
    if (o.json) {
      Json j;
      j["command"] = rep.command;
      j["input"] = rep.input;
      if (rep.oracle) j["oracle"] = *rep.oracle;
      if (rep.digits) j["digits"] = *rep.digits;
      j["error"] = {{"name", e.name()}, {"message", e.what()}};
      out << j.dump() << "\n";
    } else {
      out << "error: " << e.name() << ": " << e.what() << "\n";
    }
    return kExitMathError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.json) {
    out << rep.to_json().dump() << "\n";
  } else {
    out << rep.text << "\n";
  }
  return kExitOk;
}

}  // namespace stevin
