#include "stevin/index_set.hpp"

#include <numeric>
#include <stdexcept>

namespace stevin {

IndexSet::IndexSet(Raw, Index modulus, std::vector<bool> residues, std::set<Index> additions,
                   std::set<Index> removals)
    : modulus_(modulus),
      residues_(std::move(residues)),
      additions_(std::move(additions)),
      removals_(std::move(removals)) {
  if (modulus_ == 0 || residues_.size() != modulus_)
    throw std::invalid_argument("IndexSet: residue table must have `modulus` entries");
}

IndexSet::IndexSet(Index modulus, std::vector<bool> residues, std::set<Index> additions,
                   std::set<Index> removals)
    : IndexSet(Raw{}, modulus, std::move(residues), std::move(additions), std::move(removals)) {
  normalize();
}

void IndexSet::normalize() {
  // Membership of the exceptional points under (progression \ D) U A.
  std::set<Index> candidates = additions_;
  candidates.insert(removals_.begin(), removals_.end());
  std::set<Index> members;
  for (Index n : candidates)
    if (additions_.count(n) != 0 || (in_progression(n) && removals_.count(n) == 0)) members.insert(n);

  for (Index d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool periodic = true;
    for (Index r = d; r < modulus_ && periodic; ++r) periodic = residues_[r] == residues_[r % d];
    if (periodic) {
      residues_.resize(d);
      modulus_ = d;
      break;
    }
  }

  additions_.clear();
  removals_.clear();
  for (Index n : candidates) {
    const bool member = members.count(n) != 0;
    if (member && !in_progression(n)) additions_.insert(n);
    if (!member && in_progression(n)) removals_.insert(n);
  }
}

IndexSet IndexSet::residue_class(Index r, Index m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  if (r >= m) throw std::invalid_argument("residue must be below the modulus");
  std::vector<bool> res(m, false);
  res[r] = true;
  return IndexSet(m, std::move(res), {}, {});
}

IndexSet IndexSet::finite(std::set<Index> members) {
  return IndexSet(1, {false}, std::move(members), {});
}

IndexSet IndexSet::eventually(Index modulus, std::vector<bool> residues, Index threshold,
                              const std::function<bool(Index)>& member) {
  std::set<Index> add;
  std::set<Index> remove;
  for (Index n = 0; n < threshold; ++n) {
    const bool prog = residues[n % modulus];
    const bool in = member(n);
    if (in && !prog) add.insert(n);
    if (!in && prog) remove.insert(n);
  }
  return IndexSet(modulus, std::move(residues), std::move(add), std::move(remove));
}

bool IndexSet::contains(Index n) const {
  if (additions_.count(n) != 0) return true;
  return in_progression(n) && removals_.count(n) == 0;
}

bool IndexSet::is_finite() const {
  for (bool r : residues_)
    if (r) return false;
  return true;
}

bool IndexSet::is_cofinite() const {
  for (bool r : residues_)
    if (!r) return false;
  return true;
}

IndexSet IndexSet::lifted_to(Index m) const {
  const Index l = std::lcm(modulus_, m);
  std::vector<bool> res(l);
  for (Index r = 0; r < l; ++r) res[r] = residues_[r % modulus_];
  return IndexSet(Raw{}, l, std::move(res), additions_, removals_);
}

IndexSet IndexSet::complement() const {
  std::vector<bool> res(residues_.size());
  for (std::size_t r = 0; r < res.size(); ++r) res[r] = !residues_[r];
  return IndexSet(modulus_, std::move(res), removals_, additions_);
}

namespace {

template <typename Op>
IndexSet combine(const IndexSet& a, const IndexSet& b, Op op) {
  const Index l = std::lcm(a.modulus(), b.modulus());
  std::vector<bool> res(l);
  for (Index r = 0; r < l; ++r) res[r] = op(a.residues()[r % a.modulus()], b.residues()[r % b.modulus()]);
  std::set<Index> candidates = a.additions();
  for (const auto* s : {&a.removals(), &b.additions(), &b.removals()}) candidates.insert(s->begin(), s->end());
  std::set<Index> add;
  std::set<Index> remove;
  for (Index n : candidates) {
    const bool member = op(a.contains(n), b.contains(n));
    const bool prog = res[n % l];
    if (member && !prog) add.insert(n);
    if (!member && prog) remove.insert(n);
  }
  return IndexSet(l, std::move(res), std::move(add), std::move(remove));
}

}  // namespace

IndexSet operator&(const IndexSet& a, const IndexSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

bool IndexSet::subset_of(const IndexSet& other) const { return (*this & other) == *this; }

std::string IndexSet::to_string() const {
  std::string out;
  if (is_cofinite()) {
    out = "N";
  } else if (is_finite()) {
    out = "{}";
  } else {
    out = "{n : n mod " + std::to_string(modulus_) + " in {";
    bool first = true;
    for (Index r = 0; r < modulus_; ++r) {
      if (!residues_[r]) continue;
      out += (first ? "" : ",") + std::to_string(r);
      first = false;
    }
    out += "}}";
  }
  auto list = [](const std::set<Index>& s) {
    std::string t = "{";
    bool first = true;
    for (Index n : s) {
      t += (first ? "" : ",") + std::to_string(n);
      first = false;
    }
    return t + "}";
  };
  if (!removals_.empty()) out += " \\ " + list(removals_);
  if (!additions_.empty()) out += " U " + list(additions_);
  return out;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Large:
      return "LARGE";
    case Decision::Small:
      return "SMALL";
    case Decision::Undecided:
      return "UNDECIDED";
  }
  return {};
}

FilterOracle FilterOracle::parse(const std::string& text) {
  if (text == "frechet") return frechet();
  const std::string prefix = "point:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string value = text.substr(prefix.size());
    std::size_t used = 0;
    long long z = 0;
    try {
      z = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == value.size() && used > 0) return point(z);
  }
  throw std::invalid_argument("unknown filter '" + text + "' (expected frechet or point:<integer>)");
}

Decision FilterOracle::decide(const IndexSet& s) const {
  if (kind_ == Kind::Frechet) {
    if (s.is_cofinite()) return Decision::Large;
    if (s.is_finite()) return Decision::Small;
    return Decision::Undecided;
  }
  const auto m = static_cast<std::int64_t>(s.modulus());
  const auto r = static_cast<Index>(((z_ % m) + m) % m);
  return s.residues()[r] ? Decision::Large : Decision::Small;
}

std::string FilterOracle::to_string() const {
  if (kind_ == Kind::Frechet) return "frechet";
  return "point:" + std::to_string(z_);
}

}  // namespace stevin
