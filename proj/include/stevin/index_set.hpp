#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace stevin {

using Index = std::uint64_t;

// A subset of N in the Boolean algebra generated by finite sets and residue
// classes: ({n : n mod m in R} \ removals) U additions. Kept canonical: the
// modulus is the least period of R, additions lie outside the progression
// part and removals inside it, so equal sets compare equal.
class IndexSet {
 public:
  IndexSet() : IndexSet(1, {false}, {}, {}) {}
  // Normalizes. Residues must be < modulus.
  IndexSet(Index modulus, std::vector<bool> residues, std::set<Index> additions,
           std::set<Index> removals);

  static IndexSet empty() { return {}; }
  static IndexSet all() { return IndexSet(1, {true}, {}, {}); }
  static IndexSet residue_class(Index r, Index m);
  static IndexSet finite(std::set<Index> members);
  // Progression part given by `residues` mod `modulus`; below `threshold`
  // membership is decided by `member` instead.
  static IndexSet eventually(Index modulus, std::vector<bool> residues, Index threshold,
                             const std::function<bool(Index)>& member);

  Index modulus() const noexcept { return modulus_; }
  const std::vector<bool>& residues() const noexcept { return residues_; }
  const std::set<Index>& additions() const noexcept { return additions_; }
  const std::set<Index>& removals() const noexcept { return removals_; }

  bool contains(Index n) const;
  bool in_progression(Index n) const { return residues_[n % modulus_]; }
  bool is_finite() const;
  bool is_cofinite() const;

  // Same set written over modulus lcm(m, current); not normalized, so it
  // exposes the representation a decision procedure might see.
  IndexSet lifted_to(Index m) const;

  IndexSet complement() const;
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);
  bool subset_of(const IndexSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  struct Raw {};
  IndexSet(Raw, Index modulus, std::vector<bool> residues, std::set<Index> additions,
           std::set<Index> removals);
  void normalize();

  Index modulus_;
  std::vector<bool> residues_;
  std::set<Index> additions_;
  std::set<Index> removals_;
};

enum class Decision { Large, Small, Undecided };
std::string to_string(Decision d);

// A filter on N restricted to the finite/progression algebra. Frechet
// decides only finite (small) and cofinite (large) sets. A profinite point z
// picks residue z mod m for every modulus m, which is an ultrafilter on this
// algebra: it decides every set, and finite changes never matter.
class FilterOracle {
 public:
  enum class Kind { Frechet, ProfinitePoint };

  static FilterOracle frechet() { return FilterOracle(Kind::Frechet, 0); }
  static FilterOracle point(std::int64_t z) { return FilterOracle(Kind::ProfinitePoint, z); }
  // "frechet", "point:0", "point:-1", "point:<integer>".
  static FilterOracle parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  std::int64_t point_value() const noexcept { return z_; }

  Decision decide(const IndexSet& s) const;
  std::string to_string() const;

  friend bool operator==(const FilterOracle&, const FilterOracle&) = default;

 private:
  FilterOracle(Kind k, std::int64_t z) : kind_(k), z_(z) {}
  Kind kind_;
  std::int64_t z_;
};

}  // namespace stevin
