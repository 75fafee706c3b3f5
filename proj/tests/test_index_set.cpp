#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stevin/index_set.hpp"

#include <random>

using namespace stevin;

namespace {

constexpr Index kMaxModulus = 24;
constexpr Index kProbe = 400;  // membership is compared below this bound

std::vector<IndexSet> basic_classes() {
  std::vector<IndexSet> out;
  for (Index m = 1; m <= kMaxModulus; ++m)
    for (Index r = 0; r < m; ++r) out.push_back(IndexSet::residue_class(r, m));
  return out;
}

std::vector<FilterOracle> oracles() {
  std::vector<FilterOracle> out{FilterOracle::frechet()};
  for (std::int64_t z : {-7, -1, 0, 1, 2, 5, 11, 720720}) out.push_back(FilterOracle::point(z));
  return out;
}

IndexSet perturb(const IndexSet& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> pick(0, 60);
  std::set<Index> add;
  std::set<Index> drop;
  for (int k = 0; k < 4; ++k) add.insert(pick(rng));
  for (int k = 0; k < 4; ++k) drop.insert(pick(rng));
  return (s | IndexSet::finite(add)) & IndexSet::finite(drop).complement();
}

IndexSet random_union(std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> mod(1, kMaxModulus);
  const Index m = mod(rng);
  std::vector<bool> residues(m);
  std::bernoulli_distribution coin(0.5);
  for (Index r = 0; r < m; ++r) residues[r] = coin(rng);
  return IndexSet(m, residues, {}, {});
}

void check_membership(const IndexSet& s, const std::function<bool(Index)>& truth) {
  for (Index n = 0; n < kProbe; ++n) REQUIRE(s.contains(n) == truth(n));
}

void check_filter_laws(const IndexSet& a, const IndexSet& b) {
  const IndexSet both = a & b;
  const IndexSet either = a | b;
  for (const FilterOracle& f : oracles()) {
    const Decision da = f.decide(a);
    const Decision db = f.decide(b);
    if (da == Decision::Large && db == Decision::Large) REQUIRE(f.decide(both) == Decision::Large);
    if (da == Decision::Large) REQUIRE(f.decide(either) == Decision::Large);
    if (da == Decision::Small && db == Decision::Small) REQUIRE(f.decide(either) == Decision::Small);
    if (f.kind() == FilterOracle::Kind::ProfinitePoint) {
      REQUIRE(da != Decision::Undecided);
      REQUIRE(f.decide(both) != Decision::Undecided);
    }
  }
}

}  // namespace

TEST_CASE("normal form is canonical") {
  CHECK(IndexSet(4, {true, false, true, false}, {}, {}) == IndexSet::residue_class(0, 2));
  CHECK(IndexSet::residue_class(1, 2).complement() == IndexSet::residue_class(0, 2));
  CHECK((IndexSet::residue_class(0, 2) | IndexSet::residue_class(1, 2)) == IndexSet::all());
  CHECK((IndexSet::residue_class(0, 2) & IndexSet::residue_class(1, 2)) == IndexSet::empty());
  // An addition already inside the progression disappears; a removal outside does too.
  CHECK(IndexSet(2, {true, false}, {4}, {3}) == IndexSet::residue_class(0, 2));
  CHECK(IndexSet::finite({1, 2}).is_finite());
  CHECK(IndexSet::finite({1, 2}).complement().is_cofinite());
  CHECK_FALSE(IndexSet::residue_class(0, 3).is_finite());
  CHECK_FALSE(IndexSet::residue_class(0, 3).is_cofinite());
  CHECK(IndexSet::eventually(1, {true}, 5, [](Index n) { return n == 2; }) ==
        IndexSet(1, {true}, {}, {0, 1, 3, 4}));
  CHECK_THROWS_AS(IndexSet::residue_class(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet(0, {}, {}, {}), std::invalid_argument);
}

TEST_CASE("to_string") {
  CHECK(IndexSet::empty().to_string() == "{}");
  CHECK(IndexSet::residue_class(1, 2).to_string().find("mod 2") != std::string::npos);
}

TEST_CASE("oracle decisions") {
  const FilterOracle fr = FilterOracle::frechet();
  CHECK(fr.decide(IndexSet::all()) == Decision::Large);
  CHECK(fr.decide(IndexSet::finite({1, 2, 3})) == Decision::Small);
  CHECK(fr.decide(IndexSet::finite({1}).complement()) == Decision::Large);
  CHECK(fr.decide(IndexSet::residue_class(0, 2)) == Decision::Undecided);

  const FilterOracle p0 = FilterOracle::point(0);
  const FilterOracle pm1 = FilterOracle::point(-1);
  CHECK(p0.decide(IndexSet::residue_class(0, 2)) == Decision::Large);
  CHECK(pm1.decide(IndexSet::residue_class(0, 2)) == Decision::Small);
  CHECK(pm1.decide(IndexSet::residue_class(1, 2)) == Decision::Large);
  CHECK(pm1.decide(IndexSet::residue_class(5, 6)) == Decision::Large);
  // Finite parts never change a point's decision.
  CHECK(p0.decide(IndexSet(2, {true, false}, {}, {0, 2, 4})) == Decision::Large);
  CHECK(p0.decide(IndexSet::empty()) == Decision::Small);
}

TEST_CASE("oracle parsing") {
  CHECK(FilterOracle::parse("frechet") == FilterOracle::frechet());
  CHECK(FilterOracle::parse("point:-1") == FilterOracle::point(-1));
  CHECK(FilterOracle::parse("point:0").to_string() == "point:0");
  CHECK(FilterOracle::frechet().to_string() == "frechet");
  CHECK_THROWS_AS(FilterOracle::parse("point:"), std::invalid_argument);
  CHECK_THROWS_AS(FilterOracle::parse("point:1x"), std::invalid_argument);
  CHECK_THROWS_AS(FilterOracle::parse("ultra"), std::invalid_argument);
  CHECK(to_string(Decision::Large) == "LARGE");
}

TEST_CASE("exhaustive: pairs of residue classes up to modulus 24") {
  const auto classes = basic_classes();
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      check_filter_laws(a, b);
      REQUIRE((a & b).subset_of(a));
      REQUIRE(a.subset_of(a | b));
    }
  }
}

TEST_CASE("exhaustive: every residue set of small moduli") {
  // All 2^m unions for m <= 12, each against a few perturbed partners.
  std::mt19937_64 rng(43);
  for (Index m = 1; m <= 12; ++m) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<bool> residues(m);
      for (Index r = 0; r < m; ++r) residues[r] = (mask >> r) & 1u;
      const IndexSet s(m, residues, {}, {});
      check_membership(s, [&](Index n) { return residues[n % m]; });
      const IndexSet partner = perturb(random_union(rng), rng);
      check_filter_laws(s, partner);
      check_filter_laws(perturb(s, rng), partner);
    }
  }
}

TEST_CASE("property: Boolean operations agree with membership") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 500; ++k) {
    const IndexSet a = perturb(random_union(rng), rng);
    const IndexSet b = perturb(random_union(rng), rng);
    check_membership(a & b, [&](Index n) { return a.contains(n) && b.contains(n); });
    check_membership(a | b, [&](Index n) { return a.contains(n) || b.contains(n); });
    check_membership(a.complement(), [&](Index n) { return !a.contains(n); });
    REQUIRE(a.complement().complement() == a);
    check_filter_laws(a, b);
    check_filter_laws(a.complement(), b);
  }
}

TEST_CASE("property: points are ultrafilters on the algebra") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 500; ++k) {
    const IndexSet a = perturb(random_union(rng), rng);
    for (const FilterOracle& f : oracles()) {
      if (f.kind() != FilterOracle::Kind::ProfinitePoint) continue;
      const Decision d = f.decide(a);
      const Decision dc = f.decide(a.complement());
      REQUIRE(d != Decision::Undecided);
      REQUIRE(d != dc);
    }
  }
}

TEST_CASE("exhaustive: decisions are stable under modulus refinement") {
  std::mt19937_64 rng(59);
  for (Index m = 1; m <= kMaxModulus; ++m) {
    for (Index m2 = 1; m2 <= kMaxModulus; ++m2) {
      for (int k = 0; k < 4; ++k) {
        std::vector<bool> residues(m);
        std::bernoulli_distribution coin(0.5);
        for (Index r = 0; r < m; ++r) residues[r] = coin(rng);
        const IndexSet s = perturb(IndexSet(m, residues, {}, {}), rng);
        const IndexSet lifted = s.lifted_to(m2);
        check_membership(lifted, [&](Index n) { return s.contains(n); });
        for (const FilterOracle& f : oracles()) REQUIRE(f.decide(lifted) == f.decide(s));
      }
    }
  }
}
