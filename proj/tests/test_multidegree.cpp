#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "abelstrata/multidegree.hpp"
#include "abelstrata/verify.hpp"
#include "oracles.hpp"

using namespace abelstrata;

namespace {

std::vector<Multidegree> degs(std::initializer_list<std::vector<int>> list) {
  std::vector<Multidegree> out;
  for (const auto& v : list) out.emplace_back(v);
  return out;
}

// Multidegrees of total d on x with every free entry in [-r, r]; components
// flagged in `ones` carry 1. Filtered by the oracle.
std::vector<Multidegree> oracle_enumerate(const DualGraph& x, int d, DegreeFilter filter, int r,
                                          const std::vector<bool>& ones = {}) {
  std::vector<Multidegree> out;
  const std::size_t n = x.num_components();
  std::vector<std::size_t> free;
  std::vector<int> cur(n, 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (ones.empty() || !ones[v]) free.push_back(v);
  }
  if (free.empty()) return out;
  const std::size_t last = free.back();
  free.pop_back();
  for (auto v : free) cur[v] = -r;
  while (true) {
    int partial = 0;
    for (std::size_t v = 0; v < n; ++v) partial += v == last ? 0 : cur[v];
    cur[last] = d - partial;
    if (std::abs(cur[last]) <= r) {
      const auto v = oracle::balance(x, cur);
      bool nonneg = true;
      for (int c : cur) nonneg = nonneg && c >= 0;
      const bool keep = filter == DegreeFilter::balanced ? v.balanced
                        : filter == DegreeFilter::strict ? v.strict
                                                         : v.strict && nonneg;
      if (keep) out.emplace_back(cur);
    }
    std::size_t i = free.size();
    while (i > 0 && cur[free[i - 1]] == r) cur[free[--i]] = -r;
    if (i == 0) break;
    ++cur[free[i - 1]];
  }
  return out;
}

// Balanced entries satisfy |d_v| <= |d| + delta_v / 2 since 0 <= w_v <= 2g - 2.
int entry_bound(const DualGraph& x, int d) { return std::abs(d) + static_cast<int>(x.num_nodes() / 2) + 1; }

}  // namespace

TEST_SUITE("multidegree") {

TEST_CASE("literal parsing") {
  CHECK(Multidegree::parse("1,0,-2").entries() == std::vector<int>{1, 0, -2});
  CHECK(Multidegree::parse(" 3 ").total() == 3);
  CHECK(Multidegree({1, -1}).to_string() == "1,-1");
  CHECK_THROWS_AS(Multidegree::parse("1,,2"), DegreeError);
  CHECK_THROWS_AS(Multidegree::parse("a"), DegreeError);
  CHECK_THROWS_AS(Multidegree::parse(""), DegreeError);
  CHECK(Multidegree({2, 0, 1}).on(Subcurve(0b101)) == 3);
}

TEST_CASE("binary balance examples") {
  const auto b = binary_curve(3);
  auto r = check_balanced(b, Multidegree({1, 1}));
  CHECK(r.balanced);
  CHECK(r.strictly_balanced);
  r = check_balanced(b, Multidegree({-1, 3}));
  CHECK(r.balanced);
  CHECK_FALSE(r.strictly_balanced);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().equality);
  r = check_balanced(b, Multidegree({-2, 4}));
  CHECK_FALSE(r.balanced);

  const auto irr = irreducible_rational_curve(3);
  for (int d = -4; d <= 6; ++d) {
    CHECK(check_balanced(irr, Multidegree({d})).strictly_balanced);
    for (auto f : {DegreeFilter::balanced, DegreeFilter::strict}) {
      CHECK(enumerate_multidegrees(irr, d, f) == degs({{d}}));
    }
  }
  CHECK(enumerate_multidegrees(irr, 5, DegreeFilter::strict_nonneg) == degs({{5}}));
  CHECK_THROWS_AS(check_balanced(b, Multidegree({1, 1, 0})), DegreeError);
  CHECK_THROWS_AS(check_balanced(DualGraph({1, 0}, {Edge{0, 1}}), Multidegree({1, 0})), DegreeError);
}

TEST_CASE("binary bounds") {
  CHECK(binary_bounds(2, 3) == std::pair{Rational(-1), Rational(3)});
  CHECK(binary_bounds(1, 3) == std::pair{Rational(-3, 2), Rational(5, 2)});
  for (int g = 2; g <= 8; ++g) CHECK(binary_bounds(g - 1, g) == std::pair{Rational(-1), Rational(g)});
}

TEST_CASE("binary genus 3 enumerations") {
  const auto b = binary_curve(3);
  CHECK(enumerate_multidegrees(b, 2, DegreeFilter::strict_nonneg) == degs({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(enumerate_multidegrees(b, 1, DegreeFilter::strict_nonneg) == degs({{0, 1}, {1, 0}}));
  CHECK(enumerate_multidegrees(b, 0, DegreeFilter::strict_nonneg) == degs({{0, 0}}));
  CHECK(enumerate_multidegrees(b, 2, DegreeFilter::balanced) ==
        degs({{-1, 3}, {0, 2}, {1, 1}, {2, 0}, {3, -1}}));
}

TEST_CASE("two genus-1 components have no strictly balanced degree 1") {
  const DualGraph x({1, 1}, {Edge{0, 1}});
  CHECK(enumerate_multidegrees(x, 1, DegreeFilter::strict).empty());
  CHECK(enumerate_multidegrees(x, 1, DegreeFilter::balanced) == degs({{0, 1}, {1, 0}}));
}

TEST_CASE("general checker matches the binary bounds") {
  for (int g = 2; g <= 8; ++g) {
    const auto b = binary_curve(g);
    const BalanceChecker checker(b);
    for (int d = -2 * g; d <= 2 * g; ++d) {
      const auto [m, M] = binary_bounds(d, g);
      for (int d1 = d - 3 * g; d1 <= d + 3 * g; ++d1) {
        const Multidegree deg({d1, d - d1});
        const bool in = m <= d1 && d1 <= M && m <= d - d1 && d - d1 <= M;
        const bool inside = m < d1 && d1 < M && m < d - d1 && d - d1 < M;
        CHECK(checker.is_balanced(deg) == in);
        CHECK(checker.is_strictly_balanced(deg) == inside);
      }
    }
  }
}

TEST_CASE("blow-up balance: general check and binary definition") {
  const auto b = binary_curve(3);
  const auto one = blow_up(b, NodeSet({0}));
  auto r = blowup_balanced(one, Multidegree({0, 1, 1}));
  REQUIRE(r.binary.has_value());
  CHECK(r.strictly_balanced());
  CHECK(r.general.strictly_balanced);
  CHECK_FALSE(blowup_balanced(one, Multidegree({1, 1, 0})).balanced());
  CHECK(restrict_to_base(one, Multidegree({0, 1, 1})) == Multidegree({0, 1}));

  const auto two = blow_up(b, NodeSet({0, 1}));
  CHECK(restrict_to_base(two, Multidegree({2, 0, 1, 1})) == Multidegree({2, 0}));
  CHECK(restrict_to_base(blow_up(b, NodeSet()), Multidegree({1, 1})) == Multidegree({1, 1}));

  const auto none = blowup_balanced(blow_up(b, NodeSet()), Multidegree({1, 1}));
  CHECK(none.general.strictly_balanced == check_balanced(b, Multidegree({1, 1})).strictly_balanced);

  // Exhaustive agreement of the two routes on binary blow-ups.
  for (int g = 2; g <= 5; ++g) {
    const auto x = binary_curve(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (g + 1)); ++mask) {
      const auto bl = blow_up(x, NodeSet::from_mask(mask));
      const int k = static_cast<int>(bl.num_exceptional());
      for (int d = -g; d <= 2 * g; ++d) {
        for (int d1 = -2 * g; d1 <= 2 * g; ++d1) {
          for (int ex = 0; ex <= (k > 0 ? 1 : 0); ++ex) {
            std::vector<int> e{d1, d - d1 - (k > 0 ? k - 1 + ex : 0)};
            for (int i = 0; i < k; ++i) e.push_back(i == 0 ? ex : 1);
            const auto rep = blowup_balanced(bl, Multidegree(e));
            REQUIRE(rep.binary.has_value());
            CHECK(rep.binary->balanced == rep.general.balanced);
            CHECK(rep.binary->strictly_balanced == rep.general.strictly_balanced);
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration agrees with brute force on random stable graphs") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 30) {
    const auto x = oracle::random_connected_graph(rng, 4, 4, 1);
    if (!classify(x).stable) continue;
    ++tested;
    const int g = genus(x);
    const BalanceChecker checker(x);
    for (int d : std::set<int>{-1, 0, 1, 2, g - 1, g}) {
      for (auto f : {DegreeFilter::balanced, DegreeFilter::strict, DegreeFilter::strict_nonneg}) {
        const auto got = enumerate_multidegrees(checker, d, f);
        CHECK(got == oracle_enumerate(x, d, f, entry_bound(x, d)));
        CHECK(got == reference::enumerate_multidegrees(checker, d, f));
      }
    }
  }
}

TEST_CASE("blow-ups agree with brute force") {
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 40) {
    const auto x = oracle::random_connected_graph(rng, 3, 4, 1);
    if (!classify(x).stable || x.num_nodes() > 6) continue;
    ++tested;
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << x.num_nodes()) - 1);
    const auto b = blow_up(x, NodeSet::from_mask(mask(rng)));
    std::vector<bool> ones(b.curve.num_components(), false);
    for (std::size_t v = b.base_components; v < ones.size(); ++v) ones[v] = true;
    for (int d = 0; d <= 3; ++d) {
      CHECK(enumerate_multidegrees(b.curve, d, DegreeFilter::strict) ==
            oracle_enumerate(b.curve, d, DegreeFilter::strict, entry_bound(b.curve, d), ones));
    }
    if (b.num_exceptional() > 0) {
      std::vector<int> e(b.curve.num_components(), 1);
      e[b.base_components] = 0;
      CHECK_FALSE(oracle::balance(b.curve, e).balanced);
      CHECK_FALSE(check_balanced(b.curve, Multidegree(e)).balanced);
    }
  }
}

TEST_CASE("component ranges bound every balanced degree") {
  for (int g = 2; g <= 6; ++g) {
    const auto b = binary_curve(g);
    for (int d = -g; d <= 2 * g; ++d) {
      const auto ranges = component_ranges(b, d);
      for (const auto& deg : enumerate_multidegrees(b, d, DegreeFilter::balanced)) {
        for (std::size_t i = 0; i < 2; ++i) {
          CHECK(ranges[i].first <= deg[i]);
          CHECK(deg[i] <= ranges[i].second);
        }
      }
    }
  }
}

}  // TEST_SUITE
