#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "ybekit/error.hpp"
#include "ybekit/permgroup.hpp"

using namespace ybekit;

namespace {
PermGroup alt5() { return PermGroup::closure(5, {Perm{1, 2, 0, 3, 4}, Perm{0, 1, 3, 4, 2}}); }
PermGroup sym(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  std::vector<Point> tr(n);
  for (std::size_t i = 0; i < n; ++i) tr[i] = static_cast<Point>(i);
  std::swap(tr[0], tr[1]);
  return PermGroup::closure(n, {Perm(cyc), Perm(tr)});
}
}  // namespace

TEST(Closure, Orders) {
  EXPECT_EQ(PermGroup::closure(3, {Perm{1, 2, 0}}).order(), 3u);
  EXPECT_EQ(sym(3).order(), 6u);
  EXPECT_EQ(sym(5).order(), 120u);
  EXPECT_EQ(alt5().order(), 60u);
  EXPECT_EQ(PermGroup::closure(4, {}).order(), 1u);
  EXPECT_TRUE(PermGroup::closure(4, {Perm{1, 0, 2, 3}}).elements()[0].is_identity());
}

TEST(Closure, MatchesOracle) {
  const std::vector<std::vector<int>> gens{{1, 0, 2, 3, 4, 5}, {0, 2, 3, 1, 5, 4}};
  std::vector<Perm> g;
  for (const auto& v : gens) g.emplace_back(std::vector<Point>(v.begin(), v.end()));
  const auto G = PermGroup::closure(6, g);
  const auto ref = oracle::group_closure(6, gens);
  EXPECT_EQ(G.order(), ref.size());
  for (const auto& e : ref) EXPECT_TRUE(G.contains(Perm(std::vector<Point>(e.begin(), e.end()))));
}

TEST(Closure, CapRaisesResourceError) {
  EXPECT_THROW(PermGroup::closure(6, {Perm{1, 2, 3, 4, 5, 0}, Perm{1, 0, 2, 3, 4, 5}}, 100),
               ResourceError);
  EXPECT_THROW(PermGroup::closure(3, {Perm{1, 0}}), DomainError);
}

TEST(Orbits, Examples) {
  const auto g = PermGroup::closure(4, {Perm{1, 0, 2, 3}});
  EXPECT_EQ(orbits(g), (Partition{{0, 1}, {2}, {3}}));
  EXPECT_FALSE(is_transitive(g));
  EXPECT_TRUE(is_transitive(sym(4)));
}

TEST(Blocks, CyclicFourHasPairs) {
  const auto c4 = PermGroup::closure(4, {Perm{1, 2, 3, 0}});
  const auto bs = minimal_block_containing(c4, 0, 2);
  EXPECT_EQ(bs.blocks, (Partition{{0, 2}, {1, 3}}));
  EXPECT_TRUE(is_block_system(c4, bs));
  EXPECT_FALSE(is_primitive(c4));
  // 0 and 1 generate the whole set.
  EXPECT_TRUE(minimal_block_containing(c4, 0, 1).is_trivial());
}

TEST(Blocks, Errors) {
  const auto g = PermGroup::closure(4, {Perm{1, 0, 2, 3}});
  EXPECT_THROW(minimal_block_containing(g, 0, 2), DomainError);
  EXPECT_THROW(minimal_block_containing(sym(3), 1, 1), DomainError);
}

TEST(Blocks, IsBlockSystemRejectsBadPartitions) {
  const auto c4 = PermGroup::closure(4, {Perm{1, 2, 3, 0}});
  EXPECT_FALSE(is_block_system(c4, {{{0, 1}, {2, 3}}}));
  EXPECT_FALSE(is_block_system(c4, {{{0}, {1, 2, 3}}}));
  EXPECT_FALSE(is_block_system(c4, {{{0, 2}, {1}}}));
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(PermGroup::closure(5, {Perm{1, 2, 3, 4, 0}})));
  EXPECT_TRUE(is_primitive(sym(4)));
  EXPECT_FALSE(is_primitive(PermGroup::closure(6, {Perm{1, 2, 3, 4, 5, 0}})));
  EXPECT_TRUE(is_primitive(PermGroup::closure(1, {})));
  EXPECT_FALSE(is_primitive(PermGroup::closure(3, {Perm{1, 0, 2}})));
  EXPECT_TRUE(is_primitive(alt5()));
}

TEST(Primitive, AgreesWithBruteForceBlockSearch) {
  // Every transitive group on up to 6 points from pairs of random generators.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<Perm> gens;
    for (int i = 0; i < 2; ++i) {
      auto r = oracle::random_perm(n, rng);
      gens.emplace_back(std::vector<Point>(r.begin(), r.end()));
    }
    const auto g = PermGroup::closure(n, gens);
    if (!is_transitive(g)) continue;
    bool found_block = false;
    // Try every subset containing 0 as a candidate block.
    for (unsigned mask = 1; mask < (1u << n) && !found_block; ++mask) {
      if (!(mask & 1u)) continue;
      const int sz = __builtin_popcount(mask);
      if (sz == 1 || sz == n || n % sz != 0) continue;
      bool ok = true;
      for (const auto& e : g.elements()) {
        unsigned img = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1u) img |= 1u << e(i);
        if (img != mask && (img & mask)) ok = false;
      }
      found_block = ok;
    }
    EXPECT_EQ(is_primitive(g), !found_block);
  }
}

TEST(Stabilizer, OrbitStabilizer) {
  const auto s4 = sym(4);
  const auto st = stabilizer(s4, 2);
  EXPECT_EQ(st.order(), 6u);
  for (const auto& e : st.elements()) EXPECT_EQ(e(2), 2u);
  EXPECT_EQ(stabilizer(alt5(), 0).order(), 12u);
}

TEST(Solvable, Examples) {
  EXPECT_TRUE(is_solvable(sym(3)));
  EXPECT_TRUE(is_solvable(sym(4)));
  EXPECT_FALSE(is_solvable(alt5()));
  EXPECT_FALSE(is_solvable(sym(5)));
  EXPECT_EQ(derived_subgroup(sym(4)).order(), 12u);
  EXPECT_EQ(derived_subgroup(alt5()).order(), 60u);
  EXPECT_TRUE(is_abelian(PermGroup::closure(4, {Perm{1, 2, 3, 0}})));
  EXPECT_FALSE(is_abelian(sym(3)));
}

TEST(PermutationGroup, OfSolutions) {
  EXPECT_EQ(permutation_group(fixtures::sym3_five()).order(), 6u);
  EXPECT_EQ(permutation_group(fixtures::irretractable_four()).order(), 8u);
  EXPECT_EQ(permutation_group(Solution::trivial(3)).order(), 1u);
  EXPECT_EQ(permutation_group(fixtures::cyclic(5)).order(), 5u);
}
