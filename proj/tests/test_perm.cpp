#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "ybekit/error.hpp"
#include "ybekit/perm.hpp"

using namespace ybekit;

TEST(Perm, ComposeAppliesRightFactorFirst) {
  EXPECT_EQ(compose(Perm{1, 2, 0}, Perm{1, 0, 2}), (Perm{2, 1, 0}));
  EXPECT_EQ(compose(Perm{0, 1, 2}, Perm{2, 0, 1}), (Perm{2, 0, 1}));
  EXPECT_EQ(compose(Perm{1, 0}, Perm{1, 0}), (Perm{0, 1}));
}

TEST(Perm, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Perm{1, 0}, Perm{0, 1, 2}), DomainError);
}

TEST(Perm, Inverse) {
  EXPECT_EQ(inverse(Perm{1, 2, 0}), (Perm{2, 0, 1}));
  EXPECT_EQ(inverse(Perm::identity(5)), Perm::identity(5));
  EXPECT_EQ(inverse(Perm{1, 0, 3, 2}), (Perm{1, 0, 3, 2}));
}

TEST(Perm, CycleType) {
  EXPECT_EQ(cycle_type(Perm{1, 2, 0}), (std::vector<std::size_t>{3}));
  EXPECT_EQ(cycle_type(Perm::identity(4)), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(Perm{1, 0, 2}), (std::vector<std::size_t>{1, 2}));
}

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW((Perm{0, 0, 1}), DomainError);
  EXPECT_THROW((Perm{0, 3, 1}), DomainError);
  EXPECT_THROW(Perm(std::vector<Point>{}), DomainError);
  EXPECT_THROW(Perm::from_cycles(3, {{0, 1}, {1, 2}}), DomainError);
}

TEST(Perm, FromCycles) {
  EXPECT_EQ(Perm::from_cycles(4, {{0, 1, 2, 3}}), (Perm{1, 2, 3, 0}));
  EXPECT_EQ(Perm::from_cycles(5, {{1, 2}, {3, 4}}), (Perm{0, 2, 1, 4, 3}));
}

namespace {
Perm random_perm(std::size_t n, std::mt19937& rng) {
  auto r = oracle::random_perm(static_cast<int>(n), rng);
  return Perm(std::vector<Point>(r.begin(), r.end()));
}
}  // namespace

TEST(PermProperty, GroupLaws) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Perm a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(inverse(inverse(a)), a);
    EXPECT_TRUE(compose(a, inverse(a)).is_identity());
    EXPECT_EQ(cycle_type(conjugate(a, b)), cycle_type(a));
    std::size_t total = 0;
    for (auto l : cycle_type(a)) total += l;
    EXPECT_EQ(total, n);
  }
}
