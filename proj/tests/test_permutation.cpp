#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/permutation.hpp"

using namespace polycirc;
using oracle::cyc;

TEST(Permutation, ComposeAppliesLeftOperandFirst) {
  auto a = cyc(3, {{0, 1}});
  auto b = cyc(3, {{1, 2}});
  EXPECT_EQ(compose(a, b), cyc(3, {{0, 2, 1}}));
  EXPECT_EQ(a * b, compose(a, b));
  EXPECT_EQ(compose(Permutation::identity(3), a), a);
  EXPECT_TRUE(compose(a, inverse(a)).is_identity());
}

TEST(Permutation, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), PreconditionError);
}

TEST(Permutation, ConstructionValidates) {
  EXPECT_THROW(Permutation(0), PreconditionError);
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), PreconditionError);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), PreconditionError);
  EXPECT_THROW(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(Permutation::from_cycles(4, {{0, 4}}), PreconditionError);
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(inverse(cyc(3, {{0, 1, 2}})), cyc(3, {{0, 2, 1}}));
  EXPECT_TRUE(inverse(Permutation(5)).is_identity());
  auto t = cyc(6, {{0, 3}, {1, 5}});
  EXPECT_EQ(inverse(t), t);
}

TEST(Permutation, PowerAndOrder) {
  EXPECT_EQ(order(cyc(5, {{0, 1}, {2, 3, 4}})), 6);
  EXPECT_EQ(power(cyc(4, {{0, 1, 2, 3}}), 2), cyc(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(order(Permutation(7)), 1);
  auto a = cyc(7, {{0, 1, 2}, {3, 4, 5, 6}});
  EXPECT_EQ(power(a, -1), inverse(a));
  EXPECT_TRUE(power(a, 12).is_identity());
  EXPECT_EQ(power(a, BigInt(13)), a);
  EXPECT_EQ(power(a, 0), Permutation(7));
}

TEST(Permutation, CycleDecomposition) {
  auto d = cycle_decomposition(cyc(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(d.length_multiset, (std::map<std::size_t, std::size_t>{{2, 2}}));
  d = cycle_decomposition(cyc(4, {{0, 1, 2}}));
  EXPECT_EQ(d.length_multiset, (std::map<std::size_t, std::size_t>{{1, 1}, {3, 1}}));
  d = cycle_decomposition(Permutation(5));
  EXPECT_EQ(d.length_multiset, (std::map<std::size_t, std::size_t>{{1, 5}}));

  d = cycle_decomposition(cyc(6, {{5, 2, 4}, {1, 3}}));
  ASSERT_EQ(d.cycles.size(), 3u);
  EXPECT_EQ(d.cycles[0], (std::vector<Point>{0}));
  EXPECT_EQ(d.cycles[1], (std::vector<Point>{1, 3}));
  EXPECT_EQ(d.cycles[2], (std::vector<Point>{2, 4, 5}));
}

TEST(Permutation, Semiregular) {
  EXPECT_TRUE(is_semiregular(cyc(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_semiregular(cyc(4, {{0, 1, 2}})));
  EXPECT_TRUE(is_semiregular(Permutation(4)));
}

TEST(Permutation, SemiregularAgreesWithPointerChasing) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> deg(1, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = oracle::random_permutation(rng, deg(rng));
    // Bias toward semiregular inputs so both outcomes are exercised.
    if (trial % 3 == 0) {
      std::size_t n = a.degree();
      std::size_t len = 1;
      for (std::size_t d = 2; d <= n; ++d)
        if (n % d == 0 && rng() % 2) len = d;
      std::vector<std::vector<Point>> cs;
      for (Point s = 0; s < n; s += static_cast<Point>(len)) {
        std::vector<Point> c;
        for (Point i = 0; i < len; ++i) c.push_back(s + i);
        cs.push_back(c);
      }
      auto r = Permutation::from_cycles(n, cs);
      a = inverse(a) * r * a;
    }
    EXPECT_EQ(is_semiregular(a), oracle::semiregular(oracle::images_of(a)));
  }
}

TEST(Permutation, DecompositionRoundTrips) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_permutation(rng, 1 + rng() % 40);
    auto d = cycle_decomposition(a);
    EXPECT_EQ(from_decomposition(a.degree(), d), a);
    std::size_t total = 0;
    for (const auto& c : d.cycles) total += c.size();
    EXPECT_EQ(total, a.degree());
  }
}

TEST(Permutation, OrderIsLeastAnnihilatingPower) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_permutation(rng, 1 + rng() % 12);
    auto m = static_cast<std::int64_t>(order(a));
    EXPECT_TRUE(power(a, m).is_identity());
    for (std::int64_t k = 1; k < m; ++k) EXPECT_FALSE(power(a, k).is_identity());
    // Semiregular iff every nontrivial power has no fixed points.
    bool free_powers = true;
    for (std::int64_t k = 1; k < m; ++k)
      if (power(a, k).moved_point_count() != a.degree()) free_powers = false;
    EXPECT_EQ(is_semiregular(a), free_powers);
  }
}

TEST(Permutation, ConjugateAndCommutator) {
  auto a = cyc(4, {{0, 1}});
  auto b = cyc(4, {{0, 1, 2, 3}});
  EXPECT_EQ(conjugate(a, b), inverse(b) * a * b);
  EXPECT_EQ(conjugate(a, b), cyc(4, {{1, 2}}));
  EXPECT_EQ(commutator(a, b), inverse(a) * inverse(b) * a * b);
}
