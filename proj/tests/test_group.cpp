#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/families.hpp"
#include "polycirc/group_ops.hpp"

using namespace polycirc;
using oracle::cyc;

namespace {

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

PermGroup s4() { return PermGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }
PermGroup d4() { return oracle::dihedral(4); }
PermGroup c6() { return oracle::cyclic(6); }

}  // namespace

TEST(Orbit, Examples) {
  EXPECT_EQ(as_set(orbit(c6(), 0)), (std::set<Point>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(as_set(orbit(PermGroup(4, {cyc(4, {{0, 1}, {2, 3}})}), 2)), (std::set<Point>{2, 3}));
  EXPECT_EQ(as_set(orbit(PermGroup::trivial(6), 4)), (std::set<Point>{4}));
  auto part = orbit_partition(PermGroup(5, {cyc(5, {{0, 3}}), cyc(5, {{1, 4}})}));
  EXPECT_EQ(part.size(), 3u);
}

TEST(Chain, OrdersMatchClosure) {
  EXPECT_EQ(s4().order(), 24);
  EXPECT_EQ(oracle::closure(s4()).size(), 24u);

  auto psl = psl2_action(5);
  EXPECT_EQ(psl.degree(), 6u);
  EXPECT_EQ(psl.order(), 60);
  EXPECT_EQ(oracle::closure(psl).size(), 60u);
  EXPECT_EQ(psl.order(), 5 * (25 - 1) / 2);

  auto m11 = k12_m11().group;
  EXPECT_EQ(m11.order(), 7920);
  EXPECT_EQ(oracle::closure(m11).size(), 7920u);
}

TEST(Chain, InvariantsHold) {
  for (const auto& g : {s4(), psl2_action(7), k12_m11().group, oracle::dihedral(9)}) {
    const auto& ch = g.chain();
    BigInt prod = 1;
    for (std::size_t i = 0; i < ch.depth(); ++i) prod *= ch.orbit(i).size();
    EXPECT_EQ(prod, ch.order());
    for (const auto& gen : g.generators()) EXPECT_TRUE(ch.sift(gen).member());
    for (const auto& gen : ch.strong_generators()) EXPECT_TRUE(ch.contains(gen));
  }
}

TEST(Chain, DeterministicForFixedInput) {
  auto m11 = k12_m11().group;
  StabilizerChain a(m11.degree(), m11.generators());
  StabilizerChain b(m11.degree(), m11.generators());
  EXPECT_EQ(a.base(), b.base());
  EXPECT_EQ(a.strong_generators(), b.strong_generators());
}

TEST(Chain, BasePrefixIsHonoured) {
  ChainOptions opt;
  opt.base_prefix = {3, 1};
  StabilizerChain ch(4, s4().generators(), opt);
  ASSERT_GE(ch.base().size(), 2u);
  EXPECT_EQ(ch.base()[0], 3u);
  EXPECT_EQ(ch.base()[1], 1u);
  EXPECT_EQ(ch.order(), 24);
}

TEST(Chain, Contains) {
  EXPECT_TRUE(s4().contains(cyc(4, {{0, 1, 2}})));
  PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  auto brute = oracle::closure(a4);
  EXPECT_EQ(brute.size(), 12u);
  auto t = cyc(4, {{0, 1}});
  EXPECT_EQ(a4.contains(t), brute.count(oracle::images_of(t)) > 0);
  EXPECT_FALSE(a4.contains(t));
  EXPECT_TRUE(a4.contains(Permutation(4)));
  // Every permutation of 4 points: membership matches the closure.
  for (const auto& img : oracle::closure(oracle::symmetric(4)))
    EXPECT_EQ(a4.contains(Permutation::from_images(img)), brute.count(img) > 0);
}

TEST(Chain, RandomElementsAreMembers) {
  auto g = psl2_action(11);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(g.contains(g.chain().random_element(rng)));
}

TEST(PointStabilizer, Examples) {
  auto st = point_stabilizer(s4(), 3);
  EXPECT_EQ(st.order(), 6);
  std::size_t brute = 0;
  for (const auto& e : oracle::closure(s4())) brute += e[3] == 3;
  EXPECT_EQ(brute, 6u);
  for (const auto& gen : st.generators()) EXPECT_EQ(gen[3], 3u);

  EXPECT_EQ(point_stabilizer(c6(), 2).order(), 1);
  EXPECT_EQ(point_stabilizer(k12_m11().group, 0).order(), 660);

  const Point walk[] = {0, 1, 0, 1};
  const Point pair[] = {0, 1};
  EXPECT_EQ(pointwise_stabilizer(s4(), walk).order(), 2);
  EXPECT_TRUE(same_group(pointwise_stabilizer(s4(), walk), pointwise_stabilizer(s4(), pair)));
}

TEST(PointStabilizer, OrbitStabilizerOnSamples) {
  std::vector<PermGroup> groups{s4(), d4(), c6(), psl2_action(7), pgl2_action(5),
                                k12_m11().group, PermGroup(7, {cyc(7, {{0, 1, 2}, {4, 5}})})};
  for (const auto& g : groups)
    for (Point v = 0; v < g.degree(); ++v)
      EXPECT_EQ(g.order(), point_stabilizer(g, v).order() * orbit(g, v).size());
}

TEST(ActionOnPartition, Examples) {
  auto b = action_on_partition(d4(), Partition::from_classes(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(b.image_group().degree(), 2u);
  EXPECT_EQ(b.image_group().order(), 2);
  EXPECT_EQ(b.kernel().order(), 4);

  auto s = action_on_partition(s4(), Partition::singletons(4));
  EXPECT_EQ(s.image_group().order(), 24);
  EXPECT_TRUE(s.kernel().is_trivial());

  auto c = action_on_partition(c6(), Partition::from_classes(6, {{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(c.image_group().order(), 3);
  EXPECT_EQ(c.kernel().order(), 2);

  EXPECT_THROW(action_on_partition(s4(), Partition::from_classes(4, {{0, 1}, {2, 3}})),
               PreconditionError);
}

TEST(ActionOnPartition, KernelMatchesBruteFilter) {
  auto g = d4();
  auto part = Partition::from_classes(4, {{0, 2}, {1, 3}});
  auto b = action_on_partition(g, part);
  std::size_t brute = 0;
  for (const auto& e : oracle::closure(g)) {
    bool fixes = true;
    for (Point x = 0; x < 4; ++x) fixes &= part.class_of(e[x]) == part.class_of(x);
    brute += fixes;
  }
  EXPECT_EQ(b.kernel().order(), brute);
  for (const auto& k : b.kernel().generators())
    for (Point x = 0; x < 4; ++x) EXPECT_EQ(part.class_of(k[x]), part.class_of(x));
}

TEST(ActionOnPartition, PreimageMapsBack) {
  auto g = praeger_xu_group({3, 4, 2});
  auto n = PermGroup(g.degree(), {praeger_xu_diagonal({3, 4, 2})});
  auto b = action_on_partition(g, orbit_partition(n));
  EXPECT_EQ(b.image_group().order() * b.kernel().order(), g.order());
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    auto y = b.image_group().chain().random_element(rng);
    auto x = b.preimage(y);
    EXPECT_TRUE(g.contains(x));
    EXPECT_EQ(b.image_of(x), y);
  }
}

TEST(Elements, Examples) {
  EXPECT_EQ(elements(oracle::symmetric(3), 100).size(), 6u);
  auto m11 = elements(k12_m11().group, 10000);
  EXPECT_EQ(m11.size(), 7920u);
  EXPECT_EQ(std::set<Permutation>(m11.begin(), m11.end()).size(), 7920u);
  try {
    elements(s4(), 10);
    FAIL() << "expected BoundExceededError";
  } catch (const BoundExceededError& e) {
    EXPECT_NE(std::string(e.what()).find("order 24 exceeds bound"), std::string::npos);
  }
}

TEST(MinimalNormal, Examples) {
  auto ms = minimal_normal_subgroups(s4());
  ASSERT_EQ(ms.size(), 1u);
  auto klein = oracle::closure(ms[0]);
  std::set<oracle::Images> expect;
  for (const auto& p : {Permutation(4), cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}}),
                        cyc(4, {{0, 3}, {1, 2}})})
    expect.insert(oracle::images_of(p));
  EXPECT_EQ(klein, expect);

  PermGroup a5(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
  auto ma = minimal_normal_subgroups(a5);
  ASSERT_EQ(ma.size(), 1u);
  EXPECT_EQ(ma[0].order(), 60);
  EXPECT_EQ(oracle::normal_subgroups(oracle::closure(a5)).size(), 2u);

  auto mc = minimal_normal_subgroups(c6());
  ASSERT_EQ(mc.size(), 2u);
  EXPECT_EQ(mc[0].order(), 2);
  EXPECT_EQ(mc[1].order(), 3);
}

TEST(MinimalNormal, MatchesBruteScan) {
  std::vector<PermGroup> groups{s4(), d4(), c6(), oracle::dihedral(6), oracle::symmetric(5),
                                PermGroup(6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3}}), cyc(6, {{4, 5}})})};
  for (const auto& g : groups) {
    auto all = oracle::normal_subgroups(oracle::closure(g));
    std::set<std::set<oracle::Images>> minimal;
    for (const auto& n : all) {
      if (n.size() == 1) continue;
      bool is_min = true;
      for (const auto& m : all)
        if (m.size() > 1 && m.size() < n.size() &&
            std::includes(n.begin(), n.end(), m.begin(), m.end()))
          is_min = false;
      if (is_min) minimal.insert(n);
    }
    std::set<std::set<oracle::Images>> got;
    for (const auto& m : minimal_normal_subgroups(g)) got.insert(oracle::closure(m));
    EXPECT_EQ(got, minimal);
  }
}

TEST(TransitivityClass, Examples) {
  EXPECT_EQ(transitivity_class(oracle::cyclic(7)), TransitivityClass::kQuasiprimitive);
  EXPECT_EQ(transitivity_class(d4()), TransitivityClass::kBiquasiprimitive);
  EXPECT_EQ(transitivity_class(c6()), TransitivityClass::kNeither);
  EXPECT_EQ(transitivity_class(PermGroup(4, {cyc(4, {{0, 1}})})),
            TransitivityClass::kIntransitive);
  EXPECT_EQ(transitivity_class(k12_m11().group), TransitivityClass::kQuasiprimitive);
  EXPECT_THROW(transitivity_class(oracle::symmetric(9), 1000), BoundExceededError);
}

TEST(Sylow, OrderIsFullPPart) {
  auto m11 = k12_m11().group;
  EXPECT_EQ(sylow_subgroup(m11, 2).order(), 16);
  EXPECT_EQ(sylow_subgroup(m11, 3).order(), 9);
  EXPECT_EQ(sylow_subgroup(m11, 11).order(), 11);
  auto s = sylow_subgroup(psl2_action(13), 2);
  EXPECT_EQ(s.order(), 4);
  EXPECT_TRUE(is_subgroup(s, psl2_action(13)));
}

TEST(SemiregularPrimePower, Examples) {
  auto a = semiregular_of_prime_power_degree(oracle::cyclic(4));
  EXPECT_EQ(order(a), 2);
  EXPECT_TRUE(is_semiregular(a));
  EXPECT_EQ(a, cyc(4, {{0, 2}, {1, 3}}));

  EXPECT_EQ(semiregular_of_prime_power_degree(d4()), cyc(4, {{0, 2}, {1, 3}}));

  PermGroup c3c3(9, {cyc(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
                     cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})});
  auto b = semiregular_of_prime_power_degree(c3c3);
  EXPECT_EQ(order(b), 3);
  EXPECT_TRUE(is_semiregular(b));
  EXPECT_TRUE(c3c3.contains(b));

  EXPECT_THROW(semiregular_of_prime_power_degree(c6()), PreconditionError);
  EXPECT_THROW(semiregular_of_prime_power_degree(PermGroup(4, {cyc(4, {{0, 1}})})),
               PreconditionError);
}

TEST(SemiregularPrimePower, PropertyOnTransitiveGroups) {
  std::vector<PermGroup> groups{oracle::symmetric(4), oracle::symmetric(8), oracle::dihedral(8),
                                oracle::dihedral(9), psl2_action(7), praeger_xu_group({2, 4, 2})};
  for (const auto& g : groups) {
    auto a = semiregular_of_prime_power_degree(g);
    auto p = prime_power_base(g.degree());
    EXPECT_EQ(order(a), p);
    EXPECT_TRUE(is_semiregular(a));
    EXPECT_TRUE(g.contains(a));
  }
}

TEST(Lift, Examples) {
  auto g = c6();
  auto b = action_on_partition(g, Partition::from_classes(6, {{0, 3}, {1, 4}, {2, 5}}));
  auto img = b.image_group().generators().front();
  auto x = lift_semiregular(b, g, img, 3);
  EXPECT_EQ(order(x), 3);
  EXPECT_TRUE(is_semiregular(x));
  EXPECT_TRUE(g.contains(x));
  EXPECT_EQ(cycle_decomposition(x).length_multiset, (std::map<std::size_t, std::size_t>{{3, 2}}));

  // Trivial kernel: the preimage itself.
  auto s = action_on_partition(oracle::cyclic(5), Partition::singletons(5));
  auto y = cyc(5, {{0, 1, 2, 3, 4}});
  EXPECT_EQ(lift_semiregular(s, oracle::cyclic(5), y, 5), y);

  // C2 x C3 on 6 points, points (a, b) -> 3a + b; quotient by the C2 factor.
  auto c2 = cyc(6, {{0, 3}, {1, 4}, {2, 5}});
  auto c3 = cyc(6, {{0, 1, 2}, {3, 4, 5}});
  PermGroup prod(6, {c2, c3});
  auto bp = action_on_partition(prod, orbit_partition(PermGroup(6, {c2})));
  auto z = lift_semiregular(bp, prod, bp.image_of(c3), 3);
  EXPECT_EQ(z, c3);

  // r dividing the kernel order is refused.
  EXPECT_THROW(lift_semiregular(b, g, b.image_group().generators().front(), 2),
               PreconditionError);
}

TEST(Lift, OutputProperties) {
  for (std::uint64_t r : {3u, 5u}) {
    PXParams px{2, r, 1};
    auto g = praeger_xu_group(px);
    auto n = PermGroup(g.degree(), praeger_xu_translations(px));
    auto b = action_on_partition(g, orbit_partition(n));
    Permutation rot = b.image_of(praeger_xu(px).rotation);
    ASSERT_EQ(order(rot), r);
    auto x = lift_semiregular(b, g, rot, r);
    EXPECT_EQ(order(x), r);
    EXPECT_TRUE(is_semiregular(x));
    EXPECT_TRUE(g.contains(x));
    auto xi = b.image_of(x);
    bool power_of = false;
    for (std::uint64_t k = 1; k < r; ++k) power_of |= power(rot, static_cast<std::int64_t>(k)) == xi;
    EXPECT_TRUE(power_of);
  }
}

TEST(Normalizer, Examples) {
  EXPECT_EQ(normalizer(s4(), oracle::cyclic(4)).order(), 8);
  auto klein = minimal_normal_subgroups(s4()).front();
  EXPECT_EQ(normalizer(s4(), klein).order(), 24);
  auto psl7 = psl2_action(7);
  auto c7 = sylow_subgroup(psl7, 7);
  auto n = normalizer(psl7, c7);
  EXPECT_EQ(n.order(), 21);
  std::size_t brute = 0;
  auto hs = oracle::closure(c7);
  for (const auto& x : oracle::closure(psl7)) {
    bool ok = true;
    for (const auto& h : c7.generators())
      ok &= hs.count(oracle::mul(oracle::mul(oracle::inv(x), oracle::images_of(h)), x)) > 0;
    brute += ok;
  }
  EXPECT_EQ(brute, 21u);
  EXPECT_THROW(normalizer(oracle::cyclic(4), s4()), PreconditionError);
}

TEST(NormalClosure, Basic) {
  auto n = normal_closure(s4(), std::vector<Permutation>{cyc(4, {{0, 1}, {2, 3}})});
  EXPECT_EQ(n.order(), 4);
  auto a = normal_closure(s4(), std::vector<Permutation>{cyc(4, {{0, 1, 2}})});
  EXPECT_EQ(a.order(), 12);
}

TEST(GroupRelations, SubgroupAndNormalizes) {
  PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  EXPECT_TRUE(is_subgroup(a4, s4()));
  EXPECT_FALSE(is_subgroup(s4(), a4));
  EXPECT_TRUE(same_group(a4, PermGroup(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})})));
  EXPECT_TRUE(normalizes(cyc(4, {{0, 1}}), a4));
  EXPECT_FALSE(normalizes(cyc(4, {{0, 1}}), oracle::cyclic(4)));
}
