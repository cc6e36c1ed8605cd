#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/families.hpp"
#include "polycirc/graph_ops.hpp"
#include "polycirc/group_ops.hpp"

using namespace polycirc;
using oracle::cyc;

namespace {

struct Fingerprint {
  std::size_t order;
  std::optional<std::size_t> valency;
  std::optional<std::size_t> girth;
  bool bipartite;
  bool connected;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g) {
  return {g.order(), g.valency(), girth(g), is_bipartite(g), is_connected(g)};
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(Graph, ConstructionRules) {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 0}, {1, 2}};
  auto g = Graph::from_edges(3, e);
  EXPECT_EQ(g.edge_count(), 2u);
  std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), PreconditionError);
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), PreconditionError);
  EXPECT_THROW(Graph::from_adjacency({{1, 1}, {0}}), PreconditionError);
  EXPECT_NO_THROW(Graph::from_adjacency({{1}, {0}}));
}

TEST(Graph, Fingerprints) {
  EXPECT_EQ(fingerprint(petersen_graph()), (Fingerprint{10, 3, 5, false, true}));
  EXPECT_EQ(fingerprint(complete_graph(4)), (Fingerprint{4, 3, 3, false, true}));
  EXPECT_EQ(fingerprint(cycle_graph(6)), (Fingerprint{6, 2, 6, true, true}));
}

TEST(LocalGraph, Examples) {
  auto k4 = local_graph(complete_graph(4), 2);
  EXPECT_EQ(k4.graph, complete_graph(3));
  EXPECT_EQ(k4.labels, (std::vector<Vertex>{0, 1, 3}));

  auto c6 = local_graph(cycle_graph(6), 0);
  EXPECT_EQ(c6.graph.order(), 2u);
  EXPECT_EQ(c6.graph.edge_count(), 0u);

  auto pet = petersen_graph();
  for (Vertex v = 0; v < 10; ++v) {
    auto l = local_graph(pet, v);
    EXPECT_EQ(l.graph.order(), 3u);
    EXPECT_EQ(l.graph.edge_count(), 0u);
    for (Vertex a : l.labels)
      for (Vertex b : l.labels) EXPECT_FALSE(pet.adjacent(a, b));
  }
}

TEST(Triangle, Examples) {
  auto t = find_triangle(k12_m11().graph);
  ASSERT_TRUE(t);
  auto g = complete_graph(12);
  EXPECT_TRUE(g.adjacent((*t)[0], (*t)[1]) && g.adjacent((*t)[1], (*t)[2]) &&
              g.adjacent((*t)[0], (*t)[2]));
  EXPECT_FALSE(find_triangle(cycle_graph(6)));
  EXPECT_FALSE(find_triangle(petersen_graph()));
  auto l = lemma33_instance(5, 2);
  EXPECT_EQ(l.bundle.graph(), complete_graph(6));
  EXPECT_TRUE(find_triangle(l.bundle.graph()));
}

TEST(Triangle, AgreesWithBruteScan) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(rng, 3 + rng() % 12, 0.2);
    bool brute = false;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b)
        for (Vertex c = b + 1; c < g.order(); ++c)
          brute |= g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    auto t = find_triangle(g);
    EXPECT_EQ(t.has_value(), brute);
    if (t) {
      EXPECT_LT((*t)[0], (*t)[1]);
      EXPECT_LT((*t)[1], (*t)[2]);
      EXPECT_TRUE(g.adjacent((*t)[0], (*t)[1]) && g.adjacent((*t)[1], (*t)[2]) &&
                  g.adjacent((*t)[0], (*t)[2]));
    }
  }
}

TEST(Quotient, Examples) {
  auto q = quotient_graph(cycle_graph(6), Partition::from_classes(6, {{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(q.graph, cycle_graph(3));
  EXPECT_EQ(q.intra_class_edges, 0u);

  auto pet = petersen_graph();
  EXPECT_EQ(quotient_graph(pet, Partition::singletons(10)).graph, pet);

  auto c4 = quotient_graph(cycle_graph(4), Partition::from_classes(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(c4.graph, complete_graph(2));

  auto k4 = quotient_graph(complete_graph(4), Partition::from_classes(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(k4.graph, complete_graph(2));
  EXPECT_EQ(k4.intra_class_edges, 2u);

  EXPECT_THROW(quotient_graph(pet, Partition::singletons(9)), PreconditionError);
}

TEST(DoubleCover, Examples) {
  auto c3 = standard_double_cover(cycle_graph(3));
  EXPECT_EQ(fingerprint(c3), (Fingerprint{6, 2, 6, true, true}));
  auto c4 = standard_double_cover(cycle_graph(4));
  EXPECT_EQ(c4.order(), 8u);
  EXPECT_EQ(oracle::components(c4), 2u);
  EXPECT_EQ(c4.valency(), 2u);
  auto pet = standard_double_cover(petersen_graph());
  EXPECT_EQ(pet.order(), 20u);
  EXPECT_EQ(pet.valency(), 3u);
  EXPECT_TRUE(is_bipartite(pet));
  EXPECT_TRUE(is_connected(pet));
  // Desargues fingerprint.
  EXPECT_EQ(girth(pet), 6u);
}

TEST(DoubleCover, LayoutAndLiftedGroup) {
  auto g = petersen_graph();
  auto d = standard_double_cover(g);
  for (auto [u, v] : g.edges()) {
    EXPECT_TRUE(d.adjacent(2 * u, 2 * v + 1));
    EXPECT_TRUE(d.adjacent(2 * u + 1, 2 * v));
    EXPECT_FALSE(d.adjacent(2 * u, 2 * v));
  }
  auto h = lift_to_double_cover(PermGroup(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}));
  auto c = standard_double_cover(cycle_graph(3));
  EXPECT_EQ(h.order(), 12);
  EXPECT_TRUE(is_arc_transitive(c, h));
}

TEST(DoubleCover, BipartiteAndConnectivityOnRandomGraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(rng, 2 + rng() % 14, 0.15 + 0.1 * (trial % 4));
    auto d = standard_double_cover(g);
    EXPECT_TRUE(is_bipartite(d));
    bool base_connected = oracle::components(g) == 1;
    EXPECT_EQ(oracle::components(d) == 1, base_connected && !is_bipartite(g));
  }
}

TEST(Density, Examples) {
  std::vector<Vertex> s{0, 1};
  auto k4 = density_closure(complete_graph(4), s);
  EXPECT_TRUE(k4.dense);
  auto c6 = density_closure(cycle_graph(6), s);
  EXPECT_EQ(c6.closure, s);
  EXPECT_FALSE(c6.dense);
  std::vector<Vertex> edge{4, 9};
  EXPECT_TRUE(density_closure(k12_m11().graph, edge).dense);
  EXPECT_THROW(density_closure(k4.dense ? complete_graph(4) : Graph(4), std::vector<Vertex>{}),
               PreconditionError);
}

TEST(Density, MonotoneIdempotentConfluent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 20;
    auto g = oracle::random_graph(rng, n, 0.25);
    std::vector<Vertex> s0, s1;
    for (Vertex v = 0; v < n; ++v) {
      bool in0 = rng() % 4 == 0;
      if (in0) s0.push_back(v);
      if (in0 || rng() % 5 == 0) s1.push_back(v);
    }
    if (s0.empty()) s0.push_back(0);
    if (std::find(s1.begin(), s1.end(), s0.front()) == s1.end()) s1.push_back(s0.front());

    auto a = density_closure(g, s0, Schedule::kQueue);
    auto b = density_closure(g, s0, Schedule::kStack);
    EXPECT_EQ(a.closure, b.closure);
    auto o = oracle::density_closure(g, {s0.begin(), s0.end()});
    EXPECT_EQ(std::set<Vertex>(a.closure.begin(), a.closure.end()), o);
    EXPECT_EQ(a.dense, o.size() == n);

    EXPECT_EQ(density_closure(g, a.closure).closure, a.closure);

    auto c = density_closure(g, s1);
    EXPECT_TRUE(std::includes(c.closure.begin(), c.closure.end(), a.closure.begin(),
                              a.closure.end()));
  }
}

TEST(Density, DoubleCoverOfDenseGraphIsDense) {
  std::mt19937_64 rng(35);
  int tested = 0;
  while (tested < 200) {
    std::size_t n = 3 + rng() % 12;
    auto g = oracle::random_graph(rng, n, 0.45);
    std::vector<Vertex> s0;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) s0.push_back(v);
    if (s0.empty()) continue;
    if (!density_closure(g, s0).dense) continue;
    ++tested;
    std::set<Vertex> lifted;
    for (Vertex v : s0) {
      lifted.insert(2 * v);
      lifted.insert(2 * v + 1);
    }
    auto d = standard_double_cover(g);
    EXPECT_EQ(oracle::density_closure(d, lifted).size(), 2 * n);
    std::vector<Vertex> lv(lifted.begin(), lifted.end());
    EXPECT_TRUE(density_closure(d, lv).dense);
  }
}

TEST(Automorphism, AgreesWithAllPairsCheck) {
  std::mt19937_64 rng(8);
  auto pet = petersen_graph();
  int hits = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = oracle::random_permutation(rng, 10);
    bool brute = oracle::is_automorphism(pet, oracle::images_of(a));
    hits += brute;
    EXPECT_EQ(is_automorphism(pet, a), brute);
  }
  // Compose random automorphisms from a known generating set too.
  PermGroup c6d(6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})});
  for (const auto& e : elements(c6d, 100)) EXPECT_TRUE(is_automorphism(cycle_graph(6), e));
  EXPECT_FALSE(is_automorphism(cycle_graph(6), cyc(6, {{0, 1}})));
}

TEST(ArcTransitive, Examples) {
  auto c6 = cycle_graph(6);
  EXPECT_TRUE(is_arc_transitive(c6, oracle::dihedral(6)));
  EXPECT_FALSE(is_arc_transitive(c6, oracle::cyclic(6)));
  auto k = k12_m11();
  EXPECT_TRUE(is_arc_transitive(k.graph, k.group));
  EXPECT_THROW(is_arc_transitive(c6, PermGroup(6, {cyc(6, {{0, 1}})})), PreconditionError);
}

TEST(ArcTransitive, MatchesBruteArcOrbit) {
  auto k = k12_m11();
  auto els = oracle::closure(k.group);
  std::set<std::pair<Vertex, Vertex>> arcs;
  for (const auto& e : els) arcs.emplace(e[0], e[1]);
  EXPECT_EQ(arcs.size(), 132u);
}

TEST(SArcs, Examples) {
  auto c6 = s_arcs(cycle_graph(6), 2, 100, 1);
  EXPECT_EQ(c6.size(), 12u);
  EXPECT_EQ(count_s_arcs(cycle_graph(6), 2), 12u);
  EXPECT_EQ(s_arcs(complete_graph(4), 1, 100, 1).size(), 12u);
  auto pet = petersen_graph();
  for (const auto& a : s_arcs(pet, 1, 100, 3)) {
    ASSERT_EQ(a.size(), 2u);
    EXPECT_TRUE(pet.adjacent(a[0], a[1]));
  }
}

TEST(SArcs, SampledArcsAreValidAndDeterministic) {
  auto g = k12_m11().graph;
  EXPECT_EQ(count_s_arcs(g, 3), 12u * 11 * 10 * 10);
  auto a = s_arcs(g, 3, 100, 42);
  auto b = s_arcs(g, 3, 100, 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 100u);
  for (const auto& arc : a) {
    ASSERT_EQ(arc.size(), 4u);
    for (std::size_t i = 0; i + 1 < arc.size(); ++i) EXPECT_TRUE(g.adjacent(arc[i], arc[i + 1]));
    for (std::size_t i = 1; i + 1 < arc.size(); ++i) EXPECT_NE(arc[i - 1], arc[i + 1]);
  }
}

TEST(SArcs, CountMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(rng, 3 + rng() % 7, 0.5);
    for (std::size_t s = 1; s <= 3; ++s) {
      // Brute count by extending walks one step at a time.
      std::vector<std::vector<Vertex>> walks;
      for (Vertex v = 0; v < g.order(); ++v) walks.push_back({v});
      for (std::size_t k = 0; k < s; ++k) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& w : walks)
          for (Vertex u = 0; u < g.order(); ++u)
            if (g.adjacent(w.back(), u) && (w.size() < 2 || w[w.size() - 2] != u)) {
              next.push_back(w);
              next.back().push_back(u);
            }
        walks = std::move(next);
      }
      EXPECT_EQ(count_s_arcs(g, s), walks.size());
      auto listed = s_arcs(g, s, walks.size() + 1, 0);
      std::sort(walks.begin(), walks.end());
      EXPECT_EQ(listed, walks);
    }
  }
}
