#include <gtest/gtest.h>

#include "oracle.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/families.hpp"
#include "polycirc/graph_ops.hpp"
#include "polycirc/group_ops.hpp"
#include "polycirc/report.hpp"

using namespace polycirc;
using oracle::cyc;

namespace {

PermGroup fibre_flips(const PXParams& px) {
  return PermGroup(px.vertex_count(), praeger_xu_translations(px));
}

void expect_state(const ProofReport& r, const std::string& name, bool applicable) {
  const auto& c = r.at(name);
  EXPECT_EQ(c.applicable, applicable) << name << ": " << c.detail;
  if (applicable) EXPECT_TRUE(c.passed) << name << ": " << c.detail;
}

// K_{2,2,2,2} with S2 wr S4; vertex 2b + i is point i of block b.
GraphWithGroup cocktail_party() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v)
      if (u / 2 != v / 2) e.emplace_back(u, v);
  PermGroup g(8, {cyc(8, {{0, 1}}), cyc(8, {{0, 2}, {1, 3}}), cyc(8, {{0, 2, 4, 6}, {1, 3, 5, 7}})});
  return {Graph::from_edges(8, e), g};
}

}  // namespace

TEST(Report, NamesAndAnchors) {
  auto r = proof_invariant_report(cycle_graph(6), oracle::dihedral(6));
  ASSERT_EQ(r.checks.size(), std::size(kCheckNames));
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    EXPECT_EQ(r.checks[i].name, kCheckNames[i]);
    EXPECT_FALSE(r.checks[i].anchor.empty());
    EXPECT_FALSE(r.checks[i].detail.empty());
  }
  EXPECT_THROW(r.at("no-such-check"), std::out_of_range);
}

TEST(Report, C6) {
  auto r = proof_invariant_report(cycle_graph(6), oracle::dihedral(6));
  expect_state(r, "local-action-divisibility", true);
  for (const char* name : {"kernel-2-group", "counting-bound", "arc-stabilizer-bound",
                           "claim-fixes-class", "no-intra-class-edges"})
    expect_state(r, name, false);
  EXPECT_TRUE(r.all_passed());
}

TEST(Report, K12M11) {
  auto k = k12_m11();
  auto r = proof_invariant_report(k.graph, k.group);
  expect_state(r, "local-action-divisibility", true);
  for (const char* name : {"kernel-2-group", "counting-bound", "arc-stabilizer-bound",
                           "claim-fixes-class"})
    expect_state(r, name, false);
  EXPECT_TRUE(r.all_passed());
}

TEST(Report, PraegerXuWithFibreFlips) {
  PXParams px{2, 4, 1};
  ReportConfig cfg;
  cfg.m = fibre_flips(px);
  auto r = proof_invariant_report(praeger_xu(px).graph, praeger_xu_group(px), cfg);
  expect_state(r, "local-action-divisibility", true);
  expect_state(r, "arc-stabilizer-bound", true);
  expect_state(r, "no-intra-class-edges", true);
  EXPECT_TRUE(r.all_passed());
}

TEST(Report, KernelCheckOnCocktailParty) {
  auto c = cocktail_party();
  ASSERT_EQ(c.group.order(), 384);
  ASSERT_TRUE(is_arc_transitive(c.graph, c.group));
  auto r = proof_invariant_report(c.graph, c.group);
  expect_state(r, "kernel-2-group", true);
  EXPECT_TRUE(r.all_passed());
}

TEST(Report, ClaimCheckWithSeveralBuddies) {
  PXParams px{2, 5, 2};
  ReportConfig cfg;
  cfg.m = fibre_flips(px);
  auto r = proof_invariant_report(praeger_xu(px).graph, praeger_xu_group(px), cfg);
  expect_state(r, "claim-fixes-class", true);
  expect_state(r, "arc-stabilizer-bound", true);
  EXPECT_TRUE(r.all_passed());
}

TEST(Report, ArcStabilizerBoundAgreesWithBrute) {
  PXParams px{2, 4, 1};
  auto g = praeger_xu(px).graph;
  auto m = oracle::closure(fibre_flips(px));
  for (std::size_t s = 1; s <= 4; ++s)
    for (const auto& arc : s_arcs(g, s, 50, 7)) {
      std::size_t fix_v0 = 0, fix_arc = 0;
      for (const auto& e : m) {
        if (e[arc[0]] != arc[0]) continue;
        ++fix_v0;
        bool all = true;
        for (Vertex v : arc) all &= e[v] == v;
        fix_arc += all;
      }
      EXPECT_LE(fix_v0, fix_arc << s);
    }
}

TEST(Report, OnCorpusSample) {
  for (PXParams px : {PXParams{2, 3, 1}, PXParams{2, 6, 3}, PXParams{3, 3, 1}, PXParams{3, 4, 2},
                      PXParams{5, 3, 1}}) {
    auto r = proof_invariant_report(praeger_xu(px).graph, praeger_xu_group(px));
    EXPECT_TRUE(r.all_passed());
    expect_state(r, "local-action-divisibility", true);
  }
}

TEST(Report, RejectsNonArcTransitiveInput) {
  EXPECT_THROW(proof_invariant_report(cycle_graph(6), oracle::cyclic(6)), PreconditionError);
}
