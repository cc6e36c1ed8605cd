#include "polycirc/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "polycirc/coset_graph.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/families.hpp"
#include "polycirc/graph_ops.hpp"
#include "polycirc/group_ops.hpp"

namespace polycirc {

namespace {

std::string px_params(const PXParams& px) {
  return "p=" + std::to_string(px.p) + ",r=" + std::to_string(px.r) + ",s=" + std::to_string(px.s);
}

std::string px_suffix(const PXParams& px) {
  return std::to_string(px.p) + "-" + std::to_string(px.r) + "-" + std::to_string(px.s);
}

class Builder {
 public:
  explicit Builder(const CorpusConfig& config) : config_(config) {}

  void offer(std::string id, std::string family, std::string params, Graph graph, PermGroup group,
             std::string note = {}) {
    std::string why;
    auto k = graph.valency();
    if (graph.order() > config_.max_vertices) why = "too many vertices";
    else if (!k || *k % 2 != 0 ||
             std::find(config_.primes.begin(), config_.primes.end(), *k / 2) == config_.primes.end())
      why = "valency is not 2p for a configured p";
    else if (!is_connected(graph)) why = "not connected";
    else if (!is_arc_transitive(graph, group)) why = "group is not arc-transitive";
    if (!why.empty()) {
      out_.skipped.push_back(id + ": " + why);
      return;
    }
    out_.instances.push_back({std::move(id), std::move(family), std::move(params),
                              std::move(graph), std::move(group), std::move(note), config_.seed});
  }

  Corpus take() { return std::move(out_); }

 private:
  const CorpusConfig& config_;
  Corpus out_;
};

struct NamedGroup {
  std::string name;
  PermGroup group;
};

std::vector<NamedGroup> coset_sources() {
  auto cyc = [](std::size_t n, std::vector<std::vector<Point>> c) {
    return Permutation::from_cycles(n, c);
  };
  return {
      {"s4", PermGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})})},
      {"a5", PermGroup(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})})},
      {"s5", PermGroup(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})})},
      {"psl2-7", psl2_action(7)},
      {"pgl2-7", pgl2_action(7)},
      {"a6", PermGroup(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{1, 2, 3, 4, 5}})})},
      {"psl2-11", psl2_action(11)},
  };
}

// Subgroups worth trying as vertex stabilizers: cyclic subgroups (one per
// cycle type), point and two-point stabilizers, Sylow subgroups.
std::vector<PermGroup> stabilizer_candidates(const PermGroup& g, std::uint64_t bound) {
  std::vector<PermGroup> out;
  std::set<std::map<std::size_t, std::size_t>> types;
  for_each_element(g, bound, [&](const Permutation& x) {
    if (!x.is_identity() && types.insert(cycle_decomposition(x).length_multiset).second)
      out.emplace_back(g.degree(), std::vector<Permutation>{x});
    return true;
  });
  out.push_back(point_stabilizer(g, 0));
  std::vector<Point> two{0, 1};
  out.push_back(pointwise_stabilizer(g, two));
  for (auto q : prime_divisors(g.order(), g.degree())) out.push_back(sylow_subgroup(g, q));
  return out;
}

void coset_search(const CorpusConfig& config, Builder& builder) {
  std::set<std::uint64_t> valencies;
  for (auto p : config.primes) valencies.insert(2 * p);
  for (const auto& [name, g] : coset_sources()) {
    if (g.order() > config.coset_group_bound) continue;
    std::vector<Permutation> elems = elements(g, config.coset_group_bound);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, bool, std::string>> seen;
    std::size_t hit = 0;
    for (const PermGroup& h : stabilizer_candidates(g, config.coset_group_bound)) {
      BigInt index = g.order() / h.order();
      if (index > config.max_vertices) continue;
      std::set<std::size_t> done;
      for (const auto& x : elems) {
        if (!h.contains(x * x) || h.contains(x) || normalizes(x, h)) continue;
        std::size_t k = double_coset_valency(h, x);
        if (!valencies.count(k) || done.count(k)) continue;
        CosetGraphBundle b = coset_graph(g, h, x, config.coset_group_bound);
        if (!b.generates()) continue;
        done.insert(k);
        const Graph& gr = b.graph();
        auto girth_value = girth(gr).value_or(0);
        auto key = std::make_tuple(gr.order(), k, girth_value, is_bipartite(gr),
                                   to_string(b.acting_group().order()));
        if (!seen.insert(key).second) continue;
        builder.offer("coset-" + name + "-" + std::to_string(hit++), "coset",
                      "group=" + name + ",h=" + to_string(h.order()) + ",k=" + std::to_string(k),
                      gr, b.acting_group());
      }
    }
  }
}

}  // namespace

Corpus corpus_generate(const CorpusConfig& config) {
  Builder builder(config);
  for (auto p : config.primes)
    for (auto r = config.r_min; r <= config.r_max; ++r) {
      std::uint64_t s_top = config.s_max == 0 ? r - 1 : std::min(config.s_max, r - 1);
      for (std::uint64_t s = 1; s <= s_top; ++s) {
        PXParams px{p, r, s};
        if (px.vertex_count() > config.max_vertices) break;
        Graph graph = praeger_xu(px).graph;
        PermGroup group = praeger_xu_group(px);
        builder.offer("px-" + px_suffix(px), "praeger-xu", px_params(px), graph, group,
                      s == 1 ? "lexicographic C_r[pK1]" : "");
        if (config.double_covers && r % 2 == 1 && 2 * px.vertex_count() <= config.max_vertices)
          builder.offer("px-dc-" + px_suffix(px), "praeger-xu-double-cover", px_params(px),
                        standard_double_cover(graph), lift_to_double_cover(group));
        if (config.quotients && s >= 2) {
          Permutation diag = praeger_xu_diagonal(px);
          Partition orbits = orbit_partition(PermGroup(graph.order(), {diag}));
          ActionBundle bundle = action_on_partition(group, orbits);
          builder.offer("px-q-" + px_suffix(px), "praeger-xu-quotient", px_params(px),
                        quotient_graph(graph, orbits).graph, bundle.image_group());
        }
      }
    }
  if (config.coset_search) coset_search(config, builder);
  return builder.take();
}

}  // namespace polycirc
