#include "polycirc/graph_ops.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "polycirc/errors.hpp"

namespace polycirc {

LocalGraph local_graph(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  LocalGraph out{Graph(nbrs.size()), {nbrs.begin(), nbrs.end()}};
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.adjacent(nbrs[i], nbrs[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = Graph::from_edges(nbrs.size(), edges);
  return out;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a) {
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      auto nb = g.neighbors(b);
      // Smallest common neighbour above b.
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia == *ib) return std::array<Vertex, 3>{a, b, *ia};
        if (*ia < *ib) ++ia; else ++ib;
      }
    }
  }
  return std::nullopt;
}

QuotientGraph quotient_graph(const Graph& g, const Partition& classes) {
  if (classes.point_count() != g.order())
    throw PreconditionError("partition covers " + std::to_string(classes.point_count()) +
                            " points, graph has " + std::to_string(g.order()) + " vertices");
  QuotientGraph out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    auto cu = static_cast<Vertex>(classes.class_of(u));
    auto cv = static_cast<Vertex>(classes.class_of(v));
    if (cu == cv) ++out.intra_class_edges;
    else edges.emplace_back(cu, cv);
  }
  out.graph = Graph::from_edges(classes.size(), edges);
  return out;
}

Graph standard_double_cover(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(2 * u, 2 * v + 1);
    edges.emplace_back(2 * u + 1, 2 * v);
  }
  return Graph::from_edges(2 * g.order(), edges);
}

Permutation lift_to_double_cover(const Permutation& a) {
  std::vector<Point> img(2 * a.degree());
  for (Point v = 0; v < a.degree(); ++v) {
    img[2 * v] = 2 * a[v];
    img[2 * v + 1] = 2 * a[v] + 1;
  }
  return Permutation::unchecked(std::move(img));
}

Permutation double_cover_swap(std::size_t n) {
  std::vector<Point> img(2 * n);
  for (Point i = 0; i < img.size(); ++i) img[i] = i ^ 1U;
  return Permutation::unchecked(std::move(img));
}

PermGroup lift_to_double_cover(const PermGroup& g) {
  std::vector<Permutation> gens;
  for (const auto& a : g.generators()) gens.push_back(lift_to_double_cover(a));
  gens.push_back(double_cover_swap(g.degree()));
  return PermGroup(2 * g.degree(), std::move(gens));
}

DensityResult density_closure(const Graph& g, std::span<const Vertex> seeds,
                              Schedule schedule) {
  if (seeds.empty()) throw PreconditionError("density closure needs a nonempty seed set");
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<unsigned> hits(n, 0);
  std::vector<Vertex> work;
  std::size_t head = 0;
  auto add = [&](Vertex v) {
    in[v] = 1;
    for (Vertex u : g.neighbors(v))
      if (!in[u] && ++hits[u] == 2) work.push_back(u);
  };
  for (Vertex v : seeds) {
    if (v >= n) throw PreconditionError("seed vertex " + std::to_string(v) + " out of range");
    if (!in[v]) add(v);
  }
  while (head < work.size()) {
    Vertex v;
    if (schedule == Schedule::kQueue) {
      v = work[head++];
    } else {
      v = work.back();
      work.pop_back();
    }
    if (!in[v]) add(v);
  }
  DensityResult out;
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) out.closure.push_back(v);
  out.dense = out.closure.size() == n;
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& a) {
  if (a.degree() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(a[u]) != g.degree(u)) return false;
    for (Vertex v : g.neighbors(u))
      if (!g.adjacent(a[u], a[v])) return false;
  }
  return true;
}

namespace {

// Arcs are numbered by position in the concatenated adjacency lists.
struct ArcIndex {
  explicit ArcIndex(const Graph& g) : graph(g), offset(g.order() + 1, 0) {
    for (Vertex v = 0; v < g.order(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  }
  std::size_t size() const { return offset.back(); }
  std::size_t id(Vertex u, Vertex v) const {
    auto nbrs = graph.neighbors(u);
    return offset[u] + static_cast<std::size_t>(
                           std::lower_bound(nbrs.begin(), nbrs.end(), v) - nbrs.begin());
  }
  Vertex tail(std::size_t arc) const {
    return static_cast<Vertex>(std::upper_bound(offset.begin(), offset.end(), arc) -
                               offset.begin() - 1);
  }
  Vertex head(std::size_t arc) const {
    Vertex u = tail(arc);
    return graph.neighbors(u)[arc - offset[u]];
  }

  const Graph& graph;
  std::vector<std::size_t> offset;
};

}  // namespace

bool is_arc_transitive(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.order())
    throw PreconditionError("group degree " + std::to_string(group.degree()) +
                            " differs from vertex count " + std::to_string(g.order()));
  for (const auto& a : group.generators())
    if (!is_automorphism(g, a)) throw PreconditionError("generator is not an automorphism");
  auto k = g.valency();
  if (!k || *k == 0) return false;
  ArcIndex arcs(g);
  std::vector<char> seen(arcs.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex u = arcs.tail(queue[i]), v = arcs.head(queue[i]);
    for (const auto& a : group.generators()) {
      std::size_t b = arcs.id(a[u], a[v]);
      if (!seen[b]) {
        seen[b] = 1;
        queue.push_back(b);
      }
    }
  }
  return queue.size() == arcs.size();
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// ways[k][arc]: number of k-step non-backtracking continuations after `arc`.
// The double table drives sampling; the saturating one gives exact counts.
struct ArcWalkTables {
  ArcWalkTables(const ArcIndex& arcs, std::size_t s) {
    exact.assign(s, std::vector<std::uint64_t>(arcs.size(), 1));
    approx.assign(s, std::vector<double>(arcs.size(), 1.0));
    const Graph& g = arcs.graph;
    for (std::size_t k = 1; k < s; ++k)
      for (std::size_t arc = 0; arc < arcs.size(); ++arc) {
        Vertex u = arcs.tail(arc), v = arcs.head(arc);
        std::uint64_t e = 0;
        double a = 0;
        for (Vertex w : g.neighbors(v)) {
          if (w == u) continue;
          std::size_t next = arcs.id(v, w);
          e = sat_add(e, exact[k - 1][next]);
          a += approx[k - 1][next];
        }
        exact[k][arc] = e;
        approx[k][arc] = a;
      }
  }
  std::vector<std::vector<std::uint64_t>> exact;
  std::vector<std::vector<double>> approx;
};

}  // namespace

std::uint64_t count_s_arcs(const Graph& g, std::size_t s) {
  if (s == 0) return g.order();
  ArcIndex arcs(g);
  ArcWalkTables t(arcs, s);
  std::uint64_t total = 0;
  for (std::size_t arc = 0; arc < arcs.size(); ++arc) total = sat_add(total, t.exact[s - 1][arc]);
  return total;
}

std::vector<SArc> s_arcs(const Graph& g, std::size_t s, std::size_t sample, std::uint64_t seed) {
  if (s == 0) throw PreconditionError("s-arcs need s >= 1");
  ArcIndex arcs(g);
  ArcWalkTables t(arcs, s);
  std::uint64_t total = 0;
  for (std::size_t arc = 0; arc < arcs.size(); ++arc) total = sat_add(total, t.exact[s - 1][arc]);

  std::vector<SArc> out;
  if (total <= sample) {
    SArc cur;
    auto extend = [&](auto& self) -> void {
      if (cur.size() == s + 1) {
        out.push_back(cur);
        return;
      }
      Vertex v = cur.back();
      for (Vertex w : g.neighbors(v)) {
        if (cur.size() >= 2 && w == cur[cur.size() - 2]) continue;
        cur.push_back(w);
        self(self);
        cur.pop_back();
      }
    };
    for (Vertex v = 0; v < g.order(); ++v) {
      cur.assign(1, v);
      extend(extend);
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> first(t.approx[s - 1].begin(), t.approx[s - 1].end());
  out.reserve(sample);
  std::vector<double> w;
  for (std::size_t i = 0; i < sample; ++i) {
    std::size_t arc = first(rng);
    SArc a{arcs.tail(arc), arcs.head(arc)};
    for (std::size_t k = s - 1; k > 0; --k) {
      Vertex u = a[a.size() - 2], v = a.back();
      std::vector<Vertex> next;
      w.clear();
      for (Vertex x : g.neighbors(v)) {
        if (x == u) continue;
        next.push_back(x);
        w.push_back(t.approx[k - 1][arcs.id(v, x)]);
      }
      std::discrete_distribution<std::size_t> step(w.begin(), w.end());
      a.push_back(next[step(rng)]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace polycirc
