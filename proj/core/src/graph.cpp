#include "polycirc/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "polycirc/errors.hpp"

namespace polycirc {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} out of range");
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  Graph g;
  g.adj_ = std::move(adj);
  return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
  const std::size_t n = adj.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto& nbrs = adj[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw PreconditionError("repeated neighbour at vertex " + std::to_string(v));
    for (Vertex u : nbrs) {
      if (u >= n) throw PreconditionError("neighbour " + std::to_string(u) + " out of range");
      if (u == v) throw PreconditionError("loop at vertex " + std::to_string(v));
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex u : adj[v])
      if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<Vertex>(v)))
        throw PreconditionError("adjacency is not symmetric at {" + std::to_string(v) + "," +
                                std::to_string(u) + "}");
  Graph g;
  g.adj_ = std::move(adj);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nbrs : adj_) twice += nbrs.size();
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adj_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<std::size_t> Graph::valency() const {
  if (adj_.empty()) return std::nullopt;
  const std::size_t k = adj_.front().size();
  for (const auto& nbrs : adj_)
    if (nbrs.size() != k) return std::nullopt;
  return k;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edges(n, e);
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

std::vector<std::size_t> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    comp[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (comp[u] == n) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return comp;
}

std::size_t component_count(const Graph& g) {
  auto comp = components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::size_t best = inf;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[s] = 0;
    parent[s] = static_cast<Vertex>(s);
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] == inf) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (parent[v] != u) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == inf) return std::nullopt;
  return best;
}

}  // namespace polycirc
