#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace polycirc {

using Vertex = std::uint32_t;

/// Finite simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Loops are rejected; repeated edges collapse to one.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  /// Validates symmetry and the absence of loops and repeated neighbours.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Common degree, or nullopt when the graph is not regular (or empty).
  std::optional<std::size_t> valency() const;
  /// Edges {u, v} with u < v, lexicographically ordered.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph& rhs) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

/// Component index per vertex, components numbered by least vertex.
std::vector<std::size_t> components(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Length of a shortest cycle, nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace polycirc
