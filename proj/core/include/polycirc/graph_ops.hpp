#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polycirc/graph.hpp"
#include "polycirc/partition.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/permutation.hpp"

namespace polycirc {

struct LocalGraph {
  Graph graph;
  /// labels[i] is the vertex of the host graph behind local vertex i.
  std::vector<Vertex> labels;
};

/// Subgraph induced on the neighbourhood of v.
LocalGraph local_graph(const Graph& g, Vertex v);

/// Some triangle {a, b, c} with a < b < c, or nullopt.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

struct QuotientGraph {
  Graph graph;
  /// Edges of the host graph with both ends in one class. They have no
  /// counterpart in the (simple) quotient.
  std::size_t intra_class_edges = 0;
};

/// Vertices are the classes; distinct classes are adjacent iff some edge
/// joins them.
QuotientGraph quotient_graph(const Graph& g, const Partition& classes);

/// Vertex (v, i) is numbered 2v + i; (u, i) ~ (v, 1 - i) iff u ~ v.
Graph standard_double_cover(const Graph& g);
/// (v, i) -> (v^a, i) on the double cover.
Permutation lift_to_double_cover(const Permutation& a);
/// (v, i) -> (v, 1 - i) on the double cover of an n-vertex graph.
Permutation double_cover_swap(std::size_t n);
/// The lifted group together with the layer swap.
PermGroup lift_to_double_cover(const PermGroup& g);

enum class Schedule { kQueue, kStack };

struct DensityResult {
  /// Sorted.
  std::vector<Vertex> closure;
  bool dense = false;
};

/// Repeatedly adds any vertex with at least two neighbours in the current
/// set. The closure does not depend on `schedule`; it is exposed so callers
/// can check exactly that.
DensityResult density_closure(const Graph& g, std::span<const Vertex> seeds,
                              Schedule schedule = Schedule::kQueue);

bool is_automorphism(const Graph& g, const Permutation& a);

/// True iff `group` is transitive on the arcs of the regular graph `g`.
/// Throws PreconditionError when a generator is not an automorphism.
bool is_arc_transitive(const Graph& g, const PermGroup& group);

using SArc = std::vector<Vertex>;

/// Exact number of s-arcs, saturating at UINT64_MAX.
std::uint64_t count_s_arcs(const Graph& g, std::size_t s);

/// All s-arcs (in lexicographic order) when there are at most `sample` of
/// them, otherwise `sample` independent uniform draws. Deterministic in
/// `seed`.
std::vector<SArc> s_arcs(const Graph& g, std::size_t s, std::size_t sample, std::uint64_t seed);

}  // namespace polycirc
