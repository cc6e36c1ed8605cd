#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycirc/bigint.hpp"
#include "polycirc/graph.hpp"
#include "polycirc/group_ops.hpp"
#include "polycirc/partition.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/permutation.hpp"

namespace polycirc {

enum class Method { kDirectSearch, kPrimePower, kQuotientLift, kBuddySwap, kExhaustedNone };

/// Stable tags: "direct-search", "prime-power", "quotient-lift",
/// "buddy-swap", "exhausted-none".
std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view tag);

struct Certificate {
  std::string graph_id;
  /// The identity for exhausted-none.
  Permutation element;
  BigInt element_order = 1;
  std::uint64_t cycle_length = 1;
  Method method = Method::kDirectSearch;
  std::vector<std::string> trace;
  BigInt group_order = 1;
  std::uint64_t seed = 0;
};

struct SearchConfig {
  /// Tried in order; kExhaustedNone is always the last resort when the
  /// whole group was enumerated, whether or not it is listed.
  std::vector<Method> routes{Method::kDirectSearch, Method::kPrimePower, Method::kQuotientLift,
                             Method::kBuddySwap};
  /// Groups up to this order are enumerated; larger ones are sampled.
  std::uint64_t bound = kDefaultBound;
  std::uint64_t seed = kDefaultSeed;
  /// Random elements drawn by direct search on groups above the bound.
  std::size_t samples = 4000;
  /// Semiregular elements whose order is one of these primes are ignored.
  std::vector<std::uint64_t> avoid_primes;
  std::string graph_id;
};

/// Group induced by G_v on the neighbourhood of v, on local indices
/// 0..deg(v)-1 in neighbour order. Not assumed faithful.
PermGroup local_action(const Graph& g, const PermGroup& group, Vertex v);

struct Verdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks a certificate from scratch. For exhausted-none it re-enumerates
/// the group, which must have order at most `bound`. Otherwise `reason`
/// lists every failed check, separated by "; ".
Verdict verify_certificate(const Graph& g, const PermGroup& group, const Certificate& cert,
                           std::uint64_t bound = kDefaultBound);

/// Throws PreconditionError unless g is connected and the group is a
/// transitive group of automorphisms; InconclusiveError when every route
/// failed without a full enumeration. The result has passed
/// verify_certificate.
Certificate find_semiregular(const Graph& g, const PermGroup& group,
                             const SearchConfig& config = {});

struct BuddyStructure {
  Partition partition;
  /// buddy_map[x][c]: buddy of x with respect to the adjacent class c.
  std::vector<std::map<std::size_t, Vertex>> buddy_map;
  /// Number of distinct buddies of each vertex, or 0 if it varies.
  std::size_t buddies_per_vertex = 0;

  Vertex buddy(Vertex x, std::size_t cls) const { return buddy_map.at(x).at(cls); }
};

/// Throws PreconditionError naming the offending classes unless there are no
/// edges inside classes and every two adjacent classes induce a disjoint
/// union of 4-cycles.
BuddyStructure c4_buddy_structure(const Graph& g, const Partition& classes);

/// x -> its unique buddy. Throws PreconditionError unless
/// buddies_per_vertex == 1.
Permutation buddy_swap_automorphism(const Graph& g, const BuddyStructure& bs);

}  // namespace polycirc
