#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polycirc/graph.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/stabilizer_chain.hpp"

namespace polycirc {

struct CorpusConfig {
  /// Valency 2p for each p listed.
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint64_t r_min = 3;
  std::uint64_t r_max = 8;
  /// 0 means up to r - 1.
  std::uint64_t s_max = 0;
  std::size_t max_vertices = 2000;
  /// Standard double covers of the non-bipartite Praeger-Xu graphs.
  bool double_covers = true;
  /// Quotients by the diagonal translation (s >= 2).
  bool quotients = true;
  /// Coset graphs of small groups with valency 2p.
  bool coset_search = true;
  /// Largest group order scanned by the coset search.
  std::uint64_t coset_group_bound = 1000;
  std::uint64_t seed = kDefaultSeed;
};

struct CorpusInstance {
  std::string id;
  std::string family;
  /// "key=value" pairs joined by commas, e.g. "p=2,r=4,s=1".
  std::string params;
  Graph graph;
  PermGroup group;
  std::string note;
  std::uint64_t seed = 0;
};

struct Corpus {
  std::vector<CorpusInstance> instances;
  /// One line per candidate that failed validation.
  std::vector<std::string> skipped;
};

/// Deterministic for a fixed config. Every instance is connected, has
/// valency 2p for a configured p, and its group is arc-transitive.
Corpus corpus_generate(const CorpusConfig& config = {});

}  // namespace polycirc
