#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "polycirc/bigint.hpp"
#include "polycirc/permutation.hpp"
#include "polycirc/stabilizer_chain.hpp"

namespace polycirc {

/// A permutation group given by generators. The generator list is
/// deduplicated with identities removed; the trivial group keeps a single
/// identity generator. The default stabilizer chain is built on first use
/// and shared by copies, which is safe across threads.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  bool is_trivial() const noexcept { return gens_.front().is_identity(); }

  const StabilizerChain& chain() const;
  const BigInt& order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<ChainCache> cache_;
};

}  // namespace polycirc
