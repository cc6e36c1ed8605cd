#include "polycirc/perm_group.hpp"

#include <string>
#include <unordered_set>

#include "polycirc/errors.hpp"

namespace polycirc {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<ChainCache>()) {
  if (degree == 0) throw PreconditionError("group degree must be at least 1");
  std::unordered_set<Permutation> seen;
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw PreconditionError("generator of degree " + std::to_string(g.degree()) +
                              " in a group of degree " + std::to_string(degree));
    if (g.is_identity() || !seen.insert(g).second) continue;
    gens_.push_back(std::move(g));
  }
  if (gens_.empty()) gens_.push_back(Permutation::identity(degree));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(degree_, gens_);
  });
  return *cache_->chain;
}

}  // namespace polycirc
