#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "polycirc/bigint.hpp"
#include "polycirc/permutation.hpp"

namespace polycirc {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct ChainOptions {
  /// Points placed first in the base, in order, even if some are redundant.
  std::vector<Point> base_prefix;
  /// Seed of the product-replacement generator used by the randomized phase.
  std::uint64_t seed = kDefaultSeed;
  /// Randomized phase stops after this many consecutive random elements
  /// sift to the identity. The deterministic pass runs regardless.
  unsigned random_stop = 24;
};

/// Base and strong generating set of a permutation group, built by
/// randomized Schreier-Sims and then completed/verified by the deterministic
/// Schreier-generator test. Base points beyond the prefix follow the
/// smallest-moved-point rule, so the chain is reproducible for fixed input.
///
/// Level i stores the basic orbit of base[i] under G^(i) (the pointwise
/// stabilizer of base[0..i-1]) together with explicit transversal elements
/// t_u : base[i] -> u and their inverses.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  const ChainOptions& options = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const std::vector<Point>& base() const noexcept { return base_; }
  const BigInt& order() const noexcept { return order_; }
  /// |G^(level)|; level == depth() gives 1.
  BigInt order_from(std::size_t level) const;

  /// Union of all level generator sets, without repeats.
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  /// Strong generators fixing base[0..level-1] pointwise.
  const std::vector<Permutation>& level_generators(std::size_t level) const {
    return levels_.at(level).gens;
  }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_.at(level).orbit; }
  bool in_orbit(std::size_t level, Point u) const { return levels_.at(level).pos[u] >= 0; }
  const Permutation& transversal(std::size_t level, Point u) const;
  const Permutation& inverse_transversal(std::size_t level, Point u) const;

  struct SiftResult {
    Permutation residue;
    /// Level at which sifting stopped; depth() when every level matched.
    std::size_t level;
    bool member() const { return residue.is_identity(); }
  };
  SiftResult sift(const Permutation& g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  /// Uniformly distributed element (product of random transversal elements).
  Permutation random_element(std::mt19937_64& rng) const;

  /// Calls `visit(element)` for every group element exactly once, stopping
  /// early when it returns false. Returns false iff stopped early.
  template <typename Visitor>
  bool for_each_element(Visitor&& visit) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;  // point -> index in orbit, -1 if absent
    std::vector<Permutation> trans;
    std::vector<Permutation> inv_trans;
  };

  void add_level(Point base_point);
  void add_strong_generator(const Permutation& h, std::size_t level);
  void extend_orbit(std::size_t level, const Permutation& h);
  void randomized_phase(std::span<const Permutation> generators, const ChainOptions& options);
  void complete_deterministically();

  template <typename Visitor>
  bool visit_level(std::size_t level, const Permutation& suffix, Visitor& visit) const;

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  BigInt order_ = 1;
};

template <typename Visitor>
bool StabilizerChain::visit_level(std::size_t level, const Permutation& suffix,
                                  Visitor& visit) const {
  if (level == levels_.size()) return visit(suffix);
  const Level& l = levels_[level];
  for (const Permutation& t : l.trans)
    if (!visit_level(level + 1, t * suffix, visit)) return false;
  return true;
}

template <typename Visitor>
bool StabilizerChain::for_each_element(Visitor&& visit) const {
  // g = t_{k-1} * ... * t_1 * t_0, so the deeper factors multiply on the left.
  return visit_level(0, Permutation::identity(degree_), visit);
}

}  // namespace polycirc
