#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "polycirc/bigint.hpp"
#include "polycirc/partition.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/permutation.hpp"
#include "polycirc/stabilizer_chain.hpp"

namespace polycirc {

/// Element bound shared by every operation that enumerates a group.
inline constexpr std::uint64_t kDefaultBound = 100000;

std::vector<Point> orbit(const PermGroup& g, Point v);
Partition orbit_partition(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// Chain of `g` whose base starts with `prefix`.
StabilizerChain chain_with_base(const PermGroup& g, std::span<const Point> prefix);
/// The subgroup fixing every point of `points`. Repeated points are allowed.
PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points);
PermGroup point_stabilizer(const PermGroup& g, Point v);

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool same_group(const PermGroup& a, const PermGroup& b);
/// x^-1 H x == H.
bool normalizes(const Permutation& x, const PermGroup& h);

/// Throws BoundExceededError ("order N exceeds bound B") when |g| > bound.
void require_order_within(const PermGroup& g, std::uint64_t bound);

/// Visits each element exactly once via transversal products; `visit`
/// returns false to stop. Fails up front if |g| > bound.
void for_each_element(const PermGroup& g, std::uint64_t bound,
                      const std::function<bool(const Permutation&)>& visit);
std::vector<Permutation> elements(const PermGroup& g, std::uint64_t bound);

/// The action of a group on the classes of an invariant partition.
class ActionBundle {
 public:
  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& image_group() const noexcept { return image_; }
  /// Elements of the source fixing every class setwise.
  const PermGroup& kernel() const noexcept { return kernel_; }
  const Partition& classes() const noexcept { return classes_; }

  Permutation image_of(const Permutation& source_element) const {
    return classes_.induced(source_element);
  }
  /// Some source element acting as `image_element` on the classes. Throws
  /// PreconditionError if `image_element` is not in the image group.
  Permutation preimage(const Permutation& image_element) const;

 private:
  friend ActionBundle action_on_partition(const PermGroup& g, const Partition& classes);
  ActionBundle(PermGroup source, PermGroup image, PermGroup kernel, Partition classes,
               std::shared_ptr<const StabilizerChain> combined);

  PermGroup source_;
  PermGroup image_;
  PermGroup kernel_;
  Partition classes_;
  // Chain of the group acting on points + class indices (degree n + k) whose
  // base starts with all k class points: its top k levels describe the
  // image, the remaining levels the kernel.
  std::shared_ptr<const StabilizerChain> combined_;
};

/// Throws PreconditionError if some generator does not permute the classes.
ActionBundle action_on_partition(const PermGroup& g, const Partition& classes);

/// Smallest normal subgroup of g containing `seeds`.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds);

/// All minimal normal subgroups, ordered by order and then generators.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                std::uint64_t bound = kDefaultBound);

enum class TransitivityClass { kIntransitive, kQuasiprimitive, kBiquasiprimitive, kNeither };
std::string_view to_string(TransitivityClass c);

TransitivityClass transitivity_class(const PermGroup& g, std::uint64_t bound = kDefaultBound);

struct SylowOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t bound = kDefaultBound;
  /// Consecutive useless random p-elements tolerated before falling back to
  /// enumeration.
  unsigned max_failures = 200;
};

/// A Sylow p-subgroup: grown from p-parts of random elements, with a
/// deterministic normalizer walk over all elements as fallback when
/// |g| <= options.bound.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const SylowOptions& options = {});

/// For g transitive of degree p^k: a nontrivial central element of a Sylow
/// p-subgroup, powered down to order p. Such an element is semiregular.
Permutation semiregular_of_prime_power_degree(const PermGroup& g,
                                              const SylowOptions& options = {});

/// Lifts a semiregular element of prime order r of bundle.image_group() to a
/// semiregular element of order r of `source`, provided r does not divide
/// the kernel order.
Permutation lift_semiregular(const ActionBundle& bundle, const PermGroup& source,
                             const Permutation& image_element, std::uint64_t r);

/// N_G(H) by scanning all elements of G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     std::uint64_t bound = kDefaultBound);

}  // namespace polycirc
