#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "polycirc/bigint.hpp"
#include "polycirc/graph.hpp"
#include "polycirc/group_ops.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/permutation.hpp"

namespace polycirc {

/// The element of the right coset Hx whose images of the base points of
/// `h_chain` are lexicographically least. Two elements share a right coset
/// of H iff they have the same canonical representative.
Permutation canonical_coset_rep(const StabilizerChain& h_chain, const Permutation& x);

/// |HgH| / |H|, the valency Cos(G, H, HgH) would have.
std::size_t double_coset_valency(const PermGroup& h, const Permutation& g);

/// Cos(G, H, HgH): the right cosets of H in G, with Hx ~ Hy iff
/// x y^-1 lies in HgH. G acts on the cosets by right multiplication.
class CosetGraphBundle {
 public:
  const Graph& graph() const noexcept { return graph_; }
  /// Right-multiplication images of the generators of G, on coset indices.
  const PermGroup& acting_group() const noexcept { return acting_; }
  /// Canonical representative of each vertex; vertex 0 is H itself.
  const std::vector<Permutation>& coset_reps() const noexcept { return reps_; }
  const BigInt& subgroup_order() const { return subgroup_.order(); }
  /// |N_G(H)| when |G| was within the bound used at construction.
  const std::optional<BigInt>& normalizer_order() const noexcept { return normalizer_order_; }
  /// Whether <H, g> = G, i.e. whether the graph is connected.
  bool generates() const noexcept { return generates_; }

  const PermGroup& group() const noexcept { return group_; }
  const PermGroup& subgroup() const noexcept { return subgroup_; }
  const Permutation& element() const noexcept { return element_; }

  /// The unique element of Hx chosen as representative.
  Permutation canonical(const Permutation& x) const;
  /// Index of the vertex Hx.
  Vertex vertex_of(const Permutation& x) const;
  /// x in HgH.
  bool in_double_coset(const Permutation& x) const;

 private:
  friend CosetGraphBundle coset_graph(const PermGroup&, const PermGroup&, const Permutation&,
                                      std::uint64_t);
  CosetGraphBundle(PermGroup g, PermGroup h, Permutation element)
      : group_(std::move(g)), subgroup_(std::move(h)), element_(std::move(element)),
        acting_(PermGroup::trivial(1)) {}

  PermGroup group_;
  PermGroup subgroup_;
  Permutation element_;
  Graph graph_;
  PermGroup acting_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, Vertex> index_;
  // Canonical representatives of the cosets inside HgH.
  std::vector<Permutation> double_coset_reps_;
  std::optional<BigInt> normalizer_order_;
  bool generates_ = false;
};

/// Throws PreconditionError when H is not a subgroup of G, g is not in G,
/// g^2 is not in H, or g normalizes H; BoundExceededError when |G:H| exceeds
/// `bound`. N_G(H) is computed only when |G| <= bound.
CosetGraphBundle coset_graph(const PermGroup& g, const PermGroup& h, const Permutation& element,
                             std::uint64_t bound = kDefaultBound);

/// Hy -> H x^-1 y for x in N_G(H). This commutes with the acting group and
/// is trivial iff x is in H. Throws PreconditionError when x is outside
/// N_G(H).
Permutation left_mult_automorphism(const CosetGraphBundle& bundle, const Permutation& x);

}  // namespace polycirc
