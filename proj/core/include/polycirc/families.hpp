#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polycirc/coset_graph.hpp"
#include "polycirc/graph.hpp"
#include "polycirc/perm_group.hpp"
#include "polycirc/permutation.hpp"

namespace polycirc {

/// Largest field order accepted by the PSL/PGL constructors by default.
inline constexpr std::uint64_t kMaxFieldPrime = 61;

/// A 2x2 matrix over Z/p acting on row vectors: (x, y) -> (x, y) M.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
};

/// A point of the projective line over Z/p: a residue t standing for
/// <(t, 1)>, or infinity standing for <(1, 0)>.
struct ProjectiveLinePoint {
  std::optional<std::uint32_t> residue;

  bool is_infinity() const noexcept { return !residue; }
  /// t -> t, infinity -> p.
  Point index(std::uint64_t p) const { return residue ? *residue : static_cast<Point>(p); }
  static ProjectiveLinePoint at(Point index, std::uint64_t p);
};

/// The Moebius permutation of the p + 1 projective points induced by m.
/// Throws PreconditionError if m is singular mod p.
Permutation projective_action(const Mat2& m, std::uint64_t p);

/// Generated by the images of (1 0; 1 1) and (0 1; -1 0).
PermGroup psl2_action(std::uint64_t p, std::uint64_t max_p = kMaxFieldPrime);
/// PSL generators plus diag(nu, 1), nu the least quadratic non-residue.
PermGroup pgl2_action(std::uint64_t p, std::uint64_t max_p = kMaxFieldPrime);

std::uint64_t primitive_root(std::uint64_t p);
std::uint64_t least_nonresidue(std::uint64_t p);

struct Lemma33Instance {
  CosetGraphBundle bundle;
  /// Images of (1 0; 1 1), (0 1; -1 0) and diag(l, l^-1), l of order 2s.
  Permutation h, g, d;
  std::uint64_t p = 0, s = 0;
};

/// Cos(PSL(2,p), H, HgH) with H = <h, d> of order p*s stabilizing infinity.
/// Needs p an odd prime <= max_p and s | (p-1)/2.
Lemma33Instance lemma33_instance(std::uint64_t p, std::uint64_t s,
                                 std::uint64_t max_p = kMaxFieldPrime);

struct PXParams {
  std::uint64_t p = 2, r = 3, s = 1;

  /// Throws PreconditionError unless p is prime, r >= 3 and 1 <= s <= r-1.
  void validate() const;
  std::size_t vertex_count() const;
};

/// Index of (i, x_1..x_s): i * p^s + sum_j x_j p^(s-j).
Vertex px_vertex(const PXParams& params, std::uint64_t i, const std::vector<std::uint64_t>& x);

struct PraegerXuGraph {
  Graph graph;
  /// (i, x) -> (i + 1, x).
  Permutation rotation;
};

/// C(p, r, s): vertices Z_r x (Z_p)^s, (i, x_1..x_s) ~ (i+1, x_2..x_s, y)
/// for every y. Coordinate j of a vertex in position i lives on layer
/// i + j - 1 (mod r).
PraegerXuGraph praeger_xu(const PXParams& params);

/// t_l adds 1 to the coordinate on layer l, wherever the vertex covers it.
std::vector<Permutation> praeger_xu_translations(const PXParams& params);

/// (Z_p)^r x| D_r of order p^r * 2r, generated by t_0, the rotation and the
/// reflection (i, x_1..x_s) -> (-i, x_s..x_1).
PermGroup praeger_xu_group(const PXParams& params);

/// Product of all translations; it generates a normal subgroup of
/// praeger_xu_group whose quotient graph is C(p, r, s-1).
Permutation praeger_xu_diagonal(const PXParams& params);

struct GraphWithGroup {
  Graph graph;
  PermGroup group;
};

/// K_12 with M_11 in its 3-transitive degree-12 action. The embedded
/// generators are validated on first use (order 7920, transitive, arc-
/// transitive); failure throws std::logic_error.
GraphWithGroup k12_m11();

}  // namespace polycirc
