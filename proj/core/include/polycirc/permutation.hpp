#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "polycirc/bigint.hpp"

namespace polycirc {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Products follow the right-action
/// convention: `a * b` applies `a` first, then `b`.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Throws PreconditionError unless `images` is a bijection on 0..n-1.
  static Permutation from_images(std::vector<Point> images);

  /// Builds from disjoint cycles (0-based). Points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// No validation. Callers must guarantee `images` is a bijection.
  static Permutation unchecked(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  std::size_t moved_point_count() const noexcept;
  /// Smallest point with i^a != i, or degree() for the identity.
  Point first_moved_point() const noexcept;

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);

  bool operator==(const Permutation& rhs) const = default;
  auto operator<=>(const Permutation& rhs) const = default;

 private:
  std::vector<Point> images_;
};

/// i -> b[a[i]]. Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
/// a^-1 * b * a.
Permutation conjugate(const Permutation& b, const Permutation& a);
/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

Permutation power(const Permutation& a, std::int64_t k);
Permutation power(const Permutation& a, const BigInt& k);
BigInt order(const Permutation& a);

struct CycleDecomposition {
  /// Every point appears in exactly one cycle, fixed points as 1-cycles.
  /// Each cycle starts at its least point; cycles are sorted by that point.
  std::vector<std::vector<Point>> cycles;
  /// cycle length -> multiplicity
  std::map<std::size_t, std::size_t> length_multiset;
};

CycleDecomposition cycle_decomposition(const Permutation& a);

/// All cycles have the same length. The identity counts as semiregular;
/// callers that need a nontrivial element check that separately.
bool is_semiregular(const Permutation& a);

/// Rebuilds the permutation from a decomposition (inverse of
/// cycle_decomposition).
Permutation from_decomposition(std::size_t degree, const CycleDecomposition& d);

/// Debug rendering in 0-based cycle notation.
std::ostream& operator<<(std::ostream& os, const Permutation& a);

}  // namespace polycirc

template <>
struct std::hash<polycirc::Permutation> {
  std::size_t operator()(const polycirc::Permutation& a) const noexcept;
};
