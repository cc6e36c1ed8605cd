#pragma once

#include <cstddef>
#include <vector>

#include "polycirc/permutation.hpp"

namespace polycirc {

/// A partition of {0, ..., n-1} into nonempty classes. Stored canonically:
/// each class sorted, classes ordered by their least element.
class Partition {
 public:
  Partition() = default;

  /// Throws PreconditionError unless the classes are disjoint, nonempty, and
  /// cover 0..n-1.
  static Partition from_classes(std::size_t n, std::vector<std::vector<Point>> classes);
  /// `labels[i]` is an arbitrary class label of point i.
  static Partition from_labels(const std::vector<std::size_t>& labels);
  static Partition singletons(std::size_t n);

  std::size_t point_count() const noexcept { return class_of_.size(); }
  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t class_of(Point x) const { return class_of_.at(x); }
  const std::vector<Point>& operator[](std::size_t c) const { return classes_.at(c); }
  const std::vector<std::vector<Point>>& classes() const noexcept { return classes_; }

  /// True iff `g` maps every class onto a class.
  bool is_invariant_under(const Permutation& g) const;
  /// The induced permutation of class indices. Requires invariance.
  Permutation induced(const Permutation& g) const;

  bool operator==(const Partition& rhs) const = default;

 private:
  std::vector<std::vector<Point>> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace polycirc
