#include "polycirc/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "polycirc/errors.hpp"

namespace polycirc {

Partition Partition::from_classes(std::size_t n, std::vector<std::vector<Point>> classes) {
  std::vector<std::size_t> labels(n, n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw PreconditionError("partition has an empty class");
    for (Point x : classes[c]) {
      if (x >= n) throw PreconditionError("partition point " + std::to_string(x) + " out of range");
      if (labels[x] != n)
        throw PreconditionError("point " + std::to_string(x) + " lies in two classes");
      labels[x] = c;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (labels[x] == n)
      throw PreconditionError("point " + std::to_string(x) + " is not covered by the partition");
  return from_labels(labels);
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  Partition p;
  p.class_of_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = renumber.try_emplace(labels[x], p.classes_.size());
    if (inserted) p.classes_.emplace_back();
    p.classes_[it->second].push_back(static_cast<Point>(x));
    p.class_of_[x] = it->second;
  }
  // Points are visited in increasing order, so classes are already sorted
  // and ordered by least element.
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return from_labels(labels);
}

bool Partition::is_invariant_under(const Permutation& g) const {
  if (g.degree() != point_count()) return false;
  for (const auto& cls : classes_) {
    const std::size_t target = class_of_[g[cls.front()]];
    for (Point x : cls)
      if (class_of_[g[x]] != target) return false;
  }
  return true;
}

Permutation Partition::induced(const Permutation& g) const {
  if (!is_invariant_under(g)) throw PreconditionError("partition is not invariant under the permutation");
  std::vector<Point> images(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    images[c] = static_cast<Point>(class_of_[g[classes_[c].front()]]);
  return Permutation::from_images(std::move(images));
}

}  // namespace polycirc
