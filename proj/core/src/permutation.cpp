#include "polycirc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/container_hash/hash.hpp>
#include <boost/integer/common_factor.hpp>

#include "polycirc/errors.hpp"

namespace polycirc {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw PreconditionError("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw PreconditionError("permutation degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point x = images[i];
    if (x >= images.size())
      throw PreconditionError("image " + std::to_string(x) + " of point " +
                              std::to_string(i) + " out of range");
    if (seen[x])
      throw PreconditionError("point " + std::to_string(x) + " is hit twice");
    seen[x] = true;
  }
  return unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const Point x = cycle[j];
      if (x >= degree)
        throw PreconditionError("cycle point " + std::to_string(x) + " out of range");
      if (used[x])
        throw PreconditionError("point " + std::to_string(x) + " appears in two cycles");
      used[x] = true;
      result.images_[x] = cycle[(j + 1) % cycle.size()];
    }
  }
  return result;
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p(1);
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::moved_point_count() const noexcept {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) ++moved;
  return moved;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw PreconditionError("degree mismatch: " + std::to_string(degree()) + " vs " +
                            std::to_string(rhs.degree()));
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return unchecked(std::move(out));
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  *this = *this * rhs;
  return *this;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation inverse(const Permutation& a) {
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out[a[static_cast<Point>(i)]] = static_cast<Point>(i);
  return Permutation::unchecked(std::move(out));
}

Permutation conjugate(const Permutation& b, const Permutation& a) {
  return inverse(a) * b * a;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return inverse(a) * inverse(b) * a * b;
}

namespace {

// Shift every cycle by k mod its length. Works for any exponent, however large.
template <typename Exponent>
Permutation power_by_cycles(const Permutation& a, const Exponent& k) {
  const std::size_t n = a.degree();
  std::vector<Point> out(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    cycle.clear();
    Point x = static_cast<Point>(start);
    do {
      cycle.push_back(x);
      done[x] = true;
      x = a[x];
    } while (x != start);
    const std::int64_t len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = static_cast<std::int64_t>(Exponent(k % len));
    if (shift < 0) shift += len;
    for (std::int64_t j = 0; j < len; ++j)
      out[cycle[static_cast<std::size_t>(j)]] = cycle[static_cast<std::size_t>((j + shift) % len)];
  }
  return Permutation::unchecked(std::move(out));
}

}  // namespace

Permutation power(const Permutation& a, std::int64_t k) { return power_by_cycles(a, k); }

Permutation power(const Permutation& a, const BigInt& k) { return power_by_cycles(a, k); }

BigInt order(const Permutation& a) {
  BigInt result = 1;
  for (const auto& [len, count] : cycle_decomposition(a).length_multiset) {
    (void)count;
    result = boost::integer::lcm(result, BigInt(len));
  }
  return result;
}

CycleDecomposition cycle_decomposition(const Permutation& a) {
  CycleDecomposition d;
  const std::size_t n = a.degree();
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<Point> cycle;
    Point x = static_cast<Point>(start);
    do {
      cycle.push_back(x);
      done[x] = true;
      x = a[x];
    } while (x != start);
    ++d.length_multiset[cycle.size()];
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

bool is_semiregular(const Permutation& a) {
  return cycle_decomposition(a).length_multiset.size() == 1;
}

Permutation from_decomposition(std::size_t degree, const CycleDecomposition& d) {
  return Permutation::from_cycles(degree, d.cycles);
}

std::ostream& operator<<(std::ostream& os, const Permutation& a) {
  bool any = false;
  for (const auto& cycle : cycle_decomposition(a).cycles) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) os << (j ? " " : "") << cycle[j];
    os << ')';
  }
  if (!any) os << "()";
  return os;
}

}  // namespace polycirc

std::size_t std::hash<polycirc::Permutation>::operator()(
    const polycirc::Permutation& a) const noexcept {
  auto images = a.images();
  return boost::hash_range(images.begin(), images.end());
}
