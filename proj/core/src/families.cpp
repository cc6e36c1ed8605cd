#include "polycirc/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polycirc/bigint.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/graph_ops.hpp"
#include "polycirc/group_ops.hpp"

namespace polycirc {

namespace {

std::uint64_t mod(std::int64_t x, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) { return pow_mod(x, p - 2, p); }

void require_field_prime(std::uint64_t p, std::uint64_t max_p) {
  if (p < 3 || !is_prime(p))
    throw PreconditionError("p = " + std::to_string(p) + " is not an odd prime");
  if (p > max_p)
    throw PreconditionError("p = " + std::to_string(p) + " exceeds the field bound " +
                            std::to_string(max_p));
}

}  // namespace

ProjectiveLinePoint ProjectiveLinePoint::at(Point index, std::uint64_t p) {
  if (index > p) throw PreconditionError("projective point index out of range");
  if (index == p) return {};
  return {index};
}

Permutation projective_action(const Mat2& m, std::uint64_t p) {
  std::uint64_t a = mod(m.a, p), b = mod(m.b, p), c = mod(m.c, p), d = mod(m.d, p);
  if ((a * d + p * p - b * c % p) % p == 0) throw PreconditionError("singular matrix");
  std::vector<Point> img(p + 1);
  auto image = [&](std::uint64_t x, std::uint64_t y) -> Point {
    std::uint64_t u = (x * a + y * c) % p, v = (x * b + y * d) % p;
    if (v == 0) return static_cast<Point>(p);
    return static_cast<Point>(u * inv_mod(v, p) % p);
  };
  for (std::uint64_t t = 0; t < p; ++t) img[t] = image(t, 1);
  img[p] = image(1, 0);
  return Permutation::unchecked(std::move(img));
}

PermGroup psl2_action(std::uint64_t p, std::uint64_t max_p) {
  require_field_prime(p, max_p);
  return PermGroup(p + 1, {projective_action({1, 0, 1, 1}, p), projective_action({0, 1, -1, 0}, p)});
}

PermGroup pgl2_action(std::uint64_t p, std::uint64_t max_p) {
  require_field_prime(p, max_p);
  auto nu = static_cast<std::int64_t>(least_nonresidue(p));
  return PermGroup(p + 1, {projective_action({1, 0, 1, 1}, p), projective_action({0, 1, -1, 0}, p),
                           projective_action({nu, 0, 0, 1}, p)});
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto qs = prime_divisors(p - 1);
  for (std::uint64_t w = 2; w < p; ++w) {
    bool ok = true;
    for (auto q : qs)
      if (pow_mod(w, (p - 1) / q, p) == 1) ok = false;
    if (ok) return w;
  }
  throw PreconditionError(std::to_string(p) + " is not prime");
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  for (std::uint64_t x = 2; x < p; ++x)
    if (pow_mod(x, (p - 1) / 2, p) == p - 1) return x;
  throw PreconditionError("no quadratic non-residue mod " + std::to_string(p));
}

Lemma33Instance lemma33_instance(std::uint64_t p, std::uint64_t s, std::uint64_t max_p) {
  require_field_prime(p, max_p);
  if (s == 0 || ((p - 1) / 2) % s != 0)
    throw PreconditionError("s = " + std::to_string(s) + " does not divide (p-1)/2 = " +
                            std::to_string((p - 1) / 2));
  std::uint64_t lambda = pow_mod(primitive_root(p), (p - 1) / (2 * s), p);
  auto l = static_cast<std::int64_t>(lambda);
  auto li = static_cast<std::int64_t>(inv_mod(lambda, p));
  Permutation h = projective_action({1, 0, 1, 1}, p);
  Permutation g = projective_action({0, 1, -1, 0}, p);
  Permutation d = projective_action({l, 0, 0, li}, p);
  PermGroup group = psl2_action(p, max_p);
  PermGroup sub(p + 1, {h, d});
  return {coset_graph(group, sub, g), h, g, d, p, s};
}

void PXParams::validate() const {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (r < 3) throw PreconditionError("r = " + std::to_string(r) + " is below 3");
  if (s < 1 || s >= r)
    throw PreconditionError("s = " + std::to_string(s) + " is outside 1.." + std::to_string(r - 1));
}

std::size_t PXParams::vertex_count() const {
  std::size_t n = r;
  for (std::uint64_t j = 0; j < s; ++j) n *= p;
  return n;
}

Vertex px_vertex(const PXParams& params, std::uint64_t i, const std::vector<std::uint64_t>& x) {
  std::uint64_t v = i % params.r;
  for (std::uint64_t j = 0; j < params.s; ++j) v = v * params.p + x.at(j) % params.p;
  return static_cast<Vertex>(v);
}

namespace {

// Decoded vertex: position and window coordinates.
struct PXVertex {
  std::uint64_t i;
  std::vector<std::uint64_t> x;
};

PXVertex px_decode(const PXParams& params, Vertex v) {
  PXVertex out{0, std::vector<std::uint64_t>(params.s)};
  std::uint64_t rest = v;
  for (std::uint64_t j = params.s; j-- > 0;) {
    out.x[j] = rest % params.p;
    rest /= params.p;
  }
  out.i = rest;
  return out;
}

template <typename F>
Permutation px_map(const PXParams& params, F&& f) {
  const std::size_t n = params.vertex_count();
  std::vector<Point> img(n);
  for (Vertex v = 0; v < n; ++v) {
    PXVertex w = px_decode(params, v);
    f(w);
    img[v] = px_vertex(params, w.i, w.x);
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace

PraegerXuGraph praeger_xu(const PXParams& params) {
  params.validate();
  const std::size_t n = params.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n * params.p);
  for (Vertex v = 0; v < n; ++v) {
    PXVertex w = px_decode(params, v);
    std::vector<std::uint64_t> next(w.x.begin() + 1, w.x.end());
    next.push_back(0);
    for (std::uint64_t y = 0; y < params.p; ++y) {
      next.back() = y;
      edges.emplace_back(v, px_vertex(params, w.i + 1, next));
    }
  }
  Permutation rotation = px_map(params, [&](PXVertex& w) { w.i = (w.i + 1) % params.r; });
  return {Graph::from_edges(n, edges), std::move(rotation)};
}

std::vector<Permutation> praeger_xu_translations(const PXParams& params) {
  params.validate();
  std::vector<Permutation> out;
  for (std::uint64_t layer = 0; layer < params.r; ++layer)
    out.push_back(px_map(params, [&](PXVertex& w) {
      for (std::uint64_t j = 0; j < params.s; ++j)
        if ((w.i + j) % params.r == layer) w.x[j] = (w.x[j] + 1) % params.p;
    }));
  return out;
}

PermGroup praeger_xu_group(const PXParams& params) {
  params.validate();
  std::vector<Permutation> gens{praeger_xu_translations(params).front(),
                                praeger_xu(params).rotation,
                                px_map(params, [&](PXVertex& w) {
                                  w.i = (params.r - w.i) % params.r;
                                  std::reverse(w.x.begin(), w.x.end());
                                })};
  return PermGroup(params.vertex_count(), std::move(gens));
}

Permutation praeger_xu_diagonal(const PXParams& params) {
  params.validate();
  return px_map(params, [&](PXVertex& w) {
    for (auto& c : w.x) c = (c + 1) % params.p;
  });
}

GraphWithGroup k12_m11() {
  static const GraphWithGroup instance = [] {
    PermGroup m11(12, {Permutation::from_cycles(12, {{0, 10}, {1, 5}, {4, 11}, {7, 8}}),
                       Permutation::from_cycles(12, {{0, 10, 4, 9}, {1, 2}, {3, 7, 11, 6}, {5, 8}})});
    Graph k12 = complete_graph(12);
    if (m11.order() != 7920) throw std::logic_error("embedded M11 generators: wrong order");
    if (!is_transitive(m11)) throw std::logic_error("embedded M11 generators: not transitive");
    if (!is_arc_transitive(k12, m11))
      throw std::logic_error("embedded M11 generators: not arc-transitive on K12");
    return GraphWithGroup{std::move(k12), std::move(m11)};
  }();
  return instance;
}

}  // namespace polycirc
