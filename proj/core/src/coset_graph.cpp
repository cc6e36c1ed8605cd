#include "polycirc/coset_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "polycirc/errors.hpp"

namespace polycirc {

Permutation canonical_coset_rep(const StabilizerChain& h_chain, const Permutation& x) {
  // At each level pick the transversal element minimizing the image of that
  // base point; deeper levels fix the earlier base points.
  Permutation c = x;
  for (std::size_t level = 0; level < h_chain.depth(); ++level) {
    const auto& orb = h_chain.orbit(level);
    Point best = orb.front();
    for (Point u : orb)
      if (c[u] < c[best]) best = u;
    if (best != h_chain.base()[level]) c = h_chain.transversal(level, best) * c;
  }
  return c;
}

namespace {

// Canonical representatives of the cosets making up HgH: the orbit of Hg
// under right multiplication by H.
std::vector<Permutation> double_coset_cosets(const PermGroup& h, const Permutation& g) {
  const StabilizerChain& chain = h.chain();
  std::vector<Permutation> inner{canonical_coset_rep(chain, g)};
  std::unordered_set<Permutation> seen(inner.begin(), inner.end());
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (const auto& s : h.generators()) {
      Permutation c = canonical_coset_rep(chain, inner[i] * s);
      if (seen.insert(c).second) inner.push_back(std::move(c));
    }
  return inner;
}

}  // namespace

std::size_t double_coset_valency(const PermGroup& h, const Permutation& g) {
  return double_coset_cosets(h, g).size();
}

Permutation CosetGraphBundle::canonical(const Permutation& x) const {
  return canonical_coset_rep(subgroup_.chain(), x);
}

Vertex CosetGraphBundle::vertex_of(const Permutation& x) const {
  auto it = index_.find(canonical(x));
  if (it == index_.end()) throw PreconditionError("element is not in the group");
  return it->second;
}

bool CosetGraphBundle::in_double_coset(const Permutation& x) const {
  return std::binary_search(double_coset_reps_.begin(), double_coset_reps_.end(), canonical(x));
}

CosetGraphBundle coset_graph(const PermGroup& g, const PermGroup& h, const Permutation& element,
                             std::uint64_t bound) {
  if (h.degree() != g.degree() || element.degree() != g.degree())
    throw PreconditionError("degree mismatch between group, subgroup and element");
  if (!is_subgroup(h, g)) throw PreconditionError("H is not a subgroup of G");
  if (!g.contains(element)) throw PreconditionError("g is not in G");
  if (!h.contains(element * element)) throw PreconditionError("g^2 is not in H");
  if (normalizes(element, h)) throw PreconditionError("g normalizes H");
  BigInt index = g.order() / h.order();
  if (index > bound)
    throw BoundExceededError("index " + to_string(index) + " exceeds bound " +
                             std::to_string(bound));

  CosetGraphBundle b(g, h, element);

  auto intern = [&b](const Permutation& x) -> std::pair<Vertex, bool> {
    Permutation c = b.canonical(x);
    auto [it, fresh] = b.index_.try_emplace(c, static_cast<Vertex>(b.reps_.size()));
    if (fresh) b.reps_.push_back(std::move(c));
    return {it->second, fresh};
  };

  // Vertices in breadth-first order from H under right multiplication.
  const auto& gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  intern(Permutation::identity(g.degree()));
  for (std::size_t i = 0; i < b.reps_.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Permutation y = b.reps_[i] * gens[j];
      images[j].push_back(intern(y).first);
    }
  std::vector<Permutation> acting;
  for (auto& img : images) acting.push_back(Permutation::unchecked(std::move(img)));
  b.acting_ = PermGroup(b.reps_.size(), std::move(acting));

  std::vector<Permutation> inner = double_coset_cosets(h, element);

  // Hy ~ Hx iff y x^-1 in HgH, i.e. Hy = H c x for one of the reps c.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < b.reps_.size(); ++i)
    for (const auto& c : inner) {
      Vertex j = b.vertex_of(c * b.reps_[i]);
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  b.graph_ = Graph::from_edges(b.reps_.size(), edges);
  std::sort(inner.begin(), inner.end());
  b.double_coset_reps_ = std::move(inner);

  std::vector<Permutation> hg = h.generators();
  hg.push_back(element);
  b.generates_ = PermGroup(g.degree(), std::move(hg)).order() == g.order();
  if (g.order() <= bound) b.normalizer_order_ = normalizer(g, h, bound).order();
  return b;
}

Permutation left_mult_automorphism(const CosetGraphBundle& bundle, const Permutation& x) {
  if (!bundle.group().contains(x)) throw PreconditionError("x is not in G");
  if (!normalizes(x, bundle.subgroup())) throw PreconditionError("x is outside N_G(H)");
  Permutation xi = inverse(x);
  std::vector<Point> img;
  img.reserve(bundle.coset_reps().size());
  for (const auto& y : bundle.coset_reps()) img.push_back(bundle.vertex_of(xi * y));
  return Permutation::unchecked(std::move(img));
}

}  // namespace polycirc
