#include "polycirc/group_ops.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "polycirc/errors.hpp"

namespace polycirc {
namespace {

std::vector<Permutation> restrict_to(std::span<const Permutation> gens, std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    auto images = g.images();
    out.push_back(Permutation::unchecked({images.begin(), images.begin() + static_cast<std::ptrdiff_t>(n)}));
  }
  return out;
}

Permutation restrict_range(const Permutation& g, std::size_t offset, std::size_t count) {
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i)
    images[i] = static_cast<Point>(g[static_cast<Point>(offset + i)] - offset);
  return Permutation::unchecked(std::move(images));
}

bool is_p_element(const Permutation& g, std::uint64_t p) {
  return !g.is_identity() && is_power_of(order(g), p);
}

// Element key that is exact and much smaller than the full image vector.
std::vector<Point> base_images(const StabilizerChain& chain, const Permutation& g) {
  std::vector<Point> key;
  key.reserve(chain.base().size());
  for (Point b : chain.base()) key.push_back(g[b]);
  return key;
}

}  // namespace

std::vector<Point> orbit(const PermGroup& g, Point v) {
  if (v >= g.degree()) throw PreconditionError("orbit point " + std::to_string(v) + " out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{v};
  seen[v] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : g.generators()) {
      const Point w = s[out[i]];
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Partition orbit_partition(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<std::size_t> label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (label[v] != n) continue;
    for (Point w : orbit(g, static_cast<Point>(v))) label[w] = v;
  }
  return Partition::from_labels(label);
}

bool is_transitive(const PermGroup& g) { return orbit(g, 0).size() == g.degree(); }

StabilizerChain chain_with_base(const PermGroup& g, std::span<const Point> prefix) {
  ChainOptions options;
  options.base_prefix.assign(prefix.begin(), prefix.end());
  return StabilizerChain(g.degree(), g.generators(), options);
}

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points) {
  if (points.empty()) return g;
  // Repeats are allowed (s-arcs may revisit a vertex); the base may not have them.
  std::vector<Point> distinct;
  for (Point v : points)
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  StabilizerChain chain = chain_with_base(g, distinct);
  if (chain.depth() == distinct.size()) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), chain.level_generators(distinct.size()));
}

PermGroup point_stabilizer(const PermGroup& g, Point v) {
  if (v >= g.degree()) throw PreconditionError("point " + std::to_string(v) + " out of range");
  const Point pts[] = {v};
  return pointwise_stabilizer(g, pts);
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

bool normalizes(const Permutation& x, const PermGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& y) { return h.contains(conjugate(y, x)); });
}

void require_order_within(const PermGroup& g, std::uint64_t bound) {
  if (g.order() > bound)
    throw BoundExceededError("order " + to_string(g.order()) + " exceeds bound " +
                             std::to_string(bound));
}

void for_each_element(const PermGroup& g, std::uint64_t bound,
                      const std::function<bool(const Permutation&)>& visit) {
  require_order_within(g, bound);
  g.chain().for_each_element(visit);
}

std::vector<Permutation> elements(const PermGroup& g, std::uint64_t bound) {
  std::vector<Permutation> out;
  for_each_element(g, bound, [&](const Permutation& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

ActionBundle::ActionBundle(PermGroup source, PermGroup image, PermGroup kernel,
                           Partition classes, std::shared_ptr<const StabilizerChain> combined)
    : source_(std::move(source)),
      image_(std::move(image)),
      kernel_(std::move(kernel)),
      classes_(std::move(classes)),
      combined_(std::move(combined)) {}

Permutation ActionBundle::preimage(const Permutation& image_element) const {
  const std::size_t n = source_.degree();
  const std::size_t k = classes_.size();
  if (image_element.degree() != k)
    throw PreconditionError("image element must act on " + std::to_string(k) + " classes");
  Permutation residue = image_element;
  Permutation acc = Permutation::identity(n + k);
  for (std::size_t j = 0; j < k; ++j) {
    const Point target = static_cast<Point>(n + residue[static_cast<Point>(j)]);
    if (!combined_->in_orbit(j, target))
      throw PreconditionError("element is not in the image group");
    residue = residue * restrict_range(combined_->inverse_transversal(j, target), n, k);
    acc = combined_->transversal(j, target) * acc;
  }
  if (!residue.is_identity()) throw PreconditionError("element is not in the image group");
  return restrict_to(std::span<const Permutation>(&acc, 1), n).front();
}

ActionBundle action_on_partition(const PermGroup& g, const Partition& classes) {
  const std::size_t n = g.degree();
  if (classes.point_count() != n)
    throw PreconditionError("partition covers " + std::to_string(classes.point_count()) +
                            " points, group has degree " + std::to_string(n));
  const std::size_t k = classes.size();
  std::vector<Permutation> image_gens;
  std::vector<Permutation> combined_gens;
  for (const auto& s : g.generators()) {
    if (!classes.is_invariant_under(s)) throw PreconditionError("partition not G-invariant");
    Permutation bar = classes.induced(s);
    std::vector<Point> images(n + k);
    for (std::size_t i = 0; i < n; ++i) images[i] = s[static_cast<Point>(i)];
    for (std::size_t c = 0; c < k; ++c) images[n + c] = static_cast<Point>(n + bar[static_cast<Point>(c)]);
    combined_gens.push_back(Permutation::unchecked(std::move(images)));
    image_gens.push_back(std::move(bar));
  }
  ChainOptions options;
  for (std::size_t c = 0; c < k; ++c) options.base_prefix.push_back(static_cast<Point>(n + c));
  auto combined = std::make_shared<const StabilizerChain>(n + k, combined_gens, options);

  PermGroup kernel = combined->depth() > k
                         ? PermGroup(n, restrict_to(combined->level_generators(k), n))
                         : PermGroup::trivial(n);
  return ActionBundle(g, PermGroup(k, std::move(image_gens)), std::move(kernel), classes,
                      std::move(combined));
}

// ---------------------------------------------------------------------------

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds) {
  const std::size_t n = g.degree();
  std::vector<Permutation> gens;
  for (const auto& x : seeds)
    if (!x.is_identity()) gens.push_back(x);
  if (gens.empty()) return PermGroup::trivial(n);
  auto chain = std::make_unique<StabilizerChain>(n, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(gens[i], s);
      if (chain->contains(c)) continue;
      gens.push_back(std::move(c));
      chain = std::make_unique<StabilizerChain>(n, gens);
    }
  }
  return PermGroup(n, std::move(gens));
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, std::uint64_t bound) {
  require_order_within(g, bound);
  if (g.is_trivial()) return {};
  const StabilizerChain& chain = g.chain();
  const std::uint64_t limit = g.degree();

  // A minimal normal subgroup is the normal closure of any of its elements
  // of prime order, so one representative per conjugacy class of prime-order
  // elements suffices.
  std::set<std::vector<Point>> marked;
  std::vector<Permutation> reps;
  chain.for_each_element([&](const Permutation& x) {
    if (x.is_identity() || marked.count(base_images(chain, x))) return true;
    const BigInt ord = order(x);
    if (ord > limit || !is_prime(ord.convert_to<std::uint64_t>())) return true;
    std::vector<Permutation> cls{x};
    marked.insert(base_images(chain, x));
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto& s : g.generators()) {
        Permutation y = conjugate(cls[i], s);
        if (marked.insert(base_images(chain, y)).second) cls.push_back(std::move(y));
      }
    reps.push_back(x);
    return true;
  });

  std::vector<PermGroup> candidates;
  for (const auto& x : reps) {
    const Permutation seed[] = {x};
    PermGroup nc = normal_closure(g, seed);
    bool duplicate = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const PermGroup& c) { return same_group(c, nc); });
    if (!duplicate) candidates.push_back(std::move(nc));
  }
  std::vector<PermGroup> minimal;
  for (const auto& c : candidates) {
    bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const PermGroup& d) {
      return d.order() < c.order() && is_subgroup(d, c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.generators() < b.generators();
  });
  return minimal;
}

std::string_view to_string(TransitivityClass c) {
  switch (c) {
    case TransitivityClass::kIntransitive: return "intransitive";
    case TransitivityClass::kQuasiprimitive: return "quasiprimitive";
    case TransitivityClass::kBiquasiprimitive: return "biquasiprimitive";
    case TransitivityClass::kNeither: return "neither";
  }
  return "neither";
}

TransitivityClass transitivity_class(const PermGroup& g, std::uint64_t bound) {
  if (!is_transitive(g)) return TransitivityClass::kIntransitive;
  // Every nontrivial normal subgroup contains a minimal one, and orbits only
  // merge when passing to a larger subgroup, so minimal ones decide.
  std::size_t worst = 1;
  for (const auto& m : minimal_normal_subgroups(g, bound))
    worst = std::max(worst, orbit_partition(m).size());
  if (worst == 1) return TransitivityClass::kQuasiprimitive;
  if (worst == 2) return TransitivityClass::kBiquasiprimitive;
  return TransitivityClass::kNeither;
}

// ---------------------------------------------------------------------------

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const SylowOptions& options) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const std::size_t n = g.degree();
  const BigInt target = p_part(g.order(), p);
  if (target == g.order()) return g;
  if (target == 1) return PermGroup::trivial(n);

  std::vector<Permutation> gens;
  std::optional<StabilizerChain> chain;
  BigInt current = 1;
  auto contains = [&](const Permutation& x) { return chain && chain->contains(x); };
  auto try_adjoin = [&](const Permutation& x) {
    gens.push_back(x);
    StabilizerChain grown(n, gens);
    if (is_power_of(grown.order(), p)) {
      current = grown.order();
      chain = std::move(grown);
      return true;
    }
    gens.pop_back();
    return false;
  };

  std::mt19937_64 rng(options.seed);
  unsigned failures = 0;
  while (current < target && failures < options.max_failures) {
    const Permutation y = g.chain().random_element(rng);
    const BigInt m = order(y);
    const Permutation x = power(y, BigInt(m / p_part(m, p)));
    const bool useless = x.is_identity() || contains(x) || !try_adjoin(x);
    failures = useless ? failures + 1 : 0;
  }
  if (current == target) return PermGroup(n, std::move(gens));

  // A p-subgroup P that is not Sylow is properly contained in N_S(P) for a
  // Sylow S, so some p-element outside P normalizes it.
  require_order_within(g, options.bound);
  while (current < target) {
    PermGroup pgroup = gens.empty() ? PermGroup::trivial(n) : PermGroup(n, gens);
    bool grown = false;
    g.chain().for_each_element([&](const Permutation& y) {
      if (!is_p_element(y, p) || contains(y) || !normalizes(y, pgroup)) return true;
      grown = try_adjoin(y);
      return !grown;
    });
    if (!grown) throw std::logic_error("Sylow normalizer walk stalled");
  }
  return PermGroup(n, std::move(gens));
}

Permutation semiregular_of_prime_power_degree(const PermGroup& g, const SylowOptions& options) {
  const std::uint64_t p = prime_power_base(g.degree());
  if (p == 0)
    throw PreconditionError("degree " + std::to_string(g.degree()) + " is not a prime power");
  if (!is_transitive(g)) throw PreconditionError("group is not transitive");

  PermGroup sylow = sylow_subgroup(g, p, options);
  // Iterated commutators with generators descend the lower central series of
  // the nilpotent group, so the last nontrivial one is central.
  Permutation z = sylow.generators().front();
  for (;;) {
    bool central = true;
    for (const auto& s : sylow.generators()) {
      Permutation c = commutator(z, s);
      if (!c.is_identity()) {
        z = std::move(c);
        central = false;
        break;
      }
    }
    if (central) break;
  }
  const BigInt m = order(z);
  Permutation result = power(z, m / p);
  if (result.is_identity() || !is_semiregular(result) || !g.contains(result))
    throw std::logic_error("central element of a transitive Sylow subgroup is not semiregular");
  return result;
}

Permutation lift_semiregular(const ActionBundle& bundle, const PermGroup& source,
                             const Permutation& image_element, std::uint64_t r) {
  if (source.degree() != bundle.source().degree())
    throw PreconditionError("source group does not match the action bundle");
  if (!is_prime(r)) throw PreconditionError(std::to_string(r) + " is not prime");
  if (!bundle.image_group().contains(image_element))
    throw PreconditionError("element is not in the image group");
  if (order(image_element) != r) throw PreconditionError("image element does not have order r");
  if (!is_semiregular(image_element)) throw PreconditionError("image element is not semiregular");
  if (bundle.kernel().order() % r == 0)
    throw PreconditionError("r divides the kernel order " + to_string(bundle.kernel().order()));

  const Permutation g = bundle.preimage(image_element);
  const BigInt m = order(g);
  const BigInt step = m / r;
  for (std::uint64_t t = 1; t < r; ++t) {
    Permutation x = power(g, BigInt(step * t));
    if (order(x) == r && is_semiregular(x)) return x;
  }
  throw std::logic_error("exhausted preimage powers without finding a semiregular element");
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::uint64_t bound) {
  if (!is_subgroup(h, g)) throw PreconditionError("H is not a subgroup of G");
  require_order_within(g, bound);
  std::vector<Permutation> gens = h.generators();
  StabilizerChain chain(g.degree(), gens);
  g.chain().for_each_element([&](const Permutation& x) {
    if (chain.contains(x) || !normalizes(x, h)) return true;
    gens.push_back(x);
    chain = StabilizerChain(g.degree(), gens);
    return true;
  });
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace polycirc
