#include "polycirc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "polycirc/errors.hpp"
#include "polycirc/graph_ops.hpp"

namespace polycirc {

namespace {

constexpr std::string_view kMethodTags[] = {"direct-search", "prime-power", "quotient-lift",
                                            "buddy-swap", "exhausted-none"};

}  // namespace

std::string_view to_string(Method m) { return kMethodTags[static_cast<int>(m)]; }

std::optional<Method> method_from_string(std::string_view tag) {
  for (int i = 0; i < 5; ++i)
    if (kMethodTags[i] == tag) return static_cast<Method>(i);
  return std::nullopt;
}

PermGroup local_action(const Graph& g, const PermGroup& group, Vertex v) {
  if (group.degree() != g.order()) throw PreconditionError("group degree differs from vertex count");
  if (v >= g.order()) throw PreconditionError("vertex out of range");
  for (const auto& a : group.generators())
    if (!is_automorphism(g, a)) throw PreconditionError("generator is not an automorphism");
  auto nbrs = g.neighbors(v);
  if (nbrs.empty()) throw PreconditionError("vertex has no neighbours");
  std::vector<Permutation> gens;
  PermGroup stab = point_stabilizer(group, v);
  for (const auto& a : stab.generators()) {
    std::vector<Point> img;
    for (Vertex u : nbrs)
      img.push_back(static_cast<Point>(std::lower_bound(nbrs.begin(), nbrs.end(), a[u]) -
                                       nbrs.begin()));
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  return PermGroup(nbrs.size(), std::move(gens));
}

namespace {

// Cycle lengths of x with multiplicity collapsed.
std::set<std::uint64_t> cycle_lengths(const Permutation& x) {
  std::set<std::uint64_t> out;
  std::vector<char> seen(x.degree(), 0);
  for (Point i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = x[j]) {
      seen[j] = 1;
      ++len;
    }
    out.insert(len);
  }
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t q) {
  unsigned v = 0;
  for (; n % q == 0; n /= q) ++v;
  return v;
}

// Some semiregular power of x of prime order outside `avoid`. x^(m/q) is
// semiregular of order q iff every cycle length of x has the same q-part.
std::optional<Permutation> semiregular_prime_power(const Permutation& x,
                                                   const std::vector<std::uint64_t>& avoid) {
  auto lengths = cycle_lengths(x);
  if (lengths.size() == 1 && *lengths.begin() == 1) return std::nullopt;
  std::set<std::uint64_t> primes;
  for (auto len : lengths)
    for (auto q : prime_divisors(len)) primes.insert(q);
  for (auto q : primes) {
    if (std::find(avoid.begin(), avoid.end(), q) != avoid.end()) continue;
    unsigned v = valuation(*lengths.begin(), q);
    bool uniform = v > 0;
    for (auto len : lengths)
      if (valuation(len, q) != v) uniform = false;
    if (!uniform) continue;
    BigInt m = order(x);
    return power(x, BigInt(m / q));
  }
  return std::nullopt;
}

Certificate make_certificate(const Permutation& x, Method method, const PermGroup& group,
                             const SearchConfig& config, std::vector<std::string> trace) {
  Certificate c;
  c.graph_id = config.graph_id;
  c.element = x;
  c.element_order = order(x);
  c.cycle_length = static_cast<std::uint64_t>(cycle_decomposition(x).cycles.front().size());
  c.method = method;
  c.trace = std::move(trace);
  c.group_order = group.order();
  c.seed = config.seed;
  return c;
}

struct SearchState {
  const Graph& graph;
  const PermGroup& group;
  const SearchConfig& config;
  std::size_t depth;
  std::size_t max_depth;
  // Set once direct search has looked at every element without a hit.
  bool enumerated_without_hit = false;
  std::vector<std::string> trace;
};

Certificate search(SearchState& st);

std::optional<Certificate> direct_search(SearchState& st) {
  const auto& group = st.group;
  const auto& avoid = st.config.avoid_primes;
  std::optional<Permutation> hit;
  if (group.order() <= st.config.bound) {
    std::uint64_t visited = 0;
    group.chain().for_each_element([&](const Permutation& x) {
      ++visited;
      hit = semiregular_prime_power(x, avoid);
      return !hit;
    });
    if (!hit) {
      st.enumerated_without_hit = true;
      st.trace.push_back("direct-search: no hit among all " + std::to_string(visited) +
                         " elements");
      return std::nullopt;
    }
    st.trace.push_back("direct-search: hit after " + std::to_string(visited) +
                       " enumerated elements");
  } else {
    std::mt19937_64 rng(st.config.seed);
    std::size_t i = 0;
    for (; i < st.config.samples && !hit; ++i)
      hit = semiregular_prime_power(group.chain().random_element(rng), avoid);
    if (!hit) {
      st.trace.push_back("direct-search: no hit in " + std::to_string(i) + " random elements");
      return std::nullopt;
    }
    st.trace.push_back("direct-search: hit after " + std::to_string(i) + " random elements");
  }
  return make_certificate(*hit, Method::kDirectSearch, group, st.config, st.trace);
}

std::optional<Certificate> prime_power_route(SearchState& st) {
  std::uint64_t p = prime_power_base(st.graph.order());
  if (p == 0) {
    st.trace.push_back("prime-power: vertex count is not a prime power");
    return std::nullopt;
  }
  const auto& avoid = st.config.avoid_primes;
  if (std::find(avoid.begin(), avoid.end(), p) != avoid.end()) {
    st.trace.push_back("prime-power: prime " + std::to_string(p) + " is excluded");
    return std::nullopt;
  }
  try {
    SylowOptions opts;
    opts.seed = st.config.seed;
    opts.bound = st.config.bound;
    Permutation x = semiregular_of_prime_power_degree(st.group, opts);
    st.trace.push_back("prime-power: central element of a Sylow " + std::to_string(p) +
                       "-subgroup");
    return make_certificate(x, Method::kPrimePower, st.group, st.config, st.trace);
  } catch (const BoundExceededError& e) {
    st.trace.push_back(std::string("prime-power: ") + e.what());
    return std::nullopt;
  }
}

std::optional<Certificate> quotient_lift(SearchState& st) {
  if (st.depth >= st.max_depth) {
    st.trace.push_back("quotient-lift: depth limit reached");
    return std::nullopt;
  }
  if (st.group.order() > st.config.bound) {
    st.trace.push_back("quotient-lift: order " + to_string(st.group.order()) +
                       " exceeds bound for the normal-subgroup scan");
    return std::nullopt;
  }
  for (const auto& n : minimal_normal_subgroups(st.group, st.config.bound)) {
    Partition orbits = orbit_partition(n);
    if (orbits.size() < 3) continue;
    ActionBundle bundle = action_on_partition(st.group, orbits);
    Graph quotient = quotient_graph(st.graph, orbits).graph;

    SearchConfig sub = st.config;
    for (auto q : prime_divisors(bundle.kernel().order(), st.group.degree()))
      if (std::find(sub.avoid_primes.begin(), sub.avoid_primes.end(), q) == sub.avoid_primes.end())
        sub.avoid_primes.push_back(q);
    SearchState inner{quotient, bundle.image_group(), sub, st.depth + 1, st.max_depth, false, {}};
    std::string head = "quotient-lift: N of order " + to_string(n.order()) + " with " +
                       std::to_string(orbits.size()) + " orbits, kernel of order " +
                       to_string(bundle.kernel().order());
    try {
      Certificate found = search(inner);
      auto r = static_cast<std::uint64_t>(found.element_order);
      Permutation lifted = lift_semiregular(bundle, st.group, found.element, r);
      st.trace.push_back(head);
      for (const auto& line : inner.trace) st.trace.push_back("  " + line);
      st.trace.push_back("quotient-lift: lifted element of order " + std::to_string(r));
      return make_certificate(lifted, Method::kQuotientLift, st.group, st.config, st.trace);
    } catch (const InconclusiveError&) {
      st.trace.push_back(head + ": quotient inconclusive");
    }
  }
  st.trace.push_back("quotient-lift: no usable normal subgroup");
  return std::nullopt;
}

bool is_two_group(const PermGroup& g) { return is_power_of(g.order(), 2); }

std::optional<Certificate> buddy_swap(SearchState& st) {
  const auto& avoid = st.config.avoid_primes;
  if (std::find(avoid.begin(), avoid.end(), 2) != avoid.end()) {
    st.trace.push_back("buddy-swap: prime 2 is excluded");
    return std::nullopt;
  }
  // Candidate normal 2-subgroups: normal closures of 2-parts of random
  // elements, kept when they are 2-groups.
  std::vector<PermGroup> candidates;
  std::mt19937_64 rng(st.config.seed ^ 0x5bd1e995ULL);
  for (int i = 0; i < 64; ++i) {
    Permutation x = st.group.chain().random_element(rng);
    BigInt m = order(x);
    BigInt odd = m / p_part(m, 2);
    Permutation y = power(x, odd);
    if (y.is_identity()) continue;
    PermGroup c = normal_closure(st.group, std::span<const Permutation>(&y, 1));
    if (!is_two_group(c)) continue;
    if (std::none_of(candidates.begin(), candidates.end(),
                     [&](const PermGroup& d) { return same_group(c, d); }))
      candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });
  for (const auto& p : candidates) {
    Partition orbits = orbit_partition(p);
    if (orbits.size() < 3) continue;
    try {
      BuddyStructure bs = c4_buddy_structure(st.graph, orbits);
      if (bs.buddies_per_vertex != 1) continue;
      Permutation swap = buddy_swap_automorphism(st.graph, bs);
      if (!st.group.contains(swap)) continue;
      st.trace.push_back("buddy-swap: P of order " + to_string(p.order()) + " with " +
                         std::to_string(orbits.size()) + " orbits has unique buddies");
      return make_certificate(swap, Method::kBuddySwap, st.group, st.config, st.trace);
    } catch (const PreconditionError&) {
    }
  }
  st.trace.push_back("buddy-swap: no normal 2-subgroup with unique buddies");
  return std::nullopt;
}

Certificate search(SearchState& st) {
  for (Method m : st.config.routes) {
    std::optional<Certificate> c;
    switch (m) {
      case Method::kDirectSearch: c = direct_search(st); break;
      case Method::kPrimePower: c = prime_power_route(st); break;
      case Method::kQuotientLift: c = quotient_lift(st); break;
      case Method::kBuddySwap: c = buddy_swap(st); break;
      case Method::kExhaustedNone: break;
    }
    if (c) return *c;
  }
  if (st.config.avoid_primes.empty() && st.group.order() <= st.config.bound) {
    if (!st.enumerated_without_hit) {
      SearchConfig only = st.config;
      only.routes = {Method::kDirectSearch};
      SearchState again{st.graph, st.group, only, st.depth, st.max_depth, false, {}};
      if (auto c = direct_search(again)) {
        c->trace.insert(c->trace.begin(), st.trace.begin(), st.trace.end());
        return *c;
      }
    }
    st.trace.push_back("exhausted-none: no nontrivial semiregular element in the group");
    return make_certificate(Permutation::identity(st.graph.order()), Method::kExhaustedNone,
                            st.group, st.config, st.trace);
  }
  throw InconclusiveError("no route produced a certificate within bounds (group order " +
                          to_string(st.group.order()) + ", bound " +
                          std::to_string(st.config.bound) + ")");
}

}  // namespace

Verdict verify_certificate(const Graph& g, const PermGroup& group, const Certificate& cert,
                           std::uint64_t bound) {
  const Permutation& x = cert.element;
  if (group.degree() != g.order()) return {false, "group degree differs from vertex count"};
  if (x.degree() != g.order()) return {false, "element degree differs from vertex count"};
  if (cert.method == Method::kExhaustedNone) {
    if (!x.is_identity()) return {false, "exhausted-none certificate carries an element"};
    if (group.order() > bound) return {false, "group too large to confirm exhaustion"};
    for (const auto& a : group.generators())
      if (!is_automorphism(g, a)) return {false, "group generator is not an automorphism"};
    bool found = false;
    group.chain().for_each_element([&](const Permutation& y) {
      found = !y.is_identity() && is_semiregular(y);
      return !found;
    });
    if (found) return {false, "group contains a nontrivial semiregular element"};
    return {true, ""};
  }
  // Every failed check is reported, in a fixed order.
  std::vector<std::string> failed;
  if (!is_automorphism(g, x)) failed.push_back("not an automorphism");
  if (x.is_identity()) failed.push_back("trivial element");
  if (!is_semiregular(x)) failed.push_back("not semiregular");
  if (!group.contains(x)) failed.push_back("not in the group");
  BigInt m = order(x);
  if (m != cert.element_order) failed.push_back("element order mismatch");
  if (BigInt(cert.cycle_length) != m) failed.push_back("cycle length mismatch");
  if (failed.empty()) return {true, ""};
  std::string reason = failed.front();
  for (std::size_t i = 1; i < failed.size(); ++i) reason += "; " + failed[i];
  return {false, reason};
}

Certificate find_semiregular(const Graph& g, const PermGroup& group, const SearchConfig& config) {
  if (group.degree() != g.order()) throw PreconditionError("group degree differs from vertex count");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  for (const auto& a : group.generators())
    if (!is_automorphism(g, a)) throw PreconditionError("generator is not an automorphism");
  if (!is_transitive(group)) throw PreconditionError("group is not vertex-transitive");
  if (g.order() < 2) throw PreconditionError("graph has a single vertex");

  auto max_depth = static_cast<std::size_t>(std::log2(static_cast<double>(g.order())));
  SearchState st{g, group, config, 0, max_depth, false, {}};
  Certificate c = search(st);
  if (Verdict v = verify_certificate(g, group, c, config.bound); !v)
    throw std::logic_error("certificate failed verification: " + v.reason);
  return c;
}

BuddyStructure c4_buddy_structure(const Graph& g, const Partition& classes) {
  if (classes.point_count() != g.order()) throw PreconditionError("partition size mismatch");
  const std::size_t n = g.order();
  auto pair_name = [](std::size_t a, std::size_t b) {
    return "classes " + std::to_string(std::min(a, b)) + " and " + std::to_string(std::max(a, b));
  };
  BuddyStructure bs{classes, std::vector<std::map<std::size_t, Vertex>>(n), 0};
  for (Vertex x = 0; x < n; ++x) {
    std::size_t cx = classes.class_of(x);
    std::map<std::size_t, std::vector<Vertex>> by_class;
    for (Vertex y : g.neighbors(x)) {
      std::size_t cy = classes.class_of(y);
      if (cy == cx) throw PreconditionError("edge inside class " + std::to_string(cx));
      by_class[cy].push_back(y);
    }
    for (const auto& [cy, ys] : by_class) {
      if (ys.size() != 2)
        throw PreconditionError(pair_name(cx, cy) + ": vertex " + std::to_string(x) + " has " +
                                std::to_string(ys.size()) +
                                " neighbours in the other class, not 2");
      // The other common neighbour of ys inside x's class closes the 4-cycle.
      std::vector<Vertex> common;
      for (Vertex z : g.neighbors(ys[0]))
        if (classes.class_of(z) == cx && g.adjacent(z, ys[1])) common.push_back(z);
      if (common.size() != 2)
        throw PreconditionError(pair_name(cx, cy) + " do not induce a union of 4-cycles");
      Vertex z = common[0] == x ? common[1] : common[0];
      for (Vertex y : ys) {
        std::size_t in_cx = 0;
        for (Vertex w : g.neighbors(y)) in_cx += classes.class_of(w) == cx;
        if (in_cx != 2)
          throw PreconditionError(pair_name(cx, cy) + " do not induce a union of 4-cycles");
      }
      bs.buddy_map[x][cy] = z;
    }
  }
  std::optional<std::size_t> common;
  bool uniform = true;
  for (Vertex x = 0; x < n; ++x) {
    std::set<Vertex> distinct;
    for (const auto& [c, z] : bs.buddy_map[x]) distinct.insert(z);
    if (!common) common = distinct.size();
    else if (*common != distinct.size()) uniform = false;
  }
  bs.buddies_per_vertex = uniform && common ? *common : 0;
  return bs;
}

Permutation buddy_swap_automorphism(const Graph& g, const BuddyStructure& bs) {
  if (bs.buddies_per_vertex != 1)
    throw PreconditionError("buddy swap needs a unique buddy per vertex, have " +
                            std::to_string(bs.buddies_per_vertex));
  std::vector<Point> img(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    Vertex z = bs.buddy_map.at(x).begin()->second;
    auto nx = g.neighbors(x), nz = g.neighbors(z);
    if (!std::equal(nx.begin(), nx.end(), nz.begin(), nz.end()))
      throw std::logic_error("vertex and buddy have different neighbourhoods");
    img[x] = z;
  }
  Permutation swap = Permutation::from_images(std::move(img));
  if (!(swap * swap).is_identity() || swap.moved_point_count() != g.order() ||
      !is_automorphism(g, swap))
    throw std::logic_error("buddy swap is not a fixed-point-free involutory automorphism");
  return swap;
}

}  // namespace polycirc
