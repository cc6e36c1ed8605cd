#include "polycirc/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "polycirc/engine.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/graph_ops.hpp"

namespace polycirc {

const CheckRecord& ProofReport::at(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

bool ProofReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return !c.applicable || c.passed; });
}

namespace {

const char* anchor_of(std::string_view name) {
  if (name == "local-action-divisibility")
    return "local action order is divisible by every prime dividing |G_v|";
  if (name == "kernel-2-group")
    return "kernel on N-orbits is a 2-group when Gamma/N has valency p";
  if (name == "counting-bound") return "conjugates of M_v cover M: |M| <= |M_v| * #P-orbits";
  if (name == "arc-stabilizer-bound") return "|M_v0 : M_alpha| <= 2^s along an s-arc alpha";
  if (name == "claim-fixes-class")
    return "pointwise stabilizer in M of two classes fixes a class adjacent to both";
  return "connected arc-transitive graph has no edge inside a P-orbit";
}

CheckRecord record(std::string name) {
  CheckRecord r;
  r.anchor = anchor_of(name);
  r.name = std::move(name);
  return r;
}

CheckRecord inapplicable(std::string name, std::string why) {
  CheckRecord r = record(std::move(name));
  r.detail = std::move(why);
  return r;
}

bool is_two_group(const PermGroup& g) { return is_power_of(g.order(), 2); }

bool centralizes(const PermGroup& a, const PermGroup& b) {
  for (const auto& x : a.generators())
    for (const auto& y : b.generators())
      if (x * y != y * x) return false;
  return true;
}

// Largest number of neighbours a vertex has inside one other class, or
// nullopt if some edge lies inside a class.
std::optional<std::size_t> max_neighbours_per_class(const Graph& g, const Partition& classes) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::map<std::size_t, std::size_t> count;
    for (Vertex u : g.neighbors(v)) {
      if (classes.class_of(u) == classes.class_of(v)) return std::nullopt;
      best = std::max(best, ++count[classes.class_of(u)]);
    }
  }
  return best;
}

CheckRecord check_divisibility(const Graph& g, const PermGroup& group) {
  CheckRecord r = record("local-action-divisibility");
  r.applicable = true;
  BigInt stab = point_stabilizer(group, 0).order();
  BigInt local = local_action(g, group, 0).order();
  r.passed = true;
  for (auto q : prime_divisors(stab, group.degree()))
    if (local % q != 0) r.passed = false;
  r.detail = "|G_v| = " + to_string(stab) + ", |G_v^Gamma(v)| = " + to_string(local);
  return r;
}

}  // namespace

ProofReport proof_invariant_report(const Graph& g, const PermGroup& group,
                                   const ReportConfig& config) {
  if (group.degree() != g.order()) throw PreconditionError("group degree differs from vertex count");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (!is_arc_transitive(g, group)) throw PreconditionError("group is not arc-transitive");

  ProofReport report;
  report.checks.push_back(check_divisibility(g, group));

  const std::size_t k = *g.valency();
  const std::uint64_t p = k / 2;
  const bool twice_prime = k % 2 == 0 && is_prime(p);
  const bool small = group.order() <= config.bound;
  auto skip_all = [&](const std::string& why) {
    for (std::size_t i = 1; i < std::size(kCheckNames); ++i)
      report.checks.push_back(inapplicable(kCheckNames[i], why));
    return report;
  };
  if (!twice_prime) return skip_all("valency " + std::to_string(k) + " is not twice a prime");

  std::vector<PermGroup> minimal;
  if (small) minimal = minimal_normal_subgroups(group, config.bound);
  std::vector<PermGroup> two_normals;
  for (const auto& n : minimal)
    if (is_two_group(n) && orbit_partition(n).size() >= 3) two_normals.push_back(n);

  // Kernel on the orbits of a minimal normal 2-subgroup N with quotient
  // valency d = p and q = 2 neighbours per adjacent orbit.
  {
    CheckRecord r = record("kernel-2-group");
    if (p == 2) {
      r.detail = "p = 2: the cases d = p and d = 2 coincide";
    } else if (!small) {
      r.detail = "order " + to_string(group.order()) + " exceeds bound";
    } else {
      for (const auto& n : two_normals) {
        Partition orbits = orbit_partition(n);
        auto d = quotient_graph(g, orbits).graph.valency();
        auto q = max_neighbours_per_class(g, orbits);
        if (!d || *d != p || !q || *q != 2) continue;
        ActionBundle bundle = action_on_partition(group, orbits);
        BigInt kv = point_stabilizer(bundle.kernel(), 0).order();
        r.applicable = true;
        r.passed = is_power_of(kv, 2) && is_two_group(bundle.kernel());
        r.detail = "|N| = " + to_string(n.order()) + ", d = " + std::to_string(*d) +
                   ", q = 2, |K| = " + to_string(bundle.kernel().order()) +
                   ", |K_v| = " + to_string(kv);
        break;
      }
      if (!r.applicable) r.detail = "no minimal normal 2-subgroup with d = p and q = 2";
    }
    report.checks.push_back(std::move(r));
  }

  std::optional<PermGroup> m = config.m;
  std::optional<PermGroup> pgrp = config.p ? config.p : config.m;
  if (!pgrp && !two_normals.empty()) pgrp = two_normals.front();
  if (!m && pgrp) {
    for (const auto& n : two_normals)
      if (is_subgroup(n, *pgrp) && centralizes(n, *pgrp) && !point_stabilizer(n, 0).is_trivial()) {
        m = n;
        break;
      }
  }
  std::optional<Partition> classes;
  if (pgrp) classes = orbit_partition(*pgrp);

  // Counting bound.
  {
    CheckRecord r = record("counting-bound");
    if (!m || !pgrp) {
      r.detail = "no candidate M and P";
    } else if (!small) {
      r.detail = "order " + to_string(group.order()) + " exceeds bound";
    } else if (std::none_of(minimal.begin(), minimal.end(),
                            [&](const PermGroup& n) { return same_group(n, *m); })) {
      r.detail = "M is not a minimal normal subgroup";
    } else if (!is_subgroup(*m, *pgrp) || !centralizes(*m, *pgrp)) {
      r.detail = "M is not central in P";
    } else {
      bool semiregular = false;
      for_each_element(*m, config.bound, [&](const Permutation& x) {
        semiregular = !x.is_identity() && is_semiregular(x);
        return !semiregular;
      });
      BigInt mv = point_stabilizer(*m, 0).order();
      if (semiregular) {
        r.detail = "M contains a nontrivial semiregular element";
      } else if (mv == 1) {
        r.detail = "M is semiregular";
      } else {
        r.applicable = true;
        BigInt rhs = mv * classes->size();
        r.passed = m->order() <= rhs;
        r.detail = "|M| = " + to_string(m->order()) + ", |M_v| = " + to_string(mv) +
                   ", P-orbits = " + std::to_string(classes->size());
      }
    }
    report.checks.push_back(std::move(r));
  }

  // Arc-stabilizer bound over sampled s-arcs.
  {
    CheckRecord r = record("arc-stabilizer-bound");
    std::optional<std::size_t> per_class;
    if (classes) per_class = max_neighbours_per_class(g, *classes);
    if (!m || !classes) {
      r.detail = "no candidate M";
    } else if (point_stabilizer(*m, 0).is_trivial()) {
      r.detail = "M_v is trivial";
    } else if (!per_class || *per_class > 2) {
      r.detail = "P-orbits carry internal edges or more than 2 neighbours per orbit";
    } else {
      r.applicable = true;
      r.passed = true;
      std::size_t checked = 0, violations = 0;
      for (std::size_t s = 1; s <= config.max_s; ++s) {
        for (const SArc& arc : s_arcs(g, s, config.arc_samples, config.seed + s)) {
          std::vector<Point> pts;
          for (Vertex v : arc)
            if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
          StabilizerChain chain = chain_with_base(*m, pts);
          BigInt mv0 = chain.order_from(1);
          BigInt malpha = chain.order_from(pts.size());
          ++checked;
          if (mv0 > malpha * (BigInt(1) << s)) ++violations;
        }
      }
      r.passed = violations == 0;
      r.detail = std::to_string(checked) + " s-arcs (s <= " + std::to_string(config.max_s) +
                 "), " + std::to_string(violations) + " violations";
    }
    report.checks.push_back(std::move(r));
  }

  // The claim about pointwise stabilizers of two classes.
  {
    CheckRecord r = record("claim-fixes-class");
    std::optional<BuddyStructure> bs;
    if (m && classes) {
      try {
        bs = c4_buddy_structure(g, *classes);
      } catch (const PreconditionError& e) {
        r.detail = e.what();
      }
    } else {
      r.detail = "no candidate M and P";
    }
    if (bs && bs->buddies_per_vertex <= 1) {
      r.detail = "buddies are not distinct (" + std::to_string(bs->buddies_per_vertex) +
                 " per vertex)";
    } else if (bs) {
      constexpr std::size_t kMaxTriples = 200;
      std::size_t checked = 0;
      bool ok = true;
      for (std::size_t c = 0; c < classes->size() && checked < kMaxTriples; ++c) {
        Vertex c0 = (*classes)[c].front();
        const auto& buddies = bs->buddy_map[c0];
        for (auto ia = buddies.begin(); ia != buddies.end() && checked < kMaxTriples; ++ia)
          for (auto ib = std::next(ia); ib != buddies.end() && checked < kMaxTriples; ++ib) {
            if (ia->second == ib->second) continue;
            std::vector<Point> fixed((*classes)[ia->first]);
            const auto& other = (*classes)[ib->first];
            fixed.insert(fixed.end(), other.begin(), other.end());
            PermGroup x = pointwise_stabilizer(*m, fixed);
            for (const auto& gen : x.generators())
              for (Vertex v : (*classes)[c])
                if (gen[v] != v) ok = false;
            ++checked;
          }
      }
      r.applicable = checked > 0;
      r.passed = r.applicable && ok;
      r.detail = std::to_string(checked) + " class triples with distinct buddies";
    }
    report.checks.push_back(std::move(r));
  }

  {
    CheckRecord r = record("no-intra-class-edges");
    if (!classes) {
      r.detail = "no candidate P";
    } else {
      r.applicable = true;
      std::size_t intra = quotient_graph(g, *classes).intra_class_edges;
      r.passed = intra == 0;
      r.detail = std::to_string(intra) + " edges inside " + std::to_string(classes->size()) +
                 " P-orbits";
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace polycirc
