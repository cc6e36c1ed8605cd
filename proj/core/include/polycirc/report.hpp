#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycirc/graph.hpp"
#include "polycirc/group_ops.hpp"
#include "polycirc/perm_group.hpp"

namespace polycirc {

struct CheckRecord {
  std::string name;
  /// The claim of the argument this check instruments.
  std::string anchor;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

struct ProofReport {
  std::vector<CheckRecord> checks;

  const CheckRecord& at(const std::string& name) const;
  /// Every applicable check passed.
  bool all_passed() const;
};

struct ReportConfig {
  std::uint64_t bound = kDefaultBound;
  std::uint64_t seed = kDefaultSeed;
  std::size_t arc_samples = 100;
  std::size_t max_s = 4;
  /// Candidate for the central minimal normal 2-subgroup. Searched for when
  /// absent.
  std::optional<PermGroup> m;
  /// The normal 2-subgroup whose orbits form the classes. Defaults to m.
  std::optional<PermGroup> p;
};

/// Check names, in report order.
inline constexpr const char* kCheckNames[] = {
    "local-action-divisibility", "kernel-2-group",     "counting-bound",
    "arc-stabilizer-bound",      "claim-fixes-class",  "no-intra-class-edges"};

/// Runs every check whose hypotheses can be established within the bound and
/// marks the others inapplicable, saying which hypothesis was missing.
/// Requires g connected and `group` arc-transitive on it.
ProofReport proof_invariant_report(const Graph& g, const PermGroup& group,
                                   const ReportConfig& config = {});

}  // namespace polycirc
