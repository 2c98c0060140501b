#ifndef NETCOVER_POLICIES_HPP
#define NETCOVER_POLICIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "netcover/cover.hpp"
#include "netcover/graph.hpp"
#include "netcover/rng.hpp"

namespace netcover {

enum class PolicyKind {
  Bfs,
  Dfs,
  Rw,
  Rwnr,
  Si,
  Mod,
  Meed,
  OracleExcess,
  MaxDegFrontier,
  UniformReplace,
  UniformNoReplace,
};

struct Policy {
  PolicyKind kind = PolicyKind::Bfs;
  // MEED side information; required for Meed, ignored otherwise.
  const DegreeDistribution* side_info = nullptr;
};

// Names accepted on the CLI: bfs dfs rw rwnr si mod meed oracle maxdeg
// uniform uniform-nr.
std::optional<PolicyKind> policy_from_name(std::string_view name);
std::string policy_name(PolicyKind kind);

bool is_link_tracing(PolicyKind kind);
bool is_with_replacement(PolicyKind kind);  // Rw and UniformReplace

// Runs one seeded simulation: initial node uniform from V, then the policy's
// step until `budget` payments or exhaustion. MEED derives its side info from
// the graph when policy.side_info is null. Deterministic given (policy, seed).
Trace run_policy(const Graph& g, const Policy& policy, int budget, std::uint64_t seed);

}  // namespace netcover

#endif
