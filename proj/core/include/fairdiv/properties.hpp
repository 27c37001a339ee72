#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// An ordered pair (agent, other) violating an envy-style property:
/// `agent` envies `other` beyond what the property allows.
struct EnvyWitness {
  int agent;
  int other;
};

/// Why an allocation fails the maximum-Nash-welfare certificate: either a
/// Pareto violation (a valued good unassigned or held by a non-liker) or a
/// directed path from a poor agent to one richer by at least 2.
struct MnwWitness {
  std::optional<int> pareto_violation_good;
  std::optional<std::vector<int>> improving_path;
};

struct TieInvariantReport {
  bool ok = true;
  std::vector<std::string> violations;
};

std::optional<EnvyWitness> find_envy(const Instance& instance,
                                     const DeterministicAllocation& alloc);
bool is_envy_free(const Instance& instance, const DeterministicAllocation& alloc);

/// Envy-freeness up to one good. Under binary valuations this is
/// v_i(A_i) >= v_i(A_j) - 1 for every j with a non-empty bundle.
std::optional<EnvyWitness> find_ef1_violation(const Instance& instance,
                                              const DeterministicAllocation& alloc);
bool is_ef1(const Instance& instance, const DeterministicAllocation& alloc);

/// Envy-freeness up to any positively valued good, checked by literally
/// removing each liked good. Agrees with EF1 on every binary instance; the
/// test suite asserts the equivalence rather than assuming it.
std::optional<EnvyWitness> find_efx_violation(const Instance& instance,
                                              const DeterministicAllocation& alloc);
bool is_efx(const Instance& instance, const DeterministicAllocation& alloc);

/// Pareto optimality via the binary-valuations characterization: every
/// valued good is assigned to an agent who likes it. The witness is an
/// offending good.
std::optional<int> find_pareto_violation(const Instance& instance,
                                         const DeterministicAllocation& alloc);
bool is_pareto_optimal(const Instance& instance, const DeterministicAllocation& alloc);

/// Exactly the valued goods are assigned.
bool is_minimally_complete(const Instance& instance, const DeterministicAllocation& alloc);

/// Maximum-Nash-welfare certificate: Pareto optimal and no directed path
/// from i to j in G(alloc) with u_j > u_i + 1.
std::optional<MnwWitness> find_mnw_violation(const Instance& instance,
                                             const DeterministicAllocation& alloc);
bool is_mnw(const Instance& instance, const DeterministicAllocation& alloc);

/// Structural invariants of the lexicographic tie-broken MNW output: for
/// every agent i, the agents reachable from {j : u_j < u_i} ∪ {i}
/// collectively hold all goods they like, none of them beats u_i + 1, and
/// those with index >= i do not beat u_i. Also requires minimal
/// completeness and the MNW certificate.
TieInvariantReport check_mnw_tie_invariants(const Instance& instance,
                                            const DeterministicAllocation& alloc);

}  // namespace fairdiv
