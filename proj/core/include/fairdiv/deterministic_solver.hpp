#pragma once

#include <functional>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// Some minimally complete maximum-Nash-welfare allocation, found by local
/// search: seed each valued good with its lowest-indexed liker, then while a
/// directed path exists from a poorer agent to one richer by at least 2,
/// pass back along it. Each pass-back drops the sum of squared utilities by
/// at least 2, so the search terminates.
DeterministicAllocation initial_mnw(const Instance& instance);

struct MnwTieOptions {
  /// Tie-breaking priority: a permutation of the agents, highest priority
  /// first. Empty means natural index order 0..n-1.
  std::vector<int> priority;
  /// Called after each improvement iteration with (iteration, allocation);
  /// used by tests to check the per-iteration invariants.
  std::function<void(int, const DeterministicAllocation&)> on_iteration;
};

/// The minimally complete MNW allocation whose utility vector is
/// lexicographically greatest in agent-index order (or in the given
/// priority order). Starting from initial_mnw, one sweep over agents
/// i = 0..n-1 looks for a path from i to some j > i whose bundle is larger
/// by exactly one, and passes back along it.
DeterministicAllocation mnw_tie(const Instance& instance, const MnwTieOptions& options = {});

/// mnw_tie followed by handing every non-valued good to agent 0, so that
/// all goods are always allocated. Still EF1 and Pareto optimal, but
/// deliberately manipulable: the fuzzer uses it as a rule that completes
/// all goods yet forfeits strategyproofness.
DeterministicAllocation mnw_tie_allocate_all(const Instance& instance);

}  // namespace fairdiv
