#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// Brute-force ground truth for tiny instances. Everything here is
/// independent of the solver code paths it is used to check: sets come from
/// full enumeration and the fractional utilities from direct subset
/// enumeration rather than flows.

constexpr long long kDefaultEnumerationBound = 10'000'000;

/// Calls `visit` with every allocation (each good to one agent or left
/// unassigned), in a fixed odometer order. Throws std::invalid_argument when
/// (n+1)^m exceeds the bound.
void for_each_allocation(const Instance& instance,
                         const std::function<void(const DeterministicAllocation&)>& visit,
                         long long bound = kDefaultEnumerationBound);

std::vector<DeterministicAllocation> enumerate_allocations(
    const Instance& instance, long long bound = kDefaultEnumerationBound);

/// All allocations maximizing the number of positive utilities and, subject
/// to that, the product of positive utilities. On instances with no valued
/// good the definition degenerates (every allocation ties); the set is then
/// canonicalized to the empty allocation, matching the solver contract.
std::vector<DeterministicAllocation> brute_mnw_set(
    const Instance& instance, long long bound = kDefaultEnumerationBound);

/// All allocations whose sorted utility profile is leximin-maximal, with the
/// same degenerate-instance canonicalization as brute_mnw_set.
std::vector<DeterministicAllocation> brute_leximin_set(
    const Instance& instance, long long bound = kDefaultEnumerationBound);

/// The fractional leximin utility vector by direct tight-set enumeration:
/// repeatedly scan all non-empty subsets S of active agents for the minimum
/// of |Γ(S)|/|S|, freeze the union of all minimizers there, and recurse.
/// 2^n per round; refuse above `max_agents`.
UtilityVector oracle_fractional_leximin(const Instance& instance, int max_agents = 24);

/// A rule maps a reported instance to a share matrix (0/1 for deterministic
/// rules). Gains are always measured in expected utility under the agents'
/// true valuations.
using AllocationRule = std::function<FractionalAllocation(const Instance&)>;

AllocationRule make_mnw_tie_rule();
AllocationRule make_fractional_mnw_rule();
/// The all-goods variant used as a negative control: completes non-valued
/// goods and is manipulable.
AllocationRule make_mnw_tie_allocate_all_rule();

struct FuzzMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  long long iterations = 0;  // random mode
  std::uint64_t seed = 0;    // random mode

  static FuzzMode exhaustive() { return {}; }
  static FuzzMode random(long long iterations, std::uint64_t seed) {
    return {Kind::Random, iterations, seed};
  }
};

struct FuzzWitness {
  Instance truthful;
  Instance reported;
  std::vector<int> coalition;
  UtilityVector honest_utilities;    // true utilities under the honest outcome
  UtilityVector deviated_utilities;  // true utilities under the misreport outcome
};

struct FuzzReport {
  long long profiles_checked = 0;
  long long deviations_checked = 0;
  std::optional<FuzzWitness> witness;

  bool clean() const { return !witness.has_value(); }
};

/// Searches for a coalition (of size at most coalition_max) and a joint
/// misreport under which every member strictly gains. Exhaustive mode covers
/// all profiles and misreports for the given n and m and refuses when the
/// search space exceeds `budget`; random mode draws seeded profiles with
/// sizes up to n and m.
FuzzReport fuzz_strategyproofness(const AllocationRule& rule, int num_agents, int num_goods,
                                  const FuzzMode& mode, int coalition_max,
                                  long long budget = 200'000'000);

}  // namespace fairdiv
