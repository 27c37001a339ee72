#pragma once

#include <cstdint>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// The constraint system a support allocation must satisfy relative to a
/// fractional allocation: per-good column totals fixed, and each agent's
/// utility within the floor/ceiling window of her fractional utility.
struct RoundingConstraints {
  std::vector<int> column_totals;  // per good; 0 or 1 under minimal completeness
  std::vector<long> row_floor;     // per agent
  std::vector<long> row_ceil;

  /// Throws std::invalid_argument when a column total is not integral.
  static RoundingConstraints for_allocation(const Instance& instance,
                                            const FractionalAllocation& frac);
};

/// Implements a fractional maximum Nash welfare allocation as an exact
/// lottery over deterministic allocations. Every support allocation keeps
/// the same per-good allocation totals, has each utility at the floor or
/// ceiling of the fractional utility, and is itself a deterministic MNW
/// (hence EF1) allocation; the per-(agent,good) marginals reproduce `frac`
/// exactly.
///
/// The decomposition peels integral extreme points: round the strictly
/// fractional entries along cycles of the bipartite support graph (a dummy
/// vertex stands in for each non-integral row total) until integral, take
/// the largest probability that keeps the renormalized remainder inside the
/// constraints, and repeat.
///
/// Throws std::invalid_argument when `frac` fails the fractional MNW
/// certificate.
Lottery decompose(const Instance& instance, const FractionalAllocation& frac);

/// True iff alloc's utility vector is at the floor or ceiling of each
/// fractional utility and matches the fractional utilities in total within
/// every group of agents sharing a common floor.
bool check_rounded(const Instance& instance, const FractionalAllocation& frac,
                   const DeterministicAllocation& alloc);

/// Draws one support allocation with the stated probabilities, exactly:
/// inverse CDF over a uniform integer draw from the common denominator.
/// Deterministic for a fixed seed.
DeterministicAllocation sample(const Lottery& lottery, std::uint64_t seed);

}  // namespace fairdiv
