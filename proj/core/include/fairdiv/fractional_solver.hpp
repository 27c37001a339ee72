#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

struct FractionalMnwResult {
  FractionalAllocation shares;
  /// The unique optimal utility vector; the share matrix is one canonical
  /// optimizer among possibly many.
  UtilityVector utilities;
};

/// The minimally complete fractional allocation maximizing the product of
/// utilities over agents who like at least one good (equivalently, the
/// fractional leximin allocation).
///
/// Water-filling: the bottleneck ratio λ* = min over non-empty sets S of
/// active agents of |Γ(S)| / |S|, where Γ(S) is the set of remaining goods
/// liked by S, is found by binary search over the candidate ratios p/q with
/// feasibility decided by an integral max flow (source → good at capacity q,
/// good → liker at infinity, agent → sink at capacity p; feasible iff the
/// flow saturates every agent at p). The maximal tight set (the agents that
/// cannot be pushed past λ*) is read off the residual network, frozen at
/// exactly λ*, handed all of its remaining liked goods via the flow
/// decomposition, and removed; then repeat. Everything is exact: each frozen
/// utility is a rational with denominator at most n.
FractionalMnwResult fractional_mnw(const Instance& instance);

/// How a share matrix fails the fractional MNW certificate.
struct FractionalMnwViolation {
  enum class Kind {
    NotMinimallyComplete,  // `good` not fully allocated (or a non-valued good touched)
    ShareOnUnlikedGood,    // `holder` has mass on `good` without liking it
    ImprovingTransfer,     // moving mass of `good` from `holder` to `poorer` raises the product
  };
  Kind kind;
  int good = -1;
  int holder = -1;
  int poorer = -1;

  std::string describe() const;
};

/// Certifies a fractional maximum Nash welfare allocation: minimally
/// complete, shares only on liking pairs, and every positive share sits
/// with a minimum-utility liker of that good (no utility-improving transfer
/// of any fraction exists).
std::optional<FractionalMnwViolation> find_fractional_mnw_violation(
    const Instance& instance, const FractionalAllocation& frac);
bool verify_fractional_mnw(const Instance& instance, const FractionalAllocation& frac);

}  // namespace fairdiv
