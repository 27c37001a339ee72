#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

/// A (possibly partial) assignment of goods to agents. assignee[g] is the
/// agent holding good g, or kUnassigned. Goods left unassigned are
/// represented explicitly so that minimally complete allocations can leave
/// non-valued goods out.
class DeterministicAllocation {
 public:
  static constexpr int kUnassigned = -1;

  DeterministicAllocation() = default;
  explicit DeterministicAllocation(int num_goods)
      : assignee_(num_goods, kUnassigned) {}
  /// Validates every entry against [0, num_agents) or kUnassigned.
  DeterministicAllocation(std::vector<int> assignee, int num_agents);

  int num_goods() const { return static_cast<int>(assignee_.size()); }
  bool is_assigned(int good) const { return assignee_[good] != kUnassigned; }
  int assignee(int good) const { return assignee_[good]; }
  std::optional<int> holder(int good) const;

  void assign(int good, int agent) { assignee_[good] = agent; }
  void unassign(int good) { assignee_[good] = kUnassigned; }

  /// Goods held by the agent, ascending.
  std::vector<int> bundle(int agent) const;
  int bundle_size(int agent) const;

  const std::vector<int>& raw() const { return assignee_; }

  bool operator==(const DeterministicAllocation&) const = default;
  auto operator<=>(const DeterministicAllocation&) const = default;

 private:
  std::vector<int> assignee_;
};

/// Per-agent utilities in agent-index order. Deterministic allocations give
/// integer entries; fractional allocations give rationals.
using UtilityVector = std::vector<Rational>;

/// n x m matrix of exact rational shares; shares[i][g] is the fraction of
/// good g held by agent i. Column sums never exceed 1.
class FractionalAllocation {
 public:
  FractionalAllocation() = default;
  FractionalAllocation(int num_agents, int num_goods)
      : shares_(num_agents, std::vector<Rational>(num_goods, Rational(0))) {}
  /// Validates entries in [0,1] and column sums <= 1.
  explicit FractionalAllocation(std::vector<std::vector<Rational>> shares);

  int num_agents() const { return static_cast<int>(shares_.size()); }
  int num_goods() const {
    return shares_.empty() ? 0 : static_cast<int>(shares_[0].size());
  }

  const Rational& share(int agent, int good) const { return shares_[agent][good]; }
  void set_share(int agent, int good, Rational value) { shares_[agent][good] = std::move(value); }

  Rational column_sum(int good) const;
  bool is_integral() const;

  /// Interprets a 0/1 share matrix as a deterministic allocation.
  /// Throws std::logic_error when the matrix is not integral.
  DeterministicAllocation to_deterministic() const;

  /// Embeds a deterministic allocation as a 0/1 share matrix.
  static FractionalAllocation from_deterministic(const DeterministicAllocation& alloc,
                                                 int num_agents);

  const std::vector<std::vector<Rational>>& shares() const { return shares_; }

  bool operator==(const FractionalAllocation&) const = default;

 private:
  std::vector<std::vector<Rational>> shares_;
};

/// A probability distribution over deterministic allocations. Probabilities
/// are positive exact rationals summing to 1; duplicate allocations are
/// merged on construction.
class Lottery {
 public:
  struct Entry {
    Rational probability;
    DeterministicAllocation allocation;
    bool operator==(const Entry&) const = default;
  };

  Lottery() = default;
  /// Merges duplicates and validates positivity and total mass 1.
  explicit Lottery(std::vector<Entry> support);

  const std::vector<Entry>& support() const { return support_; }
  int size() const { return static_cast<int>(support_.size()); }

  bool operator==(const Lottery&) const = default;

 private:
  std::vector<Entry> support_;
};

enum class LeximinOrder { Dominates, Dominated, Equivalent };

/// v_agent(A_agent) = number of liked goods in the agent's bundle.
int utility(const Instance& instance, const DeterministicAllocation& alloc, int agent);

/// Integer utilities for all agents, agent-index order.
std::vector<int> utilities(const Instance& instance, const DeterministicAllocation& alloc);

/// Expected utility of the agent under a share matrix.
Rational utility(const Instance& instance, const FractionalAllocation& frac, int agent);

UtilityVector utilities(const Instance& instance, const FractionalAllocation& frac);

UtilityVector to_utility_vector(const std::vector<int>& integer_utilities);

/// Compares sorted (non-descending) utility profiles lexicographically.
/// Equivalent iff both sort to the same profile.
LeximinOrder leximin_compare(const UtilityVector& a, const UtilityVector& b);
LeximinOrder leximin_compare(const std::vector<int>& a, const std::vector<int>& b);

/// Plain lexicographic comparison of the raw vectors in agent-index order.
std::strong_ordering lex_vector_compare(const UtilityVector& a, const UtilityVector& b);
std::strong_ordering lex_vector_compare(const std::vector<int>& a, const std::vector<int>& b);

/// The fractional allocation a lottery implements: shares are the exact
/// probabilities of each good going to each agent.
FractionalAllocation induced_fractional(const Lottery& lottery, const Instance& instance);

}  // namespace fairdiv
