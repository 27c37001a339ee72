#pragma once

#include <vector>

namespace fairdiv {

/// A fair-division instance: n agents, m indivisible goods, and a binary
/// valuation matrix. valuations[i][g] is 1 when agent i likes good g.
/// Instances are immutable after construction and validated on construction.
class Instance {
 public:
  /// Throws std::invalid_argument on ragged rows, non-binary entries, or
  /// an empty agent set.
  explicit Instance(std::vector<std::vector<int>> valuations);

  int num_agents() const { return static_cast<int>(valuations_.size()); }
  int num_goods() const { return num_goods_; }

  bool likes(int agent, int good) const { return valuations_[agent][good] == 1; }
  int value(int agent, int good) const { return valuations_[agent][good]; }

  const std::vector<std::vector<int>>& valuations() const { return valuations_; }
  const std::vector<int>& row(int agent) const { return valuations_[agent]; }

  /// Goods liked by the agent, ascending.
  std::vector<int> liked_goods(int agent) const;

  /// Agents liking the good, ascending.
  std::vector<int> likers(int good) const;

  /// A good is valued when at least one agent likes it.
  bool is_valued(int good) const;
  std::vector<int> valued_goods() const;
  int num_valued_goods() const;

  bool operator==(const Instance&) const = default;

 private:
  std::vector<std::vector<int>> valuations_;
  int num_goods_ = 0;
};

}  // namespace fairdiv
