#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// Directed graph over agents: edge (i,j) exists iff some good held by j is
/// liked by i (i != j). Neighbor lists are kept in ascending order so every
/// traversal is deterministic.
struct AllocationGraph {
  std::vector<std::vector<int>> adjacency;

  int num_agents() const { return static_cast<int>(adjacency.size()); }
  bool has_edge(int from, int to) const;
};

AllocationGraph build_graph(const Instance& instance, const DeterministicAllocation& alloc);

/// Breadth-first search from `from` for the nearest agent satisfying the
/// predicate; among targets at equal distance the lowest-indexed one wins.
/// The start agent itself is considered (a singleton path). Returns the
/// agent sequence from start to target, or nullopt.
std::optional<std::vector<int>> find_path(const AllocationGraph& graph, int from,
                                          const std::function<bool(int)>& is_target);

/// Transfers one liked good per edge backwards along the path: for each
/// consecutive pair (u, w), taken from the path's end toward its start, the
/// lowest-indexed good in A_w that u likes moves from w to u. Requires a
/// Pareto optimal allocation and a path whose edges exist in G(alloc);
/// violations throw std::logic_error since they indicate a corrupted caller
/// state. Net effect on utilities: start +1, end -1, everyone else unchanged.
DeterministicAllocation pass_back(const Instance& instance,
                                  const DeterministicAllocation& alloc,
                                  const std::vector<int>& path);

/// Agents reachable in G(alloc) from {j : u_j < u_i} ∪ {i}.
std::set<int> reachable_set(const Instance& instance, const DeterministicAllocation& alloc,
                            int agent);

}  // namespace fairdiv
