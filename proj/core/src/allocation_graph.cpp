#include "fairdiv/allocation_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace fairdiv {

bool AllocationGraph::has_edge(int from, int to) const {
  const auto& nbrs = adjacency[from];
  return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

AllocationGraph build_graph(const Instance& instance, const DeterministicAllocation& alloc) {
  const int n = instance.num_agents();
  AllocationGraph graph;
  graph.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int g = 0; g < instance.num_goods(); ++g) {
        if (alloc.assignee(g) == j && instance.likes(i, g)) {
          graph.adjacency[i].push_back(j);
          break;
        }
      }
    }
  }
  return graph;
}

std::optional<std::vector<int>> find_path(const AllocationGraph& graph, int from,
                                          const std::function<bool(int)>& is_target) {
  const int n = graph.num_agents();
  if (from < 0 || from >= n) throw std::invalid_argument("agent index out of range");

  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[from] = true;

  auto path_to = [&](int target) {
    std::vector<int> path;
    for (int v = target; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Level-synchronous BFS: scan each level ascending so the lowest-indexed
  // target at minimum distance wins.
  std::vector<int> level = {from};
  while (!level.empty()) {
    for (int v : level)
      if (is_target(v)) return path_to(v);
    std::vector<int> next;
    for (int v : level) {
      for (int w : graph.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return std::nullopt;
}

namespace {

// Every valued good assigned to a liker: the binary-valuations
// characterization of Pareto optimality.
bool pareto_optimal(const Instance& instance, const DeterministicAllocation& alloc) {
  for (int g = 0; g < instance.num_goods(); ++g) {
    if (!instance.is_valued(g)) continue;
    int holder = alloc.assignee(g);
    if (holder == DeterministicAllocation::kUnassigned || !instance.likes(holder, g))
      return false;
  }
  return true;
}

}  // namespace

DeterministicAllocation pass_back(const Instance& instance,
                                  const DeterministicAllocation& alloc,
                                  const std::vector<int>& path) {
  if (path.empty()) throw std::logic_error("pass_back on an empty path");
  if (!pareto_optimal(instance, alloc))
    throw std::logic_error("pass_back requires a Pareto optimal allocation");

  AllocationGraph graph = build_graph(instance, alloc);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!graph.has_edge(path[k], path[k + 1]))
      throw std::logic_error("pass_back path is not a path in the allocation graph");
  }

  DeterministicAllocation result = alloc;
  for (std::size_t k = path.size() - 1; k >= 1; --k) {
    const int receiver = path[k - 1];
    const int giver = path[k];
    int transfer = -1;
    for (int g = 0; g < instance.num_goods(); ++g) {
      if (result.assignee(g) == giver && instance.likes(receiver, g)) {
        transfer = g;
        break;
      }
    }
    if (transfer == -1)
      throw std::logic_error("pass_back found no transferable good along the path");
    result.assign(transfer, receiver);
  }
  return result;
}

std::set<int> reachable_set(const Instance& instance, const DeterministicAllocation& alloc,
                            int agent) {
  const int n = instance.num_agents();
  if (agent < 0 || agent >= n) throw std::invalid_argument("agent index out of range");
  const std::vector<int> u = utilities(instance, alloc);
  const AllocationGraph graph = build_graph(instance, alloc);

  std::set<int> reached;
  std::queue<int> frontier;
  auto push = [&](int v) {
    if (reached.insert(v).second) frontier.push(v);
  };
  push(agent);
  for (int j = 0; j < n; ++j)
    if (u[j] < u[agent]) push(j);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : graph.adjacency[v]) push(w);
  }
  return reached;
}

}  // namespace fairdiv
