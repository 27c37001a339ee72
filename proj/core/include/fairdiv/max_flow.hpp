#pragma once

#include <vector>

namespace fairdiv {

/// Dinic's maximum flow on a small integer-capacity network. Capacities and
/// flows are exact 64-bit integers; the fractional solver scales its rational
/// capacities to integers before building the network.
class MaxFlow {
 public:
  static constexpr long long kInfinity = 1LL << 60;

  explicit MaxFlow(int num_vertices);

  /// Returns an edge id usable with flow_on after run().
  int add_edge(int from, int to, long long capacity);

  long long run(int source, int sink);

  long long flow_on(int edge_id) const;

  /// Vertices reachable from `start` in the residual network of the last
  /// run (positive residual capacity on every hop).
  std::vector<bool> residual_reachable(int start) const;

 private:
  struct Edge {
    int to;
    long long capacity;  // remaining
    int reverse;         // index of the reverse edge in graph_[to]
  };

  bool bfs_levels(int source, int sink);
  long long push(int v, int sink, long long limit);

  std::vector<std::vector<Edge>> graph_;
  std::vector<std::pair<int, int>> edge_refs_;  // (vertex, index) per public edge id
  std::vector<long long> initial_capacity_;
  std::vector<int> level_;
  std::vector<int> next_edge_;
};

}  // namespace fairdiv
