#include "fairdiv/max_flow.hpp"

#include <algorithm>
#include <queue>

namespace fairdiv {

MaxFlow::MaxFlow(int num_vertices) : graph_(num_vertices) {}

int MaxFlow::add_edge(int from, int to, long long capacity) {
  const int id = static_cast<int>(edge_refs_.size());
  graph_[from].push_back({to, capacity, static_cast<int>(graph_[to].size())});
  graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
  edge_refs_.emplace_back(from, static_cast<int>(graph_[from].size()) - 1);
  initial_capacity_.push_back(capacity);
  return id;
}

bool MaxFlow::bfs_levels(int source, int sink) {
  level_.assign(graph_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Edge& e : graph_[v]) {
      if (e.capacity > 0 && level_[e.to] == -1) {
        level_[e.to] = level_[v] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] != -1;
}

long long MaxFlow::push(int v, int sink, long long limit) {
  if (v == sink || limit == 0) return limit;
  for (int& i = next_edge_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
    Edge& e = graph_[v][i];
    if (e.capacity <= 0 || level_[e.to] != level_[v] + 1) continue;
    long long pushed = push(e.to, sink, std::min(limit, e.capacity));
    if (pushed > 0) {
      e.capacity -= pushed;
      graph_[e.to][e.reverse].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

long long MaxFlow::run(int source, int sink) {
  long long total = 0;
  while (bfs_levels(source, sink)) {
    next_edge_.assign(graph_.size(), 0);
    while (long long pushed = push(source, sink, kInfinity)) total += pushed;
  }
  return total;
}

long long MaxFlow::flow_on(int edge_id) const {
  const auto& [vertex, index] = edge_refs_[edge_id];
  return initial_capacity_[edge_id] - graph_[vertex][index].capacity;
}

std::vector<bool> MaxFlow::residual_reachable(int start) const {
  std::vector<bool> seen(graph_.size(), false);
  std::queue<int> queue;
  seen[start] = true;
  queue.push(start);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Edge& e : graph_[v]) {
      if (e.capacity > 0 && !seen[e.to]) {
        seen[e.to] = true;
        queue.push(e.to);
      }
    }
  }
  return seen;
}

}  // namespace fairdiv
