#include "fairdiv/deterministic_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fairdiv/allocation_graph.hpp"
#include "fairdiv/properties.hpp"

namespace fairdiv {

namespace {

long long squared_utility_sum(const std::vector<int>& u) {
  long long total = 0;
  for (int v : u) total += static_cast<long long>(v) * v;
  return total;
}

Instance relabel_instance(const Instance& instance, const std::vector<int>& priority) {
  std::vector<std::vector<int>> rows;
  rows.reserve(priority.size());
  for (int agent : priority) rows.push_back(instance.row(agent));
  return Instance(std::move(rows));
}

}  // namespace

DeterministicAllocation initial_mnw(const Instance& instance) {
  const int n = instance.num_agents();
  DeterministicAllocation alloc(instance.num_goods());
  for (int g = 0; g < instance.num_goods(); ++g) {
    for (int i = 0; i < n; ++i) {
      if (instance.likes(i, g)) {
        alloc.assign(g, i);
        break;
      }
    }
  }

  std::vector<int> u = utilities(instance, alloc);
  long long potential = squared_utility_sum(u);
  for (;;) {
    const AllocationGraph graph = build_graph(instance, alloc);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return u[a] < u[b]; });

    bool improved = false;
    for (int i : order) {
      auto path = find_path(graph, i, [&](int j) { return u[j] > u[i] + 1; });
      if (!path) continue;
      alloc = pass_back(instance, alloc, *path);
      u = utilities(instance, alloc);
      const long long next_potential = squared_utility_sum(u);
      if (next_potential > potential - 2)
        throw std::logic_error("MNW local search potential failed to decrease");
      potential = next_potential;
      improved = true;
      break;
    }
    if (!improved) return alloc;
  }
}

DeterministicAllocation mnw_tie(const Instance& instance, const MnwTieOptions& options) {
  const int n = instance.num_agents();

  if (!options.priority.empty()) {
    std::vector<int> sorted = options.priority;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (sorted != identity)
      throw std::invalid_argument("priority must be a permutation of all agents");

    auto to_original_labels = [&](const DeterministicAllocation& relabeled) {
      DeterministicAllocation alloc(instance.num_goods());
      for (int g = 0; g < instance.num_goods(); ++g)
        if (relabeled.is_assigned(g)) alloc.assign(g, options.priority[relabeled.assignee(g)]);
      return alloc;
    };
    MnwTieOptions inner;
    if (options.on_iteration) {
      inner.on_iteration = [&](int iteration, const DeterministicAllocation& relabeled) {
        options.on_iteration(iteration, to_original_labels(relabeled));
      };
    }
    return to_original_labels(mnw_tie(relabel_instance(instance, options.priority), inner));
  }

  DeterministicAllocation alloc = initial_mnw(instance);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> u = utilities(instance, alloc);
    const AllocationGraph graph = build_graph(instance, alloc);
    auto path = find_path(graph, i, [&](int j) { return j > i && u[j] == u[i] + 1; });
    if (path) alloc = pass_back(instance, alloc, *path);
    if (options.on_iteration) options.on_iteration(i, alloc);
  }
  return alloc;
}

DeterministicAllocation mnw_tie_allocate_all(const Instance& instance) {
  DeterministicAllocation alloc = mnw_tie(instance);
  for (int g = 0; g < instance.num_goods(); ++g)
    if (!instance.is_valued(g)) alloc.assign(g, 0);
  return alloc;
}

}  // namespace fairdiv
