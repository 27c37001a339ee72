#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv::testing {

inline Instance inst(std::vector<std::vector<int>> rows) { return Instance(std::move(rows)); }

inline DeterministicAllocation alloc_of(std::vector<int> assignee, int num_agents) {
  return DeterministicAllocation(std::move(assignee), num_agents);
}

constexpr int kUn = DeterministicAllocation::kUnassigned;

/// Every binary valuation profile with the given shape, in bit order.
inline void for_each_profile(int num_agents, int num_goods,
                             const std::function<void(const Instance&)>& visit) {
  const std::uint64_t total = 1ULL << (num_agents * num_goods);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::vector<int>> rows(num_agents, std::vector<int>(num_goods));
    for (int i = 0; i < num_agents; ++i)
      for (int g = 0; g < num_goods; ++g)
        rows[i][g] = (bits >> (i * num_goods + g)) & 1 ? 1 : 0;
    visit(Instance(rows));
  }
}

/// The exhaustive desk-scale range used across the test suite:
/// n in {1,2,3} x m in {1,2,3}, plus (2,4).
inline void for_each_small_shape(const std::function<void(int, int)>& visit) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) visit(n, m);
  visit(2, 4);
}

inline Instance random_instance(std::mt19937_64& rng, int max_agents, int max_goods) {
  std::uniform_int_distribution<int> agents_dist(1, max_agents);
  std::uniform_int_distribution<int> goods_dist(1, max_goods);
  std::uniform_int_distribution<int> bit(0, 1);
  const int n = agents_dist(rng);
  const int m = goods_dist(rng);
  std::vector<std::vector<int>> rows(n, std::vector<int>(m));
  for (auto& row : rows)
    for (int& v : row) v = bit(rng);
  return Instance(rows);
}

inline DeterministicAllocation random_allocation(std::mt19937_64& rng, const Instance& instance) {
  std::uniform_int_distribution<int> dist(-1, instance.num_agents() - 1);
  DeterministicAllocation alloc(instance.num_goods());
  for (int g = 0; g < instance.num_goods(); ++g) {
    const int agent = dist(rng);
    if (agent >= 0) alloc.assign(g, agent);
  }
  return alloc;
}

}  // namespace fairdiv::testing
