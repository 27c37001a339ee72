#include "fairdiv/properties.hpp"

#include <algorithm>

#include "fairdiv/allocation_graph.hpp"

namespace fairdiv {

namespace {

int bundle_value(const Instance& instance, const DeterministicAllocation& alloc,
                 int valuer, int holder) {
  int total = 0;
  for (int g = 0; g < instance.num_goods(); ++g)
    if (alloc.assignee(g) == holder && instance.likes(valuer, g)) ++total;
  return total;
}

}  // namespace

std::optional<EnvyWitness> find_envy(const Instance& instance,
                                     const DeterministicAllocation& alloc) {
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    const int own = utility(instance, alloc, i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (own < bundle_value(instance, alloc, i, j)) return EnvyWitness{i, j};
    }
  }
  return std::nullopt;
}

bool is_envy_free(const Instance& instance, const DeterministicAllocation& alloc) {
  return !find_envy(instance, alloc).has_value();
}

std::optional<EnvyWitness> find_ef1_violation(const Instance& instance,
                                              const DeterministicAllocation& alloc) {
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    const int own = utility(instance, alloc, i);
    for (int j = 0; j < n; ++j) {
      if (i == j || alloc.bundle_size(j) == 0) continue;
      if (own < bundle_value(instance, alloc, i, j) - 1) return EnvyWitness{i, j};
    }
  }
  return std::nullopt;
}

bool is_ef1(const Instance& instance, const DeterministicAllocation& alloc) {
  return !find_ef1_violation(instance, alloc).has_value();
}

std::optional<EnvyWitness> find_efx_violation(const Instance& instance,
                                              const DeterministicAllocation& alloc) {
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    const int own = utility(instance, alloc, i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int envied = bundle_value(instance, alloc, i, j);
      for (int g = 0; g < instance.num_goods(); ++g) {
        if (alloc.assignee(g) != j || !instance.likes(i, g)) continue;
        if (own < envied - instance.value(i, g)) return EnvyWitness{i, j};
      }
    }
  }
  return std::nullopt;
}

bool is_efx(const Instance& instance, const DeterministicAllocation& alloc) {
  return !find_efx_violation(instance, alloc).has_value();
}

std::optional<int> find_pareto_violation(const Instance& instance,
                                         const DeterministicAllocation& alloc) {
  for (int g = 0; g < instance.num_goods(); ++g) {
    if (!instance.is_valued(g)) continue;
    int holder = alloc.assignee(g);
    if (holder == DeterministicAllocation::kUnassigned || !instance.likes(holder, g)) return g;
  }
  return std::nullopt;
}

bool is_pareto_optimal(const Instance& instance, const DeterministicAllocation& alloc) {
  return !find_pareto_violation(instance, alloc).has_value();
}

bool is_minimally_complete(const Instance& instance, const DeterministicAllocation& alloc) {
  for (int g = 0; g < instance.num_goods(); ++g) {
    if (alloc.is_assigned(g) != instance.is_valued(g)) return false;
  }
  return true;
}

std::optional<MnwWitness> find_mnw_violation(const Instance& instance,
                                             const DeterministicAllocation& alloc) {
  if (auto good = find_pareto_violation(instance, alloc))
    return MnwWitness{.pareto_violation_good = good, .improving_path = std::nullopt};

  const std::vector<int> u = utilities(instance, alloc);
  const AllocationGraph graph = build_graph(instance, alloc);
  for (int i = 0; i < instance.num_agents(); ++i) {
    auto path = find_path(graph, i, [&](int j) { return u[j] > u[i] + 1; });
    if (path)
      return MnwWitness{.pareto_violation_good = std::nullopt, .improving_path = path};
  }
  return std::nullopt;
}

bool is_mnw(const Instance& instance, const DeterministicAllocation& alloc) {
  return !find_mnw_violation(instance, alloc).has_value();
}

TieInvariantReport check_mnw_tie_invariants(const Instance& instance,
                                            const DeterministicAllocation& alloc) {
  TieInvariantReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };

  if (!is_minimally_complete(instance, alloc)) fail("allocation is not minimally complete");
  if (auto witness = find_mnw_violation(instance, alloc)) {
    if (witness->pareto_violation_good)
      fail("not Pareto optimal: good " + std::to_string(*witness->pareto_violation_good));
    else
      fail("MNW certificate fails: improving path exists");
  }

  const int n = instance.num_agents();
  const std::vector<int> u = utilities(instance, alloc);
  for (int i = 0; i < n; ++i) {
    const std::set<int> closure = reachable_set(instance, alloc, i);

    // Goods held by the closure must equal the goods it likes.
    std::vector<bool> held(instance.num_goods(), false), liked(instance.num_goods(), false);
    for (int j : closure) {
      for (int g = 0; g < instance.num_goods(); ++g) {
        if (alloc.assignee(g) == j) held[g] = true;
        if (instance.likes(j, g)) liked[g] = true;
      }
    }
    if (held != liked)
      fail("agents reachable from agent " + std::to_string(i) +
           " do not hold exactly the goods they like");

    for (int j : closure) {
      if (u[j] > u[i] + 1)
        fail("agent " + std::to_string(j) + " reachable from agent " + std::to_string(i) +
             " has utility " + std::to_string(u[j]) + " > " + std::to_string(u[i] + 1));
      if (j >= i && u[j] > u[i])
        fail("agent " + std::to_string(j) + " >= " + std::to_string(i) +
             " in its reachable set has utility " + std::to_string(u[j]) + " > " +
             std::to_string(u[i]));
    }
  }
  return report;
}

}  // namespace fairdiv
