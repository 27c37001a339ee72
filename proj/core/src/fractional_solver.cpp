#include "fairdiv/fractional_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fairdiv/max_flow.hpp"

namespace fairdiv {

namespace {

struct FlowNetwork {
  MaxFlow flow;
  long long target;  // p * |agents|
  std::map<std::pair<int, int>, int> good_agent_edge;  // (good, agent) -> edge id
  std::map<int, int> good_vertex;
  std::map<int, int> agent_vertex;
  int source;
  int sink;
};

// source → good (capacity q) → liking agent (∞) → sink (capacity p).
// The ratio p/q is simultaneously reachable by every agent iff the max flow
// saturates all agent→sink edges.
FlowNetwork build_network(const Instance& instance, const std::vector<int>& agents,
                          const std::vector<int>& goods, long long p, long long q) {
  FlowNetwork net{MaxFlow(static_cast<int>(agents.size() + goods.size()) + 2),
                  p * static_cast<long long>(agents.size()),
                  {}, {}, {}, 0, 0};
  int next = 0;
  net.source = next++;
  net.sink = next++;
  for (int g : goods) net.good_vertex[g] = next++;
  for (int i : agents) net.agent_vertex[i] = next++;

  for (int g : goods) net.flow.add_edge(net.source, net.good_vertex[g], q);
  for (int g : goods) {
    for (int i : agents) {
      if (instance.likes(i, g))
        net.good_agent_edge[{g, i}] =
            net.flow.add_edge(net.good_vertex[g], net.agent_vertex[i], MaxFlow::kInfinity);
    }
  }
  for (int i : agents) net.flow.add_edge(net.agent_vertex[i], net.sink, p);
  return net;
}

bool feasible(const Instance& instance, const std::vector<int>& agents,
              const std::vector<int>& goods, const Rational& ratio) {
  FlowNetwork net = build_network(instance, agents, goods, ratio.get_num().get_si(),
                                  ratio.get_den().get_si());
  return net.flow.run(net.source, net.sink) == net.target;
}

FractionalMnwResult solve_water_filling(const Instance& instance) {
  const int n = instance.num_agents();
  FractionalMnwResult result{FractionalAllocation(n, instance.num_goods()),
                             UtilityVector(n, Rational(0))};

  std::vector<int> active;
  for (int i = 0; i < n; ++i)
    if (!instance.liked_goods(i).empty()) active.push_back(i);
  std::vector<int> remaining = instance.valued_goods();

  while (!active.empty()) {
    if (remaining.empty())
      throw std::logic_error("active agents left without remaining liked goods");

    // Candidate bottleneck ratios p/q, deduplicated by value.
    std::vector<Rational> candidates;
    for (int q = 1; q <= static_cast<int>(active.size()); ++q)
      for (int p = 1; p <= static_cast<int>(remaining.size()); ++p)
        candidates.push_back(make_rational(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Feasibility is monotone: everything up to the bottleneck is feasible.
    std::size_t lo = 0, hi = candidates.size() - 1;
    if (!feasible(instance, active, remaining, candidates[lo]))
      throw std::logic_error("water-filling found no feasible ratio");
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (feasible(instance, active, remaining, candidates[mid]))
        lo = mid;
      else
        hi = mid - 1;
    }
    const Rational bottleneck = candidates[lo];
    const long long p = bottleneck.get_num().get_si();
    const long long q = bottleneck.get_den().get_si();

    FlowNetwork net = build_network(instance, active, remaining, p, q);
    if (net.flow.run(net.source, net.sink) != net.target)
      throw std::logic_error("bottleneck ratio became infeasible");

    // The maximal tight set: agents unreachable from the source in the
    // residual network. They are exactly the agents that cannot be pushed
    // past the bottleneck.
    const std::vector<bool> reachable = net.flow.residual_reachable(net.source);
    std::vector<int> frozen, still_active;
    for (int i : active) {
      if (!reachable[net.agent_vertex[i]])
        frozen.push_back(i);
      else
        still_active.push_back(i);
    }
    if (frozen.empty()) throw std::logic_error("water-filling froze no agent");

    // Frozen agents take all their remaining liked goods; shares come from
    // the flow, scaled back down by q.
    std::vector<int> still_remaining;
    for (int g : remaining) {
      bool liked_by_frozen = false;
      for (int i : frozen) {
        if (instance.likes(i, g)) {
          liked_by_frozen = true;
          break;
        }
      }
      if (!liked_by_frozen) {
        still_remaining.push_back(g);
        continue;
      }
      for (int i : frozen) {
        auto it = net.good_agent_edge.find({g, i});
        if (it == net.good_agent_edge.end()) continue;
        const long long amount = net.flow.flow_on(it->second);
        if (amount > 0) result.shares.set_share(i, g, make_rational(amount, q));
      }
    }
    for (int i : frozen) result.utilities[i] = bottleneck;

    active = std::move(still_active);
    remaining = std::move(still_remaining);
  }
  return result;
}

}  // namespace

FractionalMnwResult fractional_mnw(const Instance& instance) {
  FractionalMnwResult result = solve_water_filling(instance);
  if (auto violation = find_fractional_mnw_violation(instance, result.shares))
    throw std::logic_error("fractional solver produced an uncertified allocation: " +
                           violation->describe());
  return result;
}

std::string FractionalMnwViolation::describe() const {
  switch (kind) {
    case Kind::NotMinimallyComplete:
      return "good " + std::to_string(good) + " is not allocated minimally completely";
    case Kind::ShareOnUnlikedGood:
      return "agent " + std::to_string(holder) + " holds good " + std::to_string(good) +
             " without liking it";
    case Kind::ImprovingTransfer:
      return "moving good " + std::to_string(good) + " from agent " + std::to_string(holder) +
             " to agent " + std::to_string(poorer) + " improves the Nash product";
  }
  return "unknown violation";
}

std::optional<FractionalMnwViolation> find_fractional_mnw_violation(
    const Instance& instance, const FractionalAllocation& frac) {
  using Kind = FractionalMnwViolation::Kind;
  const int n = instance.num_agents();
  const int m = instance.num_goods();
  if (frac.num_agents() != n || frac.num_goods() != m)
    throw std::invalid_argument("share matrix does not match the instance shape");

  for (int g = 0; g < m; ++g) {
    for (int i = 0; i < n; ++i) {
      if (frac.share(i, g) > 0 && !instance.likes(i, g))
        return FractionalMnwViolation{Kind::ShareOnUnlikedGood, g, i, -1};
    }
    const Rational total = frac.column_sum(g);
    if (total != (instance.is_valued(g) ? 1 : 0))
      return FractionalMnwViolation{Kind::NotMinimallyComplete, g, -1, -1};
  }

  const UtilityVector u = utilities(instance, frac);
  for (int g = 0; g < m; ++g) {
    for (int holder = 0; holder < n; ++holder) {
      if (frac.share(holder, g) == 0) continue;
      for (int other = 0; other < n; ++other) {
        if (instance.likes(other, g) && u[other] < u[holder])
          return FractionalMnwViolation{Kind::ImprovingTransfer, g, holder, other};
      }
    }
  }
  return std::nullopt;
}

bool verify_fractional_mnw(const Instance& instance, const FractionalAllocation& frac) {
  return !find_fractional_mnw_violation(instance, frac).has_value();
}

}  // namespace fairdiv
