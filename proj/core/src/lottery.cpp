#include "fairdiv/lottery.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "fairdiv/fractional_solver.hpp"

namespace fairdiv {

namespace {

using ShareMatrix = std::vector<std::vector<Rational>>;

UtilityVector row_utilities(const Instance& instance, const ShareMatrix& shares) {
  UtilityVector u(instance.num_agents(), Rational(0));
  for (int i = 0; i < instance.num_agents(); ++i)
    for (int g = 0; g < instance.num_goods(); ++g)
      if (instance.likes(i, g)) u[i] += shares[i][g];
  return u;
}

bool entry_fractional(const Rational& x) { return x > 0 && x < 1; }

// Bipartite graph of the strictly fractional entries. Vertices: agents
// [0,n), goods [n,n+m), dummy n+m. The dummy attaches to every agent whose
// row utility is non-integral. Column sums are integral and any row with a
// single fractional entry has a fractional sum, so every vertex touching an
// edge has degree >= 2 and a cycle exists whenever the graph is non-empty.
std::vector<std::vector<int>> support_graph(const Instance& instance, const ShareMatrix& shares,
                                            const UtilityVector& row_util) {
  const int n = instance.num_agents();
  const int m = instance.num_goods();
  std::vector<std::vector<int>> adjacency(n + m + 1);
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < m; ++g) {
      if (entry_fractional(shares[i][g])) {
        adjacency[i].push_back(n + g);
        adjacency[n + g].push_back(i);
      }
    }
    if (!is_integral(row_util[i])) {
      adjacency[i].push_back(n + m);
      adjacency[n + m].push_back(i);
    }
  }
  return adjacency;
}

// Any cycle, as a vertex sequence. DFS from the lowest-indexed vertex with
// edges, neighbors ascending, so the choice is deterministic.
std::vector<int> find_cycle(const std::vector<std::vector<int>>& adjacency) {
  const int size = static_cast<int>(adjacency.size());
  std::vector<int> position_in_path(size, -1);
  std::vector<bool> visited(size, false);

  for (int start = 0; start < size; ++start) {
    if (adjacency[start].empty() || visited[start]) continue;

    struct Frame {
      int vertex;
      int parent;
      std::size_t next = 0;
    };
    std::vector<int> path;
    std::vector<Frame> frames;
    auto enter = [&](int v, int parent) {
      visited[v] = true;
      position_in_path[v] = static_cast<int>(path.size());
      path.push_back(v);
      frames.push_back({v, parent});
    };
    enter(start, -1);
    while (!frames.empty()) {
      Frame& frame = frames.back();
      if (frame.next >= adjacency[frame.vertex].size()) {
        position_in_path[frame.vertex] = -1;
        path.pop_back();
        frames.pop_back();
        continue;
      }
      const int next = adjacency[frame.vertex][frame.next++];
      if (next == frame.parent) continue;
      if (position_in_path[next] != -1)
        return std::vector<int>(path.begin() + position_in_path[next], path.end());
      if (!visited[next]) enter(next, frame.vertex);
    }
  }
  return {};
}

// Rounds the strictly fractional entries to an integral point with the same
// column sums and row utilities inside the floor/ceiling windows. Integral
// entries never move, so the result is 1 only where the input is positive
// and 0 only where it is below 1.
ShareMatrix integral_extreme_point(const Instance& instance, ShareMatrix shares,
                                   const RoundingConstraints& constraints) {
  const int n = instance.num_agents();
  const int m = instance.num_goods();
  const int max_rounds = 2 * (n * m + n + 1);

  for (int round = 0; round <= max_rounds; ++round) {
    const UtilityVector row_util = row_utilities(instance, shares);
    const std::vector<int> cycle = find_cycle(support_graph(instance, shares, row_util));
    if (cycle.empty()) {
      for (const auto& row : shares)
        for (const Rational& x : row)
          if (entry_fractional(x))
            throw std::logic_error("fractional support graph is acyclic but entries remain");
      return shares;
    }

    // Alternating +δ/-δ along the cycle keeps every column sum fixed; an
    // agent adjacent to the dummy has its row utility moved by the net sign
    // of its entry edges, bounded by its window walls.
    const std::size_t len = cycle.size();
    std::map<std::pair<int, int>, int> entry_delta;  // (agent, good) -> net sign
    for (std::size_t k = 0; k < len; ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % len];
      const int agent = std::min(a, b);
      const int good_vertex = std::max(a, b);
      if (good_vertex == n + m) continue;  // dummy edge carries no entry
      entry_delta[{agent, good_vertex - n}] += (k % 2 == 0) ? 1 : -1;
    }

    Rational delta(-1);
    auto tighten = [&](const Rational& bound) {
      if (delta < 0 || bound < delta) delta = bound;
    };
    std::vector<int> row_delta(n, 0);
    for (const auto& [key, sign] : entry_delta) {
      const auto& [agent, good] = key;
      if (sign > 0)
        tighten(Rational(1) - shares[agent][good]);
      else if (sign < 0)
        tighten(shares[agent][good]);
      if (instance.likes(agent, good)) row_delta[agent] += sign;
    }
    for (int i = 0; i < n; ++i) {
      if (row_delta[i] > 0) tighten(Rational(constraints.row_ceil[i]) - row_util[i]);
      if (row_delta[i] < 0) tighten(row_util[i] - Rational(constraints.row_floor[i]));
    }
    if (delta <= 0) throw std::logic_error("cycle rounding made no progress");

    for (const auto& [key, sign] : entry_delta)
      shares[key.first][key.second] += sign * delta;
  }
  throw std::logic_error("cycle rounding exceeded its iteration budget");
}

}  // namespace

RoundingConstraints RoundingConstraints::for_allocation(const Instance& instance,
                                                        const FractionalAllocation& frac) {
  RoundingConstraints constraints;
  for (int g = 0; g < instance.num_goods(); ++g) {
    const Rational total = frac.column_sum(g);
    if (!is_integral(total))
      throw std::invalid_argument("fractional allocation has a non-integral column total");
    constraints.column_totals.push_back(static_cast<int>(total.get_num().get_si()));
  }
  for (const Rational& value : utilities(instance, frac)) {
    constraints.row_floor.push_back(rational_floor(value));
    constraints.row_ceil.push_back(rational_ceil(value));
  }
  return constraints;
}

Lottery decompose(const Instance& instance, const FractionalAllocation& frac) {
  if (auto violation = find_fractional_mnw_violation(instance, frac))
    throw std::invalid_argument("decompose needs a certified fractional MNW allocation: " +
                                violation->describe());
  const RoundingConstraints constraints = RoundingConstraints::for_allocation(instance, frac);
  const int n = instance.num_agents();
  const int m = instance.num_goods();

  ShareMatrix current = frac.shares();
  Rational weight(1);
  std::vector<Lottery::Entry> entries;
  bool exhausted = true;

  const int max_peels = n * m + n + 2;
  for (int peel = 0; peel <= max_peels; ++peel) {
    const ShareMatrix point = integral_extreme_point(instance, current, constraints);

    // Largest θ keeping (current - θ·point) / (1 - θ) inside [0,1] and the
    // utility windows. θ = 1 exactly when current is already integral.
    Rational theta(1);
    for (int i = 0; i < n; ++i) {
      for (int g = 0; g < m; ++g) {
        const Rational bound =
            point[i][g] == 1 ? current[i][g] : Rational(1) - current[i][g];
        if (bound < theta) theta = bound;
      }
    }
    const UtilityVector current_util = row_utilities(instance, current);
    const UtilityVector point_util = row_utilities(instance, point);
    for (int i = 0; i < n; ++i) {
      if (constraints.row_ceil[i] == constraints.row_floor[i]) continue;
      const Rational bound = point_util[i] == constraints.row_ceil[i]
                                 ? current_util[i] - Rational(constraints.row_floor[i])
                                 : Rational(constraints.row_ceil[i]) - current_util[i];
      if (bound < theta) theta = bound;
    }
    if (theta <= 0) throw std::logic_error("lottery peel made no progress");

    const DeterministicAllocation support = FractionalAllocation(point).to_deterministic();
    if (theta == 1) {
      entries.push_back({weight, support});
      exhausted = false;
      break;
    }
    entries.push_back({weight * theta, support});
    const Rational rest = Rational(1) - theta;
    for (int i = 0; i < n; ++i)
      for (int g = 0; g < m; ++g)
        current[i][g] = (current[i][g] - theta * point[i][g]) / rest;
    weight *= rest;
  }
  if (exhausted) throw std::logic_error("lottery peeling exceeded its iteration budget");

  Lottery lottery{std::move(entries)};
  if (!(induced_fractional(lottery, instance) == frac))
    throw std::logic_error("lottery marginals do not reproduce the fractional allocation");
  return lottery;
}

bool check_rounded(const Instance& instance, const FractionalAllocation& frac,
                   const DeterministicAllocation& alloc) {
  const UtilityVector target = utilities(instance, frac);
  const std::vector<int> actual = utilities(instance, alloc);

  std::map<long, std::pair<long, Rational>> groups;  // floor -> (sum actual, sum target)
  for (int i = 0; i < instance.num_agents(); ++i) {
    const long floor_i = rational_floor(target[i]);
    const long ceil_i = rational_ceil(target[i]);
    if (actual[i] < floor_i || actual[i] > ceil_i) return false;
    auto& [sum_actual, sum_target] = groups[floor_i];
    sum_actual += actual[i];
    sum_target += target[i];
  }
  for (const auto& [floor_value, sums] : groups) {
    (void)floor_value;
    if (Rational(sums.first) != sums.second) return false;
  }
  return true;
}

DeterministicAllocation sample(const Lottery& lottery, std::uint64_t seed) {
  if (lottery.support().empty()) throw std::invalid_argument("cannot sample an empty lottery");

  BigInt common(1);
  for (const auto& entry : lottery.support()) {
    BigInt den = entry.probability.get_den();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  }

  gmp_randstate_t state;
  gmp_randinit_mt(state);
  gmp_randseed_ui(state, static_cast<unsigned long>(seed));
  BigInt draw;
  mpz_urandomm(draw.get_mpz_t(), state, common.get_mpz_t());
  gmp_randclear(state);

  BigInt cumulative(0);
  for (const auto& entry : lottery.support()) {
    cumulative += entry.probability.get_num() * (common / entry.probability.get_den());
    if (draw < cumulative) return entry.allocation;
  }
  return lottery.support().back().allocation;
}

}  // namespace fairdiv
