#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "fairdiv/deterministic_solver.hpp"
#include "fairdiv/fractional_solver.hpp"

namespace fairdiv {

namespace {

long long enumeration_size(int num_agents, int num_goods, long long bound) {
  long long total = 1;
  for (int g = 0; g < num_goods; ++g) {
    total *= num_agents + 1;
    if (total > bound) return -1;
  }
  return total;
}

// (#positive utilities, product of positive utilities), the Nash objective.
std::pair<int, BigInt> nash_objective(const std::vector<int>& utilities) {
  int positive = 0;
  BigInt product(1);
  for (int u : utilities) {
    if (u > 0) {
      ++positive;
      product *= u;
    }
  }
  return {positive, product};
}

bool nash_less(const std::pair<int, BigInt>& a, const std::pair<int, BigInt>& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

}  // namespace

void for_each_allocation(const Instance& instance,
                         const std::function<void(const DeterministicAllocation&)>& visit,
                         long long bound) {
  const int n = instance.num_agents();
  const int m = instance.num_goods();
  if (enumeration_size(n, m, bound) < 0)
    throw std::invalid_argument("allocation enumeration exceeds the configured bound");

  DeterministicAllocation alloc(m);
  for (;;) {
    visit(alloc);
    int g = 0;
    // Odometer over assignments: each good counts unassigned, 0, ..., n-1.
    while (g < m) {
      if (alloc.assignee(g) + 1 < n) {
        alloc.assign(g, alloc.assignee(g) + 1);
        break;
      }
      alloc.unassign(g);
      ++g;
    }
    if (g == m) return;
  }
}

std::vector<DeterministicAllocation> enumerate_allocations(const Instance& instance,
                                                           long long bound) {
  std::vector<DeterministicAllocation> all;
  for_each_allocation(instance, [&](const DeterministicAllocation& alloc) { all.push_back(alloc); },
                      bound);
  return all;
}

std::vector<DeterministicAllocation> brute_mnw_set(const Instance& instance, long long bound) {
  if (instance.num_valued_goods() == 0)
    return {DeterministicAllocation(instance.num_goods())};

  std::vector<DeterministicAllocation> best;
  std::pair<int, BigInt> best_objective{-1, BigInt(0)};
  for_each_allocation(
      instance,
      [&](const DeterministicAllocation& alloc) {
        auto objective = nash_objective(utilities(instance, alloc));
        if (nash_less(best_objective, objective)) {
          best_objective = std::move(objective);
          best.clear();
          best.push_back(alloc);
        } else if (!nash_less(objective, best_objective)) {
          best.push_back(alloc);
        }
      },
      bound);
  return best;
}

std::vector<DeterministicAllocation> brute_leximin_set(const Instance& instance,
                                                       long long bound) {
  if (instance.num_valued_goods() == 0)
    return {DeterministicAllocation(instance.num_goods())};

  std::vector<DeterministicAllocation> best;
  std::vector<int> best_utilities;
  for_each_allocation(
      instance,
      [&](const DeterministicAllocation& alloc) {
        const std::vector<int> u = utilities(instance, alloc);
        if (best.empty()) {
          best.push_back(alloc);
          best_utilities = u;
          return;
        }
        switch (leximin_compare(u, best_utilities)) {
          case LeximinOrder::Dominates:
            best.clear();
            best.push_back(alloc);
            best_utilities = u;
            break;
          case LeximinOrder::Equivalent:
            best.push_back(alloc);
            break;
          case LeximinOrder::Dominated:
            break;
        }
      },
      bound);
  return best;
}

UtilityVector oracle_fractional_leximin(const Instance& instance, int max_agents) {
  const int n = instance.num_agents();
  if (n > max_agents)
    throw std::invalid_argument("tight-set enumeration refuses more than the configured agents");

  UtilityVector result(n, Rational(0));
  std::vector<int> active;
  for (int i = 0; i < n; ++i)
    if (!instance.liked_goods(i).empty()) active.push_back(i);
  std::vector<bool> remaining(instance.num_goods(), false);
  for (int g : instance.valued_goods()) remaining[g] = true;

  while (!active.empty()) {
    const int k = static_cast<int>(active.size());
    Rational best_ratio(-1);
    std::vector<bool> freeze(n, false);
    for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
      int members = 0;
      std::vector<bool> liked(instance.num_goods(), false);
      for (int b = 0; b < k; ++b) {
        if (!(mask & (1ULL << b))) continue;
        ++members;
        for (int g = 0; g < instance.num_goods(); ++g)
          if (remaining[g] && instance.likes(active[b], g)) liked[g] = true;
      }
      const int liked_count = static_cast<int>(std::count(liked.begin(), liked.end(), true));
      const Rational ratio = make_rational(liked_count, members);
      if (best_ratio < 0 || ratio < best_ratio) {
        best_ratio = ratio;
        freeze.assign(n, false);
      }
      if (ratio == best_ratio) {
        for (int b = 0; b < k; ++b)
          if (mask & (1ULL << b)) freeze[active[b]] = true;
      }
    }

    std::vector<int> still_active;
    for (int i : active) {
      if (freeze[i]) {
        result[i] = best_ratio;
        for (int g = 0; g < instance.num_goods(); ++g)
          if (remaining[g] && instance.likes(i, g)) remaining[g] = false;
      } else {
        still_active.push_back(i);
      }
    }
    if (still_active.size() == active.size())
      throw std::logic_error("tight-set enumeration froze no agent");
    active = std::move(still_active);
  }
  return result;
}

AllocationRule make_mnw_tie_rule() {
  return [](const Instance& instance) {
    return FractionalAllocation::from_deterministic(mnw_tie(instance), instance.num_agents());
  };
}

AllocationRule make_fractional_mnw_rule() {
  return [](const Instance& instance) { return fractional_mnw(instance).shares; };
}

AllocationRule make_mnw_tie_allocate_all_rule() {
  return [](const Instance& instance) {
    return FractionalAllocation::from_deterministic(mnw_tie_allocate_all(instance),
                                                    instance.num_agents());
  };
}

namespace {

std::vector<int> bits_to_row(std::uint64_t bits, int num_goods) {
  std::vector<int> row(num_goods);
  for (int g = 0; g < num_goods; ++g) row[g] = (bits >> g) & 1 ? 1 : 0;
  return row;
}

class RuleCache {
 public:
  explicit RuleCache(const AllocationRule& rule) : rule_(rule) {}

  const FractionalAllocation& evaluate(const Instance& instance) {
    auto [it, inserted] = cache_.try_emplace(instance.valuations(), FractionalAllocation());
    if (inserted) it->second = rule_(instance);
    return it->second;
  }

 private:
  const AllocationRule& rule_;
  std::map<std::vector<std::vector<int>>, FractionalAllocation> cache_;
};

// True expected utility of `agent` when the rule, fed `reported`, returns
// `outcome`, while the agent actually values goods per `truthful`.
Rational true_utility(const Instance& truthful, const FractionalAllocation& outcome, int agent) {
  Rational total(0);
  for (int g = 0; g < truthful.num_goods(); ++g)
    if (truthful.likes(agent, g)) total += outcome.share(agent, g);
  return total;
}

std::optional<FuzzWitness> check_deviation(const Instance& truthful, const Instance& reported,
                                           const std::vector<int>& coalition,
                                           const FractionalAllocation& honest,
                                           const FractionalAllocation& deviated) {
  for (int agent : coalition) {
    if (!(true_utility(truthful, deviated, agent) > true_utility(truthful, honest, agent)))
      return std::nullopt;
  }
  FuzzWitness witness{truthful, reported, coalition, {}, {}};
  for (int i = 0; i < truthful.num_agents(); ++i) {
    witness.honest_utilities.push_back(true_utility(truthful, honest, i));
    witness.deviated_utilities.push_back(true_utility(truthful, deviated, i));
  }
  return witness;
}

FuzzReport fuzz_exhaustive(const AllocationRule& rule, int n, int m, int coalition_max,
                           long long budget) {
  if (n < 1 || m < 0 || n * m > 60)
    throw std::invalid_argument("exhaustive fuzz needs 1 <= n and n*m <= 60");

  // Total work: profiles x coalitions x joint misreports.
  const double row_options = std::pow(2.0, m);
  double deviations_per_profile = 0;
  for (std::uint32_t coalition = 1; coalition < (1u << n); ++coalition) {
    const int size = __builtin_popcount(coalition);
    if (size > coalition_max) continue;
    deviations_per_profile += std::pow(row_options, size);
  }
  if (std::pow(2.0, n * m) * deviations_per_profile > static_cast<double>(budget))
    throw std::invalid_argument("exhaustive fuzz exceeds the configured budget");

  RuleCache cache(rule);
  FuzzReport report;

  const std::uint64_t profile_count = 1ULL << (n * m);
  for (std::uint64_t profile_bits = 0; profile_bits < profile_count; ++profile_bits) {
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) rows.push_back(bits_to_row(profile_bits >> (i * m), m));
    const Instance truthful(rows);
    const FractionalAllocation& honest = cache.evaluate(truthful);
    ++report.profiles_checked;

    for (std::uint32_t coalition_bits = 1; coalition_bits < (1u << n); ++coalition_bits) {
      std::vector<int> coalition;
      for (int i = 0; i < n; ++i)
        if (coalition_bits & (1u << i)) coalition.push_back(i);
      if (static_cast<int>(coalition.size()) > coalition_max) continue;

      // Odometer over the coalition's joint misreports.
      const std::uint64_t per_member = 1ULL << m;
      std::vector<std::uint64_t> misreport(coalition.size(), 0);
      for (;;) {
        bool all_truthful = true;
        std::vector<std::vector<int>> reported_rows = rows;
        for (std::size_t c = 0; c < coalition.size(); ++c) {
          reported_rows[coalition[c]] = bits_to_row(misreport[c], m);
          if (reported_rows[coalition[c]] != rows[coalition[c]]) all_truthful = false;
        }
        if (!all_truthful) {
          const Instance reported(reported_rows);
          ++report.deviations_checked;
          if (auto witness = check_deviation(truthful, reported, coalition, honest,
                                             cache.evaluate(reported))) {
            report.witness = std::move(witness);
            return report;
          }
        }
        std::size_t c = 0;
        while (c < coalition.size()) {
          if (++misreport[c] < per_member) break;
          misreport[c] = 0;
          ++c;
        }
        if (c == coalition.size()) break;
      }
    }
  }
  return report;
}

FuzzReport fuzz_random(const AllocationRule& rule, int max_agents, int max_goods,
                       long long iterations, std::uint64_t seed, int coalition_max) {
  if (max_agents < 1 || max_goods < 1)
    throw std::invalid_argument("random fuzz needs at least one agent and one good");

  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  FuzzReport report;
  for (long long it = 0; it < iterations; ++it) {
    const int n = uniform(1, max_agents);
    const int m = uniform(1, max_goods);
    std::vector<std::vector<int>> rows(n, std::vector<int>(m));
    for (auto& row : rows)
      for (int& v : row) v = uniform(0, 1);
    const Instance truthful(rows);
    ++report.profiles_checked;

    const int size = std::min(uniform(1, coalition_max), n);
    std::vector<int> agents(n);
    for (int i = 0; i < n; ++i) agents[i] = i;
    std::shuffle(agents.begin(), agents.end(), rng);
    std::vector<int> coalition(agents.begin(), agents.begin() + size);
    std::sort(coalition.begin(), coalition.end());

    std::vector<std::vector<int>> reported_rows = rows;
    bool changed = false;
    for (int agent : coalition) {
      for (int& v : reported_rows[agent]) v = uniform(0, 1);
      if (reported_rows[agent] != rows[agent]) changed = true;
    }
    if (!changed) continue;

    const Instance reported(reported_rows);
    ++report.deviations_checked;
    if (auto witness =
            check_deviation(truthful, reported, coalition, rule(truthful), rule(reported))) {
      report.witness = std::move(witness);
      return report;
    }
  }
  return report;
}

}  // namespace

FuzzReport fuzz_strategyproofness(const AllocationRule& rule, int num_agents, int num_goods,
                                  const FuzzMode& mode, int coalition_max, long long budget) {
  if (coalition_max < 1) throw std::invalid_argument("coalition size bound must be at least 1");
  if (mode.kind == FuzzMode::Kind::Exhaustive)
    return fuzz_exhaustive(rule, num_agents, num_goods, coalition_max, budget);
  return fuzz_random(rule, num_agents, num_goods, mode.iterations, mode.seed, coalition_max);
}

}  // namespace fairdiv
