#include <doctest.h>

#include <random>

#include "fairdiv/allocation_graph.hpp"
#include "fairdiv/properties.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_SUITE("graph_ops") {

TEST_CASE("build_graph derives edges from bundles and liked sets") {
  // Agent 0 likes both goods, agent 1 only g0; holdings are swapped.
  const Instance instance({{1, 1}, {1, 0}});
  const AllocationGraph graph = build_graph(instance, alloc_of({1, 0}, 2));
  CHECK(graph.adjacency[0] == std::vector<int>{1});
  CHECK(graph.adjacency[1].empty());

  const AllocationGraph empty = build_graph(instance, alloc_of({kUn, kUn}, 2));
  CHECK(empty.adjacency[0].empty());
  CHECK(empty.adjacency[1].empty());

  const Instance single({{1}, {1}});
  const AllocationGraph one_edge = build_graph(single, alloc_of({1}, 2));
  CHECK(one_edge.adjacency[0] == std::vector<int>{1});
  CHECK(one_edge.adjacency[1].empty());
}

TEST_CASE("find_path does breadth-first search with index tie-breaking") {
  AllocationGraph graph;
  graph.adjacency = {{1}, {}, {}};
  auto path = find_path(graph, 0, [](int v) { return v == 1; });
  REQUIRE(path.has_value());
  CHECK(*path == std::vector<int>{0, 1});

  CHECK_FALSE(find_path(graph, 0, [](int v) { return v == 2; }).has_value());

  // Singleton path when the start satisfies the predicate.
  auto self = find_path(graph, 2, [](int v) { return v == 2; });
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{2});

  // Diamond with two targets at the same depth: lowest index wins.
  AllocationGraph diamond;
  diamond.adjacency = {{1, 2}, {3}, {3}, {}};
  auto tie = find_path(diamond, 0, [](int v) { return v == 1 || v == 2; });
  REQUIRE(tie.has_value());
  CHECK(*tie == std::vector<int>{0, 1});

  // A reachable shallow target beats a deeper one.
  AllocationGraph chain;
  chain.adjacency = {{1, 3}, {2}, {}, {}};
  auto shortest = find_path(chain, 0, [](int v) { return v == 2 || v == 3; });
  REQUIRE(shortest.has_value());
  CHECK(*shortest == std::vector<int>{0, 3});
}

TEST_CASE("pass_back shifts one utility unit from path end to start") {
  const Instance instance({{1, 1}, {1, 1}});
  const DeterministicAllocation alloc = alloc_of({0, 0}, 2);
  const DeterministicAllocation after = pass_back(instance, alloc, {1, 0});
  CHECK(utilities(instance, after) == std::vector<int>{1, 1});
  CHECK(after.assignee(0) == 1);  // lowest-indexed eligible good moves
  CHECK(after.assignee(1) == 0);

  CHECK(pass_back(instance, alloc, {0}) == alloc);
}

TEST_CASE("pass_back along a three-agent chain leaves the middle unchanged") {
  // 0 likes g0; 1 likes g0,g1; 2 likes g1,g2. Chain 0 -> 1 -> 2.
  const Instance instance({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  const DeterministicAllocation alloc = alloc_of({1, 2, 2}, 3);
  REQUIRE(is_pareto_optimal(instance, alloc));
  const std::vector<int> before = utilities(instance, alloc);
  const DeterministicAllocation after = pass_back(instance, alloc, {0, 1, 2});
  const std::vector<int> now = utilities(instance, after);
  CHECK(now[0] == before[0] + 1);
  CHECK(now[1] == before[1]);
  CHECK(now[2] == before[2] - 1);
}

TEST_CASE("pass_back rejects corrupted inputs") {
  const Instance instance({{1, 1}, {1, 1}});
  // Not Pareto optimal: valued good unassigned.
  CHECK_THROWS_AS(pass_back(instance, alloc_of({0, kUn}, 2), {1, 0}), std::logic_error);
  // No such edge: agent 1 holds nothing.
  CHECK_THROWS_AS(pass_back(instance, alloc_of({0, 0}, 2), {0, 1}), std::logic_error);
}

TEST_CASE("pass_back preserves the allocated multiset and moves only endpoints") {
  std::mt19937_64 rng(4242);
  int exercised = 0;
  while (exercised < 200) {
    const Instance instance = random_instance(rng, 4, 5);
    // A Pareto optimal allocation: every valued good to a random liker.
    DeterministicAllocation alloc(instance.num_goods());
    for (int g = 0; g < instance.num_goods(); ++g) {
      const std::vector<int> likers = instance.likers(g);
      if (likers.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, likers.size() - 1);
      alloc.assign(g, likers[pick(rng)]);
    }
    const AllocationGraph graph = build_graph(instance, alloc);
    std::uniform_int_distribution<int> agent(0, instance.num_agents() - 1);
    const int start = agent(rng);
    const int goal = agent(rng);
    auto path = find_path(graph, start, [&](int v) { return v == goal; });
    if (!path || path->size() < 2) continue;

    const DeterministicAllocation after = pass_back(instance, alloc, *path);
    std::vector<int> held_before, held_after;
    for (int g = 0; g < instance.num_goods(); ++g) {
      if (alloc.is_assigned(g)) held_before.push_back(g);
      if (after.is_assigned(g)) held_after.push_back(g);
    }
    CHECK(held_before == held_after);

    // The rebuilt graph of the result matches a from-scratch edge derivation.
    const AllocationGraph rebuilt = build_graph(instance, after);
    for (int i = 0; i < instance.num_agents(); ++i) {
      std::vector<int> expected;
      for (int j = 0; j < instance.num_agents(); ++j) {
        if (i == j) continue;
        for (int g = 0; g < instance.num_goods(); ++g) {
          if (after.assignee(g) == j && instance.likes(i, g)) {
            expected.push_back(j);
            break;
          }
        }
      }
      CHECK(rebuilt.adjacency[i] == expected);
    }

    const std::vector<int> before_u = utilities(instance, alloc);
    const std::vector<int> after_u = utilities(instance, after);
    for (int i = 0; i < instance.num_agents(); ++i) {
      if (i == start)
        CHECK(after_u[i] == before_u[i] + 1);
      else if (i == goal)
        CHECK(after_u[i] == before_u[i] - 1);
      else
        CHECK(after_u[i] == before_u[i]);
    }
    ++exercised;
  }
}

TEST_CASE("reachable_set closes over lower-utility agents and graph edges") {
  const Instance flat({{1}, {0}});
  CHECK(reachable_set(flat, alloc_of({kUn}, 2), 0) == std::set<int>{0});

  // u = (0, 2) with an edge 0 -> 1.
  const Instance instance({{0, 1, 0}, {0, 1, 1}});
  const DeterministicAllocation alloc = alloc_of({kUn, 1, 1}, 2);
  REQUIRE(utilities(instance, alloc) == std::vector<int>{0, 2});
  CHECK(reachable_set(instance, alloc, 1) == std::set<int>{0, 1});

  // Fully connected: everyone holds something everyone likes.
  const Instance all({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(reachable_set(all, alloc_of({0, 1, 2}, 3), 0) == std::set<int>{0, 1, 2});
}

TEST_CASE("reachable sets have no outgoing edges") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance instance = random_instance(rng, 4, 4);
    DeterministicAllocation alloc(instance.num_goods());
    for (int g = 0; g < instance.num_goods(); ++g) {
      const std::vector<int> likers = instance.likers(g);
      if (likers.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, likers.size() - 1);
      alloc.assign(g, likers[pick(rng)]);
    }
    const AllocationGraph graph = build_graph(instance, alloc);
    for (int i = 0; i < instance.num_agents(); ++i) {
      const std::set<int> closure = reachable_set(instance, alloc, i);
      for (int member : closure)
        for (int neighbor : graph.adjacency[member]) CHECK(closure.count(neighbor) == 1);
    }
  }
}

}  // TEST_SUITE
