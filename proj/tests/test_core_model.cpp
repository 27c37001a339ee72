#include <doctest.h>

#include <random>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_SUITE("core_model") {

TEST_CASE("instance validates its matrix") {
  CHECK_THROWS_AS(Instance({}), std::invalid_argument);
  CHECK_THROWS_AS(inst({{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(inst({{0, 1}, {0}}), std::invalid_argument);
  const Instance empty_goods({{}, {}});
  CHECK(empty_goods.num_agents() == 2);
  CHECK(empty_goods.num_goods() == 0);
}

TEST_CASE("utility counts liked goods in the bundle") {
  const Instance instance({{1, 0}, {1, 0}});
  CHECK(utility(instance, alloc_of({0, kUn}, 2), 0) == 1);
  CHECK(utility(instance, alloc_of({kUn, kUn}, 2), 0) == 0);
  CHECK(utility(inst({{1, 1, 1}}), alloc_of({0, 0, 0}, 1), 0) == 3);
  CHECK_THROWS_AS(utility(instance, alloc_of({0, kUn}, 2), 5), std::invalid_argument);
}

TEST_CASE("utility is additive over disjoint bundle splits") {
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance instance = random_instance(rng, 4, 6);
    const DeterministicAllocation alloc = random_allocation(rng, instance);
    std::uniform_int_distribution<int> agent_dist(0, instance.num_agents() - 1);
    const int agent = agent_dist(rng);

    DeterministicAllocation left(instance.num_goods()), right(instance.num_goods());
    std::uniform_int_distribution<int> side(0, 1);
    for (int g = 0; g < instance.num_goods(); ++g) {
      if (alloc.assignee(g) != agent) continue;
      (side(rng) ? left : right).assign(g, agent);
    }
    CHECK(utility(instance, alloc, agent) ==
          utility(instance, left, agent) + utility(instance, right, agent));
  }
}

TEST_CASE("leximin compares sorted profiles") {
  CHECK(leximin_compare(std::vector<int>{0, 1}, std::vector<int>{1, 0}) ==
        LeximinOrder::Equivalent);
  CHECK(leximin_compare(std::vector<int>{1, 1}, std::vector<int>{0, 2}) ==
        LeximinOrder::Dominates);
  CHECK(leximin_compare(std::vector<int>{1, 2, 2}, std::vector<int>{1, 1, 3}) ==
        LeximinOrder::Dominates);
  CHECK(leximin_compare(std::vector<int>{0, 2}, std::vector<int>{1, 1}) ==
        LeximinOrder::Dominated);
  CHECK_THROWS_AS(leximin_compare(std::vector<int>{1}, std::vector<int>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("leximin is a total preorder with equivalence = equal sorted profiles") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> value(0, 3);
  auto random_vector = [&] {
    std::vector<int> v(4);
    for (int& x : v) x = value(rng);
    return v;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_vector(), b = random_vector(), c = random_vector();
    const auto ab = leximin_compare(a, b);
    const auto ba = leximin_compare(b, a);
    // Antisymmetry of the comparison direction.
    CHECK((ab == LeximinOrder::Equivalent) == (ba == LeximinOrder::Equivalent));
    if (ab == LeximinOrder::Dominates) CHECK(ba == LeximinOrder::Dominated);

    if (ab == LeximinOrder::Equivalent) {
      auto sa = a, sb = b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      CHECK(sa == sb);
    }
    // Transitivity of weak dominance.
    if (ab != LeximinOrder::Dominated && leximin_compare(b, c) != LeximinOrder::Dominated)
      CHECK(leximin_compare(a, c) != LeximinOrder::Dominated);
  }
}

TEST_CASE("lex_vector_compare is plain lexicographic order") {
  CHECK(lex_vector_compare(std::vector<int>{2, 1}, std::vector<int>{1, 2}) ==
        std::strong_ordering::greater);
  CHECK(lex_vector_compare(std::vector<int>{1, 1}, std::vector<int>{1, 1}) ==
        std::strong_ordering::equal);
  CHECK(lex_vector_compare(std::vector<int>{1, 0, 3}, std::vector<int>{1, 1, 0}) ==
        std::strong_ordering::less);
  CHECK_THROWS_AS(lex_vector_compare(std::vector<int>{}, std::vector<int>{1}),
                  std::invalid_argument);
}

TEST_CASE("induced_fractional is the expectation of the support") {
  const Instance one_good({{1}, {1}});

  const Lottery point({{Rational(1), alloc_of({0}, 2)}});
  const FractionalAllocation point_marginals = induced_fractional(point, one_good);
  CHECK(point_marginals.share(0, 0) == 1);
  CHECK(point_marginals.share(1, 0) == 0);

  const Lottery split({{make_rational(1, 2), alloc_of({0}, 2)},
                       {make_rational(1, 2), alloc_of({1}, 2)}});
  const FractionalAllocation split_marginals = induced_fractional(split, one_good);
  CHECK(split_marginals.share(0, 0) == make_rational(1, 2));
  CHECK(split_marginals.share(1, 0) == make_rational(1, 2));

  const Instance three({{1, 1}, {1, 1}, {1, 1}});
  const Lottery thirds({{make_rational(1, 3), alloc_of({0, 1}, 3)},
                        {make_rational(1, 3), alloc_of({1, 2}, 3)},
                        {make_rational(1, 3), alloc_of({2, 0}, 3)}});
  const FractionalAllocation mean = induced_fractional(thirds, three);
  for (int i = 0; i < 3; ++i)
    for (int g = 0; g < 2; ++g) CHECK(mean.share(i, g) == make_rational(1, 3));
}

TEST_CASE("expected utility under a lottery equals the fractional utility") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance instance = random_instance(rng, 3, 4);
    // Random lottery with denominators 8.
    std::vector<Lottery::Entry> entries;
    int remaining = 8;
    while (remaining > 0) {
      std::uniform_int_distribution<int> mass(1, remaining);
      const int part = mass(rng);
      entries.push_back({make_rational(part, 8), random_allocation(rng, instance)});
      remaining -= part;
    }
    const Lottery lottery(std::move(entries));
    const FractionalAllocation induced = induced_fractional(lottery, instance);
    for (int i = 0; i < instance.num_agents(); ++i) {
      Rational expected(0);
      for (const auto& entry : lottery.support())
        expected += entry.probability * utility(instance, entry.allocation, i);
      CHECK(expected == utility(instance, induced, i));
    }
  }
}

TEST_CASE("lottery merges duplicate allocations and checks total mass") {
  const Lottery merged({{make_rational(1, 2), alloc_of({0}, 2)},
                        {make_rational(1, 2), alloc_of({0}, 2)}});
  CHECK(merged.size() == 1);
  CHECK(merged.support()[0].probability == 1);

  CHECK_THROWS_AS(Lottery({{make_rational(1, 2), alloc_of({0}, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(Lottery({{Rational(0), alloc_of({0}, 2)},
                           {Rational(1), alloc_of({1}, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("fractional allocation rejects bad share matrices") {
  CHECK_THROWS_AS(FractionalAllocation({{Rational(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(FractionalAllocation({{make_rational(3, 4)}, {make_rational(1, 2)}}),
                  std::invalid_argument);
  const FractionalAllocation ok({{make_rational(1, 2)}, {make_rational(1, 2)}});
  CHECK(ok.column_sum(0) == 1);
  CHECK_FALSE(ok.is_integral());
}

}  // TEST_SUITE
