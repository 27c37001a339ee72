#include <doctest.h>

#include <random>

#include "fairdiv/fractional_solver.hpp"
#include "fairdiv/oracle.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_SUITE("frac_solver") {

TEST_CASE("contested good is split evenly") {
  const Instance instance({{1}, {1}});
  const FractionalMnwResult result = fractional_mnw(instance);
  CHECK(result.shares.share(0, 0) == make_rational(1, 2));
  CHECK(result.shares.share(1, 0) == make_rational(1, 2));
  CHECK(result.utilities == UtilityVector{make_rational(1, 2), make_rational(1, 2)});
}

TEST_CASE("asymmetric interest resolves to whole goods") {
  const Instance instance({{1, 1}, {1, 0}});
  const FractionalMnwResult result = fractional_mnw(instance);
  CHECK(result.shares.share(0, 1) == 1);
  CHECK(result.shares.share(1, 0) == 1);
  CHECK(result.utilities == UtilityVector{Rational(1), Rational(1)});
}

TEST_CASE("three agents share two universally liked goods") {
  const Instance instance({{1, 1}, {1, 1}, {1, 1}});
  const FractionalMnwResult result = fractional_mnw(instance);
  for (int i = 0; i < 3; ++i) CHECK(result.utilities[i] == make_rational(2, 3));
}

TEST_CASE("an agent liking nothing gets a zero row and stays out of the product") {
  const Instance instance({{1, 1}, {0, 0}});
  const FractionalMnwResult result = fractional_mnw(instance);
  CHECK(result.utilities == UtilityVector{Rational(2), Rational(0)});
  CHECK(result.shares.share(1, 0) == 0);
  CHECK(result.shares.share(1, 1) == 0);

  const Instance all_zero({{0}, {0}});
  const FractionalMnwResult degenerate = fractional_mnw(all_zero);
  CHECK(degenerate.utilities == UtilityVector{Rational(0), Rational(0)});
  CHECK(verify_fractional_mnw(all_zero, degenerate.shares));
}

TEST_CASE("the certificate rejects a lopsided split") {
  const Instance instance({{1}, {1}});
  const FractionalAllocation lopsided({{Rational(1)}, {Rational(0)}});
  const auto violation = find_fractional_mnw_violation(instance, lopsided);
  REQUIRE(violation.has_value());
  CHECK(violation->kind == FractionalMnwViolation::Kind::ImprovingTransfer);
  CHECK(violation->good == 0);
  CHECK(violation->holder == 0);
  CHECK(violation->poorer == 1);
}

TEST_CASE("solver output is certified on the exhaustive range") {
  for_each_small_shape([&](int n, int m) {
    for_each_profile(n, m, [&](const Instance& instance) {
      const FractionalMnwResult result = fractional_mnw(instance);
      CHECK(verify_fractional_mnw(instance, result.shares));
      CHECK(utilities(instance, result.shares) == result.utilities);
    });
  });
}

TEST_CASE("utilities match the tight-set oracle exactly") {
  for_each_small_shape([&](int n, int m) {
    for_each_profile(n, m, [&](const Instance& instance) {
      const UtilityVector oracle = oracle_fractional_leximin(instance);
      const UtilityVector solved = fractional_mnw(instance).utilities;
      CHECK(oracle == solved);
      CHECK(leximin_compare(oracle, solved) == LeximinOrder::Equivalent);
    });
  });

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance instance = random_instance(rng, 5, 6);
    CHECK(oracle_fractional_leximin(instance) == fractional_mnw(instance).utilities);
  }
}

TEST_CASE("frozen utilities have denominators at most n") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance instance = random_instance(rng, 5, 6);
    for (const Rational& u : fractional_mnw(instance).utilities)
      CHECK(u.get_den() <= instance.num_agents());
  }
}

TEST_CASE("ex ante envy-freeness and Pareto optimality on the exhaustive range") {
  for_each_small_shape([&](int n, int m) {
    for_each_profile(n, m, [&](const Instance& instance) {
      const FractionalMnwResult result = fractional_mnw(instance);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Rational envied(0);
          for (int g = 0; g < m; ++g)
            if (instance.likes(i, g)) envied += result.shares.share(j, g);
          CHECK(envied <= result.utilities[i]);
        }
      }
      Rational total(0);
      for (const Rational& u : result.utilities) total += u;
      CHECK(total == instance.num_valued_goods());
    });
  });
}

TEST_CASE("expected-utility manipulation search comes back clean") {
  const AllocationRule rule = make_fractional_mnw_rule();
  for (int m = 1; m <= 3; ++m) {
    const FuzzReport report = fuzz_strategyproofness(rule, 2, m, FuzzMode::exhaustive(), 2);
    CHECK(report.clean());
  }
}

}  // TEST_SUITE
