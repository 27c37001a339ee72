#include "fairdiv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdiv/deterministic_solver.hpp"
#include "fairdiv/fractional_solver.hpp"
#include "fairdiv/lottery.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/properties.hpp"
#include "fairdiv/serialization.hpp"

namespace fairdiv {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

Json rational_strings(const UtilityVector& values) {
  Json array = Json::array();
  for (const Rational& value : values) array.push_back(to_string(value));
  return array;
}

Json assignment_json(const DeterministicAllocation& alloc, int num_agents) {
  return Json::parse(serialize_allocation(alloc, num_agents))["assignment"];
}

void emit(std::ostream& out, const Json& document) { out << document.dump(2) << "\n"; }

int run_solve(const std::string& instance_path, const std::string& rule, std::ostream& out) {
  const Instance instance = parse_instance(read_file(instance_path));
  Json document;
  document["rule"] = rule;
  document["agents"] = instance.num_agents();
  document["goods"] = instance.num_goods();
  if (rule == "mnw-tie") {
    const DeterministicAllocation alloc = mnw_tie(instance);
    document["assignment"] = assignment_json(alloc, instance.num_agents());
    document["utilities"] = rational_strings(to_utility_vector(utilities(instance, alloc)));
  } else {
    const FractionalMnwResult result = fractional_mnw(instance);
    document["shares"] = Json::parse(serialize_fractional(result.shares))["shares"];
    document["utilities"] = rational_strings(result.utilities);
  }
  emit(out, document);
  return 0;
}

int run_lottery(const std::string& instance_path, bool draw, std::uint64_t seed,
                std::ostream& out) {
  const Instance instance = parse_instance(read_file(instance_path));
  const FractionalMnwResult result = fractional_mnw(instance);
  const Lottery lottery = decompose(instance, result.shares);
  Json document = Json::parse(
      serialize_lottery(lottery, instance.num_agents(), instance.num_goods()));
  if (draw) {
    document["seed"] = seed;
    document["draw"] = assignment_json(sample(lottery, seed), instance.num_agents());
  }
  emit(out, document);
  return 0;
}

int run_check(const std::string& instance_path, const std::string& document_path,
              const std::string& property, std::ostream& out) {
  const Instance instance = parse_instance(read_file(instance_path));
  const std::string document_text = read_file(document_path);

  bool holds = false;
  Json witness;

  auto envy_witness = [&](const std::optional<EnvyWitness>& violation) {
    holds = !violation.has_value();
    if (violation) witness = Json{{"agent", violation->agent}, {"envies", violation->other}};
  };

  if (property == "frac-mnw") {
    const FractionalAllocation frac = parse_fractional(document_text, instance);
    const auto violation = find_fractional_mnw_violation(instance, frac);
    holds = !violation.has_value();
    if (violation) {
      witness = Json{{"good", violation->good},
                     {"holder", violation->holder},
                     {"poorer", violation->poorer},
                     {"description", violation->describe()}};
    }
  } else {
    const DeterministicAllocation alloc = parse_allocation(document_text, instance);
    if (property == "ef") {
      envy_witness(find_envy(instance, alloc));
    } else if (property == "ef1") {
      envy_witness(find_ef1_violation(instance, alloc));
    } else if (property == "efx") {
      envy_witness(find_efx_violation(instance, alloc));
    } else if (property == "po") {
      const auto violation = find_pareto_violation(instance, alloc);
      holds = !violation.has_value();
      if (violation) witness = Json{{"good", *violation}};
    } else if (property == "minimally-complete") {
      holds = is_minimally_complete(instance, alloc);
    } else if (property == "mnw") {
      const auto violation = find_mnw_violation(instance, alloc);
      holds = !violation.has_value();
      if (violation) {
        if (violation->pareto_violation_good)
          witness = Json{{"pareto_violation_good", *violation->pareto_violation_good}};
        else
          witness = Json{{"improving_path", *violation->improving_path}};
      }
    } else {  // rounded: against the canonical fractional MNW utilities
      const FractionalMnwResult result = fractional_mnw(instance);
      holds = check_rounded(instance, result.shares, alloc);
      if (!holds) witness = Json{{"fractional_utilities", rational_strings(result.utilities)}};
    }
  }

  Json document;
  document["property"] = property;
  document["holds"] = holds;
  document["witness"] = holds ? Json(nullptr) : witness;
  emit(out, document);
  return holds ? 0 : 1;
}

int run_fuzz(const std::string& rule_name, int agents, int goods, bool exhaustive,
             long long iterations, std::uint64_t seed, int coalition_max, std::ostream& out) {
  const AllocationRule rule =
      rule_name == "mnw-tie" ? make_mnw_tie_rule() : make_fractional_mnw_rule();
  const FuzzMode mode =
      exhaustive ? FuzzMode::exhaustive() : FuzzMode::random(iterations, seed);
  const FuzzReport report = fuzz_strategyproofness(rule, agents, goods, mode, coalition_max);

  Json document;
  document["rule"] = rule_name;
  document["agents"] = agents;
  document["goods"] = goods;
  document["mode"] = exhaustive ? "exhaustive" : "random";
  if (!exhaustive) {
    document["iterations"] = iterations;
    document["seed"] = seed;
  }
  document["coalition_max"] = coalition_max;
  document["profiles_checked"] = report.profiles_checked;
  document["deviations_checked"] = report.deviations_checked;
  if (report.witness) {
    const FuzzWitness& w = *report.witness;
    document["witness"] = Json{{"truthful", w.truthful.valuations()},
                               {"reported", w.reported.valuations()},
                               {"coalition", w.coalition},
                               {"honest_utilities", rational_strings(w.honest_utilities)},
                               {"deviated_utilities", rational_strings(w.deviated_utilities)}};
  } else {
    document["witness"] = nullptr;
  }
  emit(out, document);
  return report.clean() ? 0 : 1;
}

int run_oracle(const std::string& instance_path, std::ostream& out) {
  const Instance instance = parse_instance(read_file(instance_path));
  const auto mnw_set = brute_mnw_set(instance);
  const auto leximin_set = brute_leximin_set(instance);

  std::vector<int> profile = utilities(instance, mnw_set.front());
  std::sort(profile.begin(), profile.end());

  Json document;
  document["agents"] = instance.num_agents();
  document["goods"] = instance.num_goods();
  Json mnw_array = Json::array();
  for (const auto& alloc : mnw_set)
    mnw_array.push_back(assignment_json(alloc, instance.num_agents()));
  Json leximin_array = Json::array();
  for (const auto& alloc : leximin_set)
    leximin_array.push_back(assignment_json(alloc, instance.num_agents()));
  document["mnw_set"] = std::move(mnw_array);
  document["leximin_set"] = std::move(leximin_array);
  document["profile"] = rational_strings(to_utility_vector(profile));
  emit(out, document);
  return 0;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers and checkers for fair allocation of indivisible goods "
               "under binary additive valuations"};
  app.require_subcommand(1);

  std::string instance_path, document_path, rule, property;
  bool draw = false;
  bool exhaustive = false;
  long long iterations = 0;
  std::uint64_t seed = 0;
  int agents = 0, goods = 0, coalition_max = 1;

  CLI::App* solve = app.add_subcommand("solve", "Compute an allocation for an instance");
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("--rule", rule, "allocation rule")
      ->required()
      ->check(CLI::IsMember({"mnw-tie", "frac-mnw"}));

  CLI::App* lottery = app.add_subcommand(
      "lottery", "Decompose the fractional MNW allocation into a lottery over MNW allocations");
  lottery->add_option("instance", instance_path, "instance JSON file")->required();
  lottery->add_flag("--sample", draw, "also draw one allocation");
  lottery->add_option("--seed", seed, "seed for --sample");

  CLI::App* check = app.add_subcommand("check", "Verify a property of an allocation");
  check->add_option("instance", instance_path, "instance JSON file")->required();
  check->add_option("document", document_path, "allocation (or share matrix) JSON file")
      ->required();
  check->add_option("--property", property, "property to verify")
      ->required()
      ->check(CLI::IsMember(
          {"ef", "ef1", "efx", "po", "mnw", "minimally-complete", "rounded", "frac-mnw"}));

  CLI::App* fuzz = app.add_subcommand("fuzz", "Search for strategyproofness violations");
  fuzz->add_option("--rule", rule, "allocation rule")
      ->required()
      ->check(CLI::IsMember({"mnw-tie", "frac-mnw"}));
  fuzz->add_option("--agents", agents, "number of agents")->required();
  fuzz->add_option("--goods", goods, "number of goods")->required();
  CLI::Option* exhaustive_option = fuzz->add_flag("--exhaustive", exhaustive,
                                                  "check every profile and joint misreport");
  fuzz->add_option("--random", iterations, "number of random trials")
      ->excludes(exhaustive_option);
  fuzz->add_option("--seed", seed, "seed for --random");
  fuzz->add_option("--coalition-max", coalition_max, "largest coalition size (default 1)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force MNW and leximin sets of a small instance");
  oracle->add_option("instance", instance_path, "instance JSON file")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(instance_path, rule, out);
    if (lottery->parsed()) return run_lottery(instance_path, draw, seed, out);
    if (check->parsed()) return run_check(instance_path, document_path, property, out);
    if (fuzz->parsed()) {
      if (!exhaustive && iterations <= 0)
        throw std::invalid_argument("fuzz needs either --exhaustive or --random K with K > 0");
      return run_fuzz(rule, agents, goods, exhaustive, iterations, seed, coalition_max, out);
    }
    if (oracle->parsed()) return run_oracle(instance_path, out);
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::logic_error& error) {
    err << "internal error: " << error.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace fairdiv
