#include "fairdiv/serialization.hpp"

#include <stdexcept>

#include <json.hpp>

namespace fairdiv {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw std::invalid_argument(std::string("malformed JSON document: ") + error.what());
  }
}

std::string good_key(int good) { return "g" + std::to_string(good); }

int require_int(const Json& document, const char* key) {
  if (!document.contains(key) || !document[key].is_number_integer())
    throw std::invalid_argument(std::string("document needs integer field \"") + key + "\"");
  return document[key].get<int>();
}

const Json& require_field(const Json& document, const char* key) {
  if (!document.contains(key))
    throw std::invalid_argument(std::string("document needs field \"") + key + "\"");
  return document[key];
}

// Pulls the m per-good values out of an object keyed g0..g{m-1}.
std::vector<Json> good_keyed_values(const Json& object, int num_goods, const char* what) {
  if (!object.is_object())
    throw std::invalid_argument(std::string(what) + " must be an object keyed by goods");
  if (static_cast<int>(object.size()) != num_goods)
    throw std::invalid_argument(std::string(what) + " must have exactly one key per good");
  std::vector<Json> values;
  values.reserve(num_goods);
  for (int g = 0; g < num_goods; ++g) {
    const std::string key = good_key(g);
    if (!object.contains(key))
      throw std::invalid_argument(std::string(what) + " is missing key \"" + key + "\"");
    values.push_back(object[key]);
  }
  return values;
}

void check_shape(const Json& document, const Instance& instance, const char* what) {
  const int agents = require_int(document, "agents");
  const int goods = require_int(document, "goods");
  if (agents != instance.num_agents() || goods != instance.num_goods())
    throw std::invalid_argument(std::string(what) + " dimensions (" + std::to_string(agents) +
                                " agents, " + std::to_string(goods) +
                                " goods) do not match the instance");
}

DeterministicAllocation assignment_from_json(const Json& assignment, const Instance& instance) {
  DeterministicAllocation alloc(instance.num_goods());
  const std::vector<Json> values =
      good_keyed_values(assignment, instance.num_goods(), "\"assignment\"");
  for (int g = 0; g < instance.num_goods(); ++g) {
    const Json& value = values[g];
    if (value.is_null()) continue;
    if (!value.is_number_integer())
      throw std::invalid_argument("assignment for \"" + good_key(g) +
                                  "\" must be an agent index or null");
    const int agent = value.get<int>();
    if (agent < 0 || agent >= instance.num_agents())
      throw std::invalid_argument("assignment for \"" + good_key(g) +
                                  "\" references agent " + std::to_string(agent) +
                                  " out of range");
    alloc.assign(g, agent);
  }
  return alloc;
}

Json assignment_to_json(const DeterministicAllocation& alloc) {
  Json assignment = Json::object();
  for (int g = 0; g < alloc.num_goods(); ++g) {
    if (alloc.is_assigned(g))
      assignment[good_key(g)] = alloc.assignee(g);
    else
      assignment[good_key(g)] = nullptr;
  }
  return assignment;
}

Rational rational_from_json(const Json& value, const std::string& context) {
  if (!value.is_string())
    throw std::invalid_argument(context + " must be a rational string such as \"1/2\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& error) {
    throw std::invalid_argument(context + ": " + error.what());
  }
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(const std::string& text) {
  const Json document = parse_document(text);
  const int agents = require_int(document, "agents");
  const int goods = require_int(document, "goods");
  if (agents < 1) throw std::invalid_argument("\"agents\" must be at least 1");
  if (goods < 0) throw std::invalid_argument("\"goods\" must be non-negative");
  const Json& matrix = require_field(document, "valuations");
  if (!matrix.is_array() || static_cast<int>(matrix.size()) != agents)
    throw std::invalid_argument("\"valuations\" must be an array with one row per agent");

  std::vector<std::vector<int>> rows;
  rows.reserve(agents);
  for (int i = 0; i < agents; ++i) {
    const Json& row = matrix[i];
    if (!row.is_array() || static_cast<int>(row.size()) != goods)
      throw std::invalid_argument("valuation row " + std::to_string(i) + " must have " +
                                  std::to_string(goods) + " entries");
    std::vector<int> values;
    values.reserve(goods);
    for (int g = 0; g < goods; ++g) {
      const Json& entry = row[g];
      if (!entry.is_number_integer() || (entry.get<int>() != 0 && entry.get<int>() != 1))
        throw std::invalid_argument("valuation entry (" + std::to_string(i) + ", " +
                                    std::to_string(g) + ") must be 0 or 1");
      values.push_back(entry.get<int>());
    }
    rows.push_back(std::move(values));
  }
  return Instance(std::move(rows));
}

std::string serialize_instance(const Instance& instance) {
  Json document;
  document["agents"] = instance.num_agents();
  document["goods"] = instance.num_goods();
  document["valuations"] = instance.valuations();
  return dump(document);
}

DeterministicAllocation parse_allocation(const std::string& text, const Instance& instance) {
  const Json document = parse_document(text);
  check_shape(document, instance, "allocation");
  return assignment_from_json(require_field(document, "assignment"), instance);
}

std::string serialize_allocation(const DeterministicAllocation& alloc, int num_agents) {
  Json document;
  document["agents"] = num_agents;
  document["goods"] = alloc.num_goods();
  document["assignment"] = assignment_to_json(alloc);
  return dump(document);
}

FractionalAllocation parse_fractional(const std::string& text, const Instance& instance) {
  const Json document = parse_document(text);
  check_shape(document, instance, "fractional allocation");
  const std::vector<Json> columns =
      good_keyed_values(require_field(document, "shares"), instance.num_goods(), "\"shares\"");

  std::vector<std::vector<Rational>> shares(
      instance.num_agents(), std::vector<Rational>(instance.num_goods(), Rational(0)));
  for (int g = 0; g < instance.num_goods(); ++g) {
    const Json& column = columns[g];
    if (!column.is_array() || static_cast<int>(column.size()) != instance.num_agents())
      throw std::invalid_argument("shares for \"" + good_key(g) + "\" must list one value per agent");
    for (int i = 0; i < instance.num_agents(); ++i)
      shares[i][g] = rational_from_json(column[i], "share (" + std::to_string(i) + ", " + good_key(g) + ")");
  }
  try {
    return FractionalAllocation(std::move(shares));
  } catch (const std::invalid_argument& error) {
    throw std::invalid_argument(std::string("invalid share matrix: ") + error.what());
  }
}

std::string serialize_fractional(const FractionalAllocation& frac) {
  Json document;
  document["agents"] = frac.num_agents();
  document["goods"] = frac.num_goods();
  Json shares = Json::object();
  for (int g = 0; g < frac.num_goods(); ++g) {
    Json column = Json::array();
    for (int i = 0; i < frac.num_agents(); ++i) column.push_back(to_string(frac.share(i, g)));
    shares[good_key(g)] = std::move(column);
  }
  document["shares"] = std::move(shares);
  return dump(document);
}

Lottery parse_lottery(const std::string& text, const Instance& instance) {
  const Json document = parse_document(text);
  check_shape(document, instance, "lottery");
  const Json& support = require_field(document, "support");
  if (!support.is_array() || support.empty())
    throw std::invalid_argument("\"support\" must be a non-empty array");

  std::vector<Lottery::Entry> entries;
  entries.reserve(support.size());
  for (const Json& item : support) {
    if (!item.is_object())
      throw std::invalid_argument("lottery support entries must be objects");
    Lottery::Entry entry;
    entry.probability = rational_from_json(require_field(item, "probability"), "probability");
    entry.allocation = assignment_from_json(require_field(item, "allocation"), instance);
    entries.push_back(std::move(entry));
  }
  try {
    return Lottery(std::move(entries));
  } catch (const std::invalid_argument& error) {
    throw std::invalid_argument(std::string("invalid lottery: ") + error.what());
  }
}

std::string serialize_lottery(const Lottery& lottery, int num_agents, int num_goods) {
  Json document;
  document["agents"] = num_agents;
  document["goods"] = num_goods;
  Json support = Json::array();
  for (const auto& entry : lottery.support()) {
    Json item;
    item["probability"] = to_string(entry.probability);
    item["allocation"] = assignment_to_json(entry.allocation);
    support.push_back(std::move(item));
  }
  document["support"] = std::move(support);
  return dump(document);
}

}  // namespace fairdiv
