#pragma once

#include <string>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

/// JSON document formats. Rationals are always lowest-terms "p/q" strings
/// ("p" for integers), never floats; goods are keyed "g0".."g{m-1}";
/// unassigned goods serialize as explicit nulls. Serialization is canonical
/// and byte-stable, and round-trips exactly through the matching parser.
///
///   instance    {"agents": 2, "goods": 2, "valuations": [[1,0],[1,0]]}
///   allocation  {"agents": 2, "goods": 2, "assignment": {"g0": 0, "g1": null}}
///   fractional  {"agents": 2, "goods": 1, "shares": {"g0": ["1/2", "1/2"]}}
///   lottery     {"agents": 2, "goods": 1, "support":
///                 [{"probability": "1/2", "allocation": {"g0": 0}}, ...]}
///
/// Parsers throw std::invalid_argument with field context on malformed
/// documents, non-binary valuations, or dimension mismatches.

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

DeterministicAllocation parse_allocation(const std::string& text, const Instance& instance);
std::string serialize_allocation(const DeterministicAllocation& alloc, int num_agents);

FractionalAllocation parse_fractional(const std::string& text, const Instance& instance);
std::string serialize_fractional(const FractionalAllocation& frac);

Lottery parse_lottery(const std::string& text, const Instance& instance);
std::string serialize_lottery(const Lottery& lottery, int num_agents, int num_goods);

}  // namespace fairdiv
