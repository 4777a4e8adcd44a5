#pragma once

// JSON and DOT renderings plus parsers for intervals and module sums given on
// the command line ("2,5", "[2,5]", "2-5"; sums separated by '+', ';' or spaces).

#include "dexact/beyond_type_a.hpp"
#include "dexact/checks.hpp"
#include "dexact/exact_structures.hpp"
#include "dexact/mar.hpp"

#include <json.hpp>

#include <string>

namespace dexact {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

Interval parse_interval(const std::string& text);
ModuleSum parse_module(const std::string& text);

Json to_json(const TypeAQuiver& q);
Json to_json(const Interval& m);
Json to_json(const ModuleSum& m);
Json to_json(const SesClass& s);
Json to_json(const PairClass& c);
Json to_json(const ResolutionE& r);
Json to_json(const AuslanderReport& r);
Json to_json(const CriterionResult& r);
Json to_json(const ExampleReport& r);

Json grid_json(const ArGrid& g);
Json mar_json(const ConflictGraph& g, const std::vector<ModuleSum>& mars);
Json poset_json(const MarPoset& p);
Json flip_graph_json(const FlipGraph& f);

/// Every vertex carries pos="x,y!" so neato -n reproduces the grid picture.
std::string grid_dot(const ArGrid& g);
std::string hasse_dot(const MarPoset& p);
std::string flip_graph_dot(const FlipGraph& f);

std::string ses_text(const SesClass& s);
std::string grid_text(const ArGrid& g);

} // namespace dexact
