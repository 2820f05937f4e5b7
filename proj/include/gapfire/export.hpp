#pragma once

#include <string>

#include <json.hpp>

#include "gapfire/explorer.hpp"

namespace gapfire {

// Machine form: {"root", "nodes":[{"id","state","final"}], "edges":[{"from","trigger","to"}]}.
nlohmann::json graph_to_json(const ReachabilityGraph& g);
nlohmann::json report_to_json(const ExploreReport& r);

// Nested {"state", "trigger"?, "truncated"?, "children":[...]}.
nlohmann::json tree_to_json(const MoveTree& tree);

nlohmann::json trajectory_to_json(const Trajectory& t);

// Graphviz digraphs: one node statement per node labelled with its state
// string, one edge per move labelled with its trigger.
std::string graph_to_dot(const ReachabilityGraph& g);
std::string tree_to_dot(const MoveTree& tree);
std::string trajectory_to_dot(const Trajectory& t);

}  // namespace gapfire
