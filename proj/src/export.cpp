#include "gapfire/export.hpp"

#include <sstream>

namespace gapfire {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

nlohmann::json graph_to_json(const ReachabilityGraph& g) {
  nlohmann::json out;
  out["root"] = to_string(g.root());
  auto& nodes = out["nodes"] = nlohmann::json::array();
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    nodes.push_back({{"id", id}, {"state", to_string(g.nodes[id])}, {"final", is_final(g.nodes[id])}});
  }
  auto& edges = out["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from}, {"trigger", e.trigger}, {"to", e.to}});
  }
  return out;
}

nlohmann::json report_to_json(const ExploreReport& r) {
  nlohmann::json out;
  out["node_count"] = r.node_count;
  out["edge_count"] = r.edge_count;
  auto& finals = out["final_states"] = nlohmann::json::array();
  for (const auto& s : r.final_states) finals.push_back(to_string(s));
  out["max_trajectory_length"] = r.max_trajectory_length
                                     ? nlohmann::json(*r.max_trajectory_length)
                                     : nlohmann::json(nullptr);
  out["is_acyclic"] = r.is_acyclic;
  auto& violations = out["invariant_violations"] = nlohmann::json::array();
  for (const auto& v : r.invariant_violations) {
    violations.push_back({{"kind", to_string(v.kind)}, {"node", v.step}, {"detail", v.detail}});
  }
  return out;
}

nlohmann::json tree_to_json(const MoveTree& tree) {
  // Children always have larger ids than their parent, so build bottom-up.
  std::vector<nlohmann::json> built(tree.size());
  for (std::size_t id = tree.size(); id-- > 0;) {
    const auto& n = tree.nodes[id];
    nlohmann::json j;
    j["state"] = to_string(n.state);
    if (n.via) j["trigger"] = *n.via;
    if (n.truncated) j["truncated"] = true;
    auto& children = j["children"] = nlohmann::json::array();
    for (std::size_t c : n.children) children.push_back(std::move(built[c]));
    built[id] = std::move(j);
  }
  return std::move(built[0]);
}

nlohmann::json trajectory_to_json(const Trajectory& t) {
  nlohmann::json out;
  out["initial"] = to_string(t.initial());
  auto& steps = out["steps"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    nlohmann::json step{{"step", i},
                        {"state", to_string(t.states[i])},
                        {"norm", norm(t.states[i])},
                        {"final", is_final(t.states[i])}};
    step["trigger"] = i == 0 ? nlohmann::json(nullptr) : nlohmann::json(t.triggers[i - 1]);
    steps.push_back(std::move(step));
  }
  out["final"] = is_final(t.last());
  return out;
}

std::string graph_to_dot(const ReachabilityGraph& g) {
  std::ostringstream os;
  os << "digraph reachability {\n";
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    os << "  n" << id << " [label=" << quoted(to_string(g.nodes[id]));
    if (is_final(g.nodes[id])) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.trigger << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string tree_to_dot(const MoveTree& tree) {
  std::ostringstream os;
  os << "digraph move_tree {\n";
  for (std::size_t id = 0; id < tree.size(); ++id) {
    const auto& n = tree.nodes[id];
    os << "  n" << id << " [label=" << quoted(to_string(n.state));
    if (n.truncated) os << ", style=dashed";
    os << "];\n";
  }
  for (std::size_t id = 0; id < tree.size(); ++id) {
    for (std::size_t c : tree.nodes[id].children) {
      os << "  n" << id << " -> n" << c << " [label=\"" << *tree.nodes[c].via << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string trajectory_to_dot(const Trajectory& t) {
  std::ostringstream os;
  os << "digraph trajectory {\n";
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    os << "  s" << i << " [label=" << quoted(to_string(t.states[i])) << "];\n";
  }
  for (std::size_t i = 0; i < t.triggers.size(); ++i) {
    os << "  s" << i << " -> s" << i + 1 << " [label=\"" << t.triggers[i] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gapfire
