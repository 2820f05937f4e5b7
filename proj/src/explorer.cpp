#include "gapfire/explorer.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapfire/errors.hpp"

namespace gapfire {

Trajectory Trajectory::replay(const GapState& initial, const std::vector<Trigger>& triggers) {
  Trajectory t;
  t.states.reserve(triggers.size() + 1);
  t.states.push_back(initial);
  for (Trigger trig : triggers) t.states.push_back(apply_move(t.states.back(), trig));
  t.triggers = triggers;
  return t;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IllegalStep: return "illegal-step";
    case ViolationKind::NormLaw: return "norm-law";
    case ViolationKind::EntryStepLaw: return "entry-step-law";
    case ViolationKind::WindowBound: return "window-bound";
    case ViolationKind::Alphabet: return "alphabet";
    case ViolationKind::FinalMismatch: return "final-mismatch";
  }
  return "unknown";
}

namespace {

// Law checks shared by trajectories and graph edges. The pair must already
// be known to be a legal move.
void check_move_laws(const GapState& prev, const GapState& next, Trigger t, std::size_t step,
                     std::vector<Violation>& out) {
  const int delta = classify_norm_step(prev, next, t);
  const int predicted = predicted_norm_delta(prev, t);
  if (delta < 0 || delta > 2 || delta != predicted || (delta == 2) != is_all_zero(prev)) {
    out.push_back({ViolationKind::NormLaw, step,
                   to_string(prev) + " -> " + to_string(next) + " has norm delta " +
                       std::to_string(delta)});
  }
  if (!entry_step_law(prev, next)) {
    out.push_back({ViolationKind::EntryStepLaw, step, to_string(prev) + " -> " + to_string(next)});
  }
}

void check_flat_state(const GapState& s, std::size_t step, std::vector<Violation>& out) {
  if (!check_window_bound(s)) {
    out.push_back({ViolationKind::WindowBound, step, to_string(s)});
  }
  if (!in_small_alphabet(s)) {
    out.push_back({ViolationKind::Alphabet, step, to_string(s)});
  }
}

}  // namespace

std::vector<Violation> validate_trajectory(const Trajectory& t, bool flat_origin) {
  if (t.states.empty()) throw std::invalid_argument("trajectory has no states");
  if (t.states.size() != t.triggers.size() + 1) {
    throw std::invalid_argument("trajectory has " + std::to_string(t.states.size()) +
                                " states for " + std::to_string(t.triggers.size()) +
                                " triggers");
  }
  const std::size_t len = t.states.front().size();
  for (const auto& s : t.states) {
    if (s.size() != len) throw std::invalid_argument("trajectory states differ in length");
  }

  std::vector<Violation> out;
  if (flat_origin) check_flat_state(t.states[0], 0, out);
  for (std::size_t step = 1; step < t.states.size(); ++step) {
    const auto& prev = t.states[step - 1];
    const auto& next = t.states[step];
    const Trigger trig = t.triggers[step - 1];

    bool legal = trig >= 1 && trig <= len && prev.gap(trig) == 0;
    if (legal) legal = apply_move(prev, trig) == next;
    if (legal) {
      check_move_laws(prev, next, trig, step, out);
    } else {
      out.push_back({ViolationKind::IllegalStep, step,
                     to_string(prev) + " -> " + to_string(next) + " is not trigger " +
                         std::to_string(trig)});
      if (!entry_step_law(prev, next)) {
        out.push_back({ViolationKind::EntryStepLaw, step, to_string(prev) + " -> " + to_string(next)});
      }
    }
    if (flat_origin) check_flat_state(next, step, out);
  }
  return out;
}

std::optional<std::size_t> classify_final(const GapState& s) {
  if (!is_final(s)) {
    throw std::invalid_argument("state " + to_string(s) + " is not final");
  }
  const auto gaps = s.values();
  std::optional<std::size_t> two;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] == 1) continue;
    if (gaps[i] != 2 || two) return std::nullopt;
    two = i;
  }
  return two;
}

GapState clusteron_final(std::size_t length, std::size_t k) {
  if (k >= length) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside 0.." +
                                std::to_string(length) + "-1");
  }
  std::vector<Gap> gaps(length, 1);
  gaps[k] = 2;
  return GapState(std::move(gaps));
}

// --- move tree --------------------------------------------------------------

std::vector<GapState> MoveTree::leaves() const {
  std::vector<GapState> out;
  for (const auto& n : nodes) {
    if (n.children.empty()) out.push_back(n.state);
  }
  return out;
}

std::size_t MoveTree::truncated_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.truncated; }));
}

std::vector<Trigger> MoveTree::path_to(std::size_t id) const {
  std::vector<Trigger> path;
  for (auto cur = std::optional<std::size_t>(id); nodes.at(*cur).parent;
       cur = nodes[*cur].parent) {
    path.push_back(*nodes[*cur].via);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

MoveTree build_move_tree(const GapState& initial, std::size_t depth_limit, std::size_t node_cap) {
  MoveTree tree;
  tree.nodes.push_back({initial, 0, std::nullopt, std::nullopt, {}, false});

  // Explicit stack of (node, remaining triggers) keeps preorder without
  // recursion; trajectories can be long for non-flat inputs.
  struct Frame {
    std::size_t node;
    std::vector<Trigger> pending;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto open = [&](std::size_t id) {
    auto& n = tree.nodes[id];
    auto triggers = legal_triggers(n.state);
    if (!triggers.empty() && n.depth >= depth_limit) {
      n.truncated = true;
      return;
    }
    stack.push_back({id, std::move(triggers)});
  };
  open(0);

  while (!stack.empty()) {
    auto& frame = stack.back();
    if (frame.next == frame.pending.size()) {
      stack.pop_back();
      continue;
    }
    const Trigger trig = frame.pending[frame.next++];
    const std::size_t parent = frame.node;
    if (tree.nodes.size() >= node_cap) {
      throw ResourceLimit(node_cap, "move tree exceeds node cap " + std::to_string(node_cap));
    }
    const std::size_t id = tree.nodes.size();
    tree.nodes.push_back({apply_move(tree.nodes[parent].state, trig),
                          tree.nodes[parent].depth + 1, parent, trig, {}, false});
    tree.nodes[parent].children.push_back(id);
    open(id);
  }
  return tree;
}

// --- reachability graph -----------------------------------------------------

std::optional<std::size_t> ReachabilityGraph::find(const GapState& s) const {
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// Iterative three-colour DFS over everything reachable from node 0. A grey
// successor is a back edge, i.e. a cycle. Otherwise every successor is black
// by the time a node finishes, so its height (longest path starting there)
// can be settled on the spot.
std::optional<std::size_t> longest_path_from_root(const ReachabilityGraph& g) {
  enum : unsigned char { kWhite, kGrey, kBlack };
  const std::size_t n = g.nodes.size();
  std::vector<unsigned char> colour(n, kWhite);
  std::vector<std::size_t> height(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next edge

  colour[0] = kGrey;
  stack.emplace_back(0, g.out_begin[0]);
  while (!stack.empty()) {
    auto& [node, e] = stack.back();
    if (e == g.out_begin[node + 1]) {
      for (std::size_t k = g.out_begin[node]; k < g.out_begin[node + 1]; ++k) {
        height[node] = std::max(height[node], height[g.edges[k].to] + 1);
      }
      colour[node] = kBlack;
      stack.pop_back();
      continue;
    }
    const std::size_t to = g.edges[e++].to;
    if (colour[to] == kGrey) return std::nullopt;
    if (colour[to] == kWhite) {
      colour[to] = kGrey;
      stack.emplace_back(to, g.out_begin[to]);
    }
  }
  return height[0];
}

Exploration explore(const GapState& initial, std::size_t node_cap) {
  Exploration result;
  auto& g = result.graph;
  auto& report = result.report;

  g.nodes.push_back(initial);
  g.index.emplace(initial, 0);
  g.out_begin.push_back(0);
  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    const GapState current = g.nodes[head];
    for (Trigger t : legal_triggers(current)) {
      GapState next = apply_move(current, t);
      auto [it, inserted] = g.index.try_emplace(next, g.nodes.size());
      if (inserted) {
        if (g.nodes.size() >= node_cap) {
          throw ResourceLimit(node_cap, "exploration exceeds node cap " + std::to_string(node_cap));
        }
        g.nodes.push_back(std::move(next));
      }
      g.edges.push_back({head, t, it->second});
    }
    g.out_begin.push_back(g.edges.size());
  }

  report.node_count = g.nodes.size();
  report.edge_count = g.edges.size();
  report.max_trajectory_length = longest_path_from_root(g);
  report.is_acyclic = report.max_trajectory_length.has_value();

  const bool flat = is_all_zero(initial);
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    const auto& s = g.nodes[id];
    const bool sink = g.out_degree(id) == 0;
    if (sink != is_final(s)) {
      report.invariant_violations.push_back({ViolationKind::FinalMismatch, id, to_string(s)});
    }
    if (sink) report.final_states.push_back(s);
    if (flat) check_flat_state(s, id, report.invariant_violations);
    for (std::size_t e = g.out_begin[id]; e < g.out_begin[id + 1]; ++e) {
      const auto& edge = g.edges[e];
      check_move_laws(s, g.nodes[edge.to], edge.trigger, id, report.invariant_violations);
    }
  }
  std::sort(report.final_states.begin(), report.final_states.end());
  return result;
}

}  // namespace gapfire
