#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gapfire/gap_state.hpp"

namespace gapfire {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;
inline constexpr std::size_t kDefaultDepthLimit = 10'000;

// An initial state, the triggers fired, and the states they produced.
// states.size() == triggers.size() + 1 for a well-formed trajectory; states
// are stored rather than derived so that doctored runs can be validated.
struct Trajectory {
  std::vector<GapState> states;
  std::vector<Trigger> triggers;

  // Replays triggers from initial; throws like apply_move on a bad trigger.
  static Trajectory replay(const GapState& initial, const std::vector<Trigger>& triggers);

  const GapState& initial() const { return states.front(); }
  const GapState& last() const { return states.back(); }
};

enum class ViolationKind {
  IllegalStep,    // states[t] is not apply_move(states[t-1], triggers[t])
  NormLaw,        // delta outside {0,1,2} or not matching the side count
  EntryStepLaw,
  WindowBound,
  Alphabet,
  FinalMismatch,  // a node without out-edges that is not final, or vice versa
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t step;  // trajectory step, or node id for graph checks
  std::string detail;
};

// Checks norm law and entry step law on every step; with flat_origin, also
// the window bound and {0,1,2} alphabet on every state. Throws
// std::invalid_argument for a malformed trajectory (count or length
// mismatch, empty state list).
std::vector<Violation> validate_trajectory(const Trajectory& t, bool flat_origin);

// k for a final state of the form 1^k 2 1^m, absent for any other final
// state. Throws std::invalid_argument if s is not final.
std::optional<std::size_t> classify_final(const GapState& s);

// The state 1^k 2 1^(length-1-k).
GapState clusteron_final(std::size_t length, std::size_t k);

// ---------------------------------------------------------------------------
// Move tree: every trajectory spelled out, repeated states kept as separate
// nodes. Node 0 is the root; nodes are numbered in depth-first preorder with
// children in increasing trigger order.

struct MoveTreeNode {
  GapState state;
  std::size_t depth = 0;
  std::optional<std::size_t> parent;
  std::optional<Trigger> via;  // trigger that produced this node
  std::vector<std::size_t> children;
  bool truncated = false;      // depth limit hit with moves still available
};

struct MoveTree {
  std::vector<MoveTreeNode> nodes;

  const MoveTreeNode& root() const { return nodes.front(); }
  std::size_t size() const { return nodes.size(); }

  // Leaf states in preorder.
  std::vector<GapState> leaves() const;
  std::size_t truncated_count() const;

  // Triggers on the path from the root to node id.
  std::vector<Trigger> path_to(std::size_t id) const;
};

// Throws ResourceLimit when the tree would exceed node_cap nodes.
MoveTree build_move_tree(const GapState& initial, std::size_t depth_limit = kDefaultDepthLimit,
                         std::size_t node_cap = kDefaultNodeCap);

// ---------------------------------------------------------------------------
// Reachability graph: distinct states, ids dense from 0 in breadth-first
// discovery order, edges grouped by source in id order then by trigger.

struct Edge {
  std::size_t from;
  Trigger trigger;
  std::size_t to;
};

struct ReachabilityGraph {
  std::vector<GapState> nodes;
  std::vector<Edge> edges;
  std::vector<std::size_t> out_begin;  // edges of node i: [out_begin[i], out_begin[i+1])
  std::unordered_map<GapState, std::size_t, GapStateHash> index;

  const GapState& root() const { return nodes.front(); }
  std::optional<std::size_t> find(const GapState& s) const;
  std::size_t out_degree(std::size_t id) const { return out_begin[id + 1] - out_begin[id]; }
};

// Longest path from node 0, or absent when a cycle is reachable from it.
// Cycles are found by explicit depth-first back-edge detection.
std::optional<std::size_t> longest_path_from_root(const ReachabilityGraph& g);

struct ExploreReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::vector<GapState> final_states;  // lexicographic
  // Longest trajectory from the root, in moves; absent if a cycle was found.
  std::optional<std::size_t> max_trajectory_length;
  bool is_acyclic = false;
  std::vector<Violation> invariant_violations;
};

struct Exploration {
  ReachabilityGraph graph;
  ExploreReport report;
};

// Memoized breadth-first closure of initial under every legal move, followed
// by explicit cycle detection and per-edge law checks (plus window bound and
// alphabet on every node when initial is all-zero). Throws ResourceLimit once
// more than node_cap distinct states are discovered.
Exploration explore(const GapState& initial, std::size_t node_cap = kDefaultNodeCap);

}  // namespace gapfire
