#include <doctest.h>

#include <set>
#include <utility>

#include "gapfire/errors.hpp"
#include "gapfire/explorer.hpp"
#include "gapfire/verify.hpp"

using namespace gapfire;

namespace {

// Brute-force closure used as an oracle: plain recursion over a std::set,
// no BFS ordering or hashing shared with explore().
void closure(const GapState& s, std::set<GapState>& seen, std::set<GapState>& finals) {
  if (!seen.insert(s).second) return;
  if (is_final(s)) finals.insert(s);
  for (Trigger t = 1; t <= s.size(); ++t) {
    if (s.gap(t) == 0) closure(apply_move(s, t), seen, finals);
  }
}

// Figure 1 of the move-sequence diagram for four violinists, preorder
// (depth, state) pairs.
const std::vector<std::pair<std::size_t, GapState>> kFourViolinistTree{
    {0, {0, 0, 0}}, {1, {2, 0, 0}}, {2, {1, 2, 0}}, {3, {1, 1, 2}}, {2, {1, 0, 2}},
    {3, {0, 2, 1}}, {4, {2, 1, 1}}, {1, {0, 2, 0}}, {2, {2, 1, 0}}, {3, {2, 0, 2}},
    {4, {1, 2, 1}}, {2, {0, 1, 2}}, {3, {2, 0, 2}}, {4, {1, 2, 1}}, {1, {0, 0, 2}},
    {2, {2, 0, 1}}, {3, {1, 2, 0}}, {4, {1, 1, 2}}, {2, {0, 2, 1}}, {3, {2, 1, 1}},
};

}  // namespace

TEST_CASE("move tree for four violinists") {
  const auto tree = build_move_tree({0, 0, 0}, 10);
  REQUIRE(tree.size() == 20);
  for (std::size_t id = 0; id < tree.size(); ++id) {
    CHECK(tree.nodes[id].depth == kFourViolinistTree[id].first);
    CHECK(tree.nodes[id].state == kFourViolinistTree[id].second);
  }
  std::vector<GapState> depth_one;
  for (auto c : tree.root().children) depth_one.push_back(tree.nodes[c].state);
  CHECK(depth_one == std::vector<GapState>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(tree.leaves() == std::vector<GapState>{{1, 1, 2}, {2, 1, 1}, {1, 2, 1},
                                               {1, 2, 1}, {1, 1, 2}, {2, 1, 1}});
  CHECK(tree.truncated_count() == 0);
  CHECK(tree.path_to(6) == std::vector<Trigger>{1, 3, 2, 1});
}

TEST_CASE("move tree edge cases") {
  const auto single = build_move_tree({1, 2, 1}, 10);
  CHECK(single.size() == 1);
  CHECK(single.leaves() == std::vector<GapState>{{1, 2, 1}});

  const auto two = build_move_tree({0, 0}, 10);
  CHECK(two.leaves() == std::vector<GapState>{{1, 2}, {2, 1}});
  CHECK(two.size() == 5);

  SUBCASE("depth limit flags truncation") {
    const auto cut = build_move_tree({0, 0, 0}, 2);
    CHECK(cut.size() == 10);
    CHECK(cut.truncated_count() == 6);
    for (const auto& n : cut.nodes) {
      if (n.truncated) {
        CHECK(n.depth == 2);
        CHECK_FALSE(is_final(n.state));
      }
    }
  }
  CHECK_THROWS_AS(build_move_tree({0, 0, 0}, 10, 5), ResourceLimit);
}

TEST_CASE("move tree leaves are final and every path validates") {
  for (std::size_t len = 1; len <= 5; ++len) {
    const auto tree = build_move_tree(GapState(std::vector<Gap>(len, 0)));
    CHECK(tree.truncated_count() == 0);
    for (std::size_t id = 0; id < tree.size(); ++id) {
      if (!tree.nodes[id].children.empty()) continue;
      CHECK(is_final(tree.nodes[id].state));
      const auto t = Trajectory::replay(tree.root().state, tree.path_to(id));
      CHECK(t.last() == tree.nodes[id].state);
      CHECK(validate_trajectory(t, true).empty());
    }
  }
}

TEST_CASE("explore four violinists") {
  const auto ex = explore({0, 0, 0});
  const auto& r = ex.report;
  CHECK(r.node_count == 14);
  CHECK(r.edge_count == 16);
  CHECK(r.final_states == std::vector<GapState>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(r.is_acyclic);
  CHECK(r.max_trajectory_length == 4);
  CHECK(r.invariant_violations.empty());

  std::set<GapState> expected{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 2, 0},
                              {1, 0, 2}, {2, 1, 0}, {0, 1, 2}, {2, 0, 1}, {0, 2, 1},
                              {2, 0, 2}, {1, 1, 2}, {2, 1, 1}, {1, 2, 1}};
  CHECK(std::set<GapState>(ex.graph.nodes.begin(), ex.graph.nodes.end()) == expected);

  // breadth-first ids: root, then depth-one states in trigger order
  CHECK(ex.graph.nodes[0] == GapState{0, 0, 0});
  CHECK(ex.graph.nodes[1] == GapState{2, 0, 0});
  CHECK(ex.graph.nodes[2] == GapState{0, 2, 0});
  CHECK(ex.graph.nodes[3] == GapState{0, 0, 2});
  for (const auto& e : ex.graph.edges) {
    CHECK(apply_move(ex.graph.nodes[e.from], e.trigger) == ex.graph.nodes[e.to]);
  }
}

TEST_CASE("explore small cases") {
  const auto done = explore({2});
  CHECK(done.report.node_count == 1);
  CHECK(done.report.edge_count == 0);
  CHECK(done.report.final_states == std::vector<GapState>{{2}});
  CHECK(done.report.max_trajectory_length == 0);

  const auto empty = explore({});
  CHECK(empty.report.final_states == std::vector<GapState>{{}});

  CHECK(explore({0, 0, 0, 0}).report.final_states ==
        std::vector<GapState>{{1, 1, 1, 2}, {1, 1, 2, 1}, {1, 2, 1, 1}, {2, 1, 1, 1}});

  CHECK_THROWS_AS(explore({0, 0, 0}, 5), ResourceLimit);
}

TEST_CASE("explore agrees with brute-force closure") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto flat = flat_clusteron(n);
    std::set<GapState> seen, finals;
    closure(flat, seen, finals);
    const auto ex = explore(flat);
    CHECK(std::set<GapState>(ex.graph.nodes.begin(), ex.graph.nodes.end()) == seen);
    CHECK(std::set<GapState>(ex.report.final_states.begin(), ex.report.final_states.end()) ==
          finals);
    std::set<GapState> expected_finals;
    for (std::size_t k = 0; k + 1 < n; ++k) expected_finals.insert(clusteron_final(n - 1, k));
    CHECK(finals == expected_finals);
  }
  // non-flat start
  std::set<GapState> seen, finals;
  closure({3, 0, 0, 1}, seen, finals);
  const auto ex = explore({3, 0, 0, 1});
  CHECK(ex.report.node_count == seen.size());
  CHECK(ex.report.final_states == std::vector<GapState>(finals.begin(), finals.end()));
}

TEST_CASE("every start in {0,1,2}^L is acyclic with clean laws") {
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const auto& s : all_states(len, 2)) {
      const auto ex = explore(s);
      CHECK(ex.report.is_acyclic);
      // window bound only applies from the flat start
      CHECK(ex.report.invariant_violations.empty());
    }
  }
}

TEST_CASE("explore is deterministic") {
  const auto a = explore({0, 0, 0, 0, 0, 0});
  const auto b = explore({0, 0, 0, 0, 0, 0});
  CHECK(a.graph.nodes == b.graph.nodes);
  REQUIRE(a.graph.edges.size() == b.graph.edges.size());
  for (std::size_t i = 0; i < a.graph.edges.size(); ++i) {
    CHECK(a.graph.edges[i].from == b.graph.edges[i].from);
    CHECK(a.graph.edges[i].trigger == b.graph.edges[i].trigger);
    CHECK(a.graph.edges[i].to == b.graph.edges[i].to);
  }
}

TEST_CASE("cycle detection on a hand-built graph") {
  ReachabilityGraph g;
  g.nodes = {{0}, {1}, {2}};
  // 0 -> 1 -> 2 -> 1
  g.edges = {{0, 1, 1}, {1, 1, 2}, {2, 1, 1}};
  g.out_begin = {0, 1, 2, 3};
  CHECK_FALSE(longest_path_from_root(g).has_value());

  // diamond with a long side: 0 -> 1 -> 2, 0 -> 2
  g.edges = {{0, 1, 1}, {0, 2, 2}, {1, 1, 2}};
  g.out_begin = {0, 2, 3, 3};
  CHECK(longest_path_from_root(g) == 2);
}

TEST_CASE("classify_final") {
  CHECK(classify_final({1, 2, 1}) == 1);
  CHECK(classify_final({2, 1, 1}) == 0);
  CHECK(classify_final({1, 1, 2}) == 2);
  CHECK_FALSE(classify_final({3, 1}).has_value());
  CHECK_FALSE(classify_final({2, 2}).has_value());
  CHECK_FALSE(classify_final({1, 1}).has_value());
  CHECK_THROWS_AS(classify_final({1, 0}), std::invalid_argument);
  for (std::size_t len = 1; len <= 6; ++len) {
    for (std::size_t k = 0; k < len; ++k) CHECK(classify_final(clusteron_final(len, k)) == k);
  }
}

TEST_CASE("validate_trajectory") {
  const auto figure = Trajectory::replay({0, 0, 0}, {1, 2, 3});
  CHECK(figure.states ==
        std::vector<GapState>{{0, 0, 0}, {2, 0, 0}, {1, 2, 0}, {1, 1, 2}});
  CHECK(validate_trajectory(figure, true).empty());

  const Trajectory small{{{0, 0}, {2, 0}, {1, 2}}, {1, 2}};
  CHECK(validate_trajectory(small, true).empty());

  // Doctored: (0,0) -> (2,2) is no move. Both entries went 0 -> 2, which the
  // per-entry law allows, so the single report is the illegal step itself.
  const Trajectory doctored{{{0, 0}, {2, 2}}, {1}};
  const auto v = validate_trajectory(doctored, false);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::IllegalStep);
  CHECK(v[0].step == 1);
  // (2,2) also breaks the window bound when a flat origin is asserted
  const auto vf = validate_trajectory(doctored, true);
  REQUIRE(vf.size() == 2);
  CHECK(vf[1].kind == ViolationKind::WindowBound);

  const Trajectory jumped{{{1, 0}, {1, 3}}, {2}};
  const auto w = validate_trajectory(jumped, false);
  REQUIRE(w.size() == 2);
  CHECK(w[0].kind == ViolationKind::IllegalStep);
  CHECK(w[1].kind == ViolationKind::EntryStepLaw);

  // non-flat start: window bound is not asserted unless asked for
  const auto wide = Trajectory::replay({3, 0}, {2});
  CHECK(validate_trajectory(wide, false).empty());
  CHECK_FALSE(validate_trajectory(wide, true).empty());

  CHECK_THROWS_AS(validate_trajectory(Trajectory{{{0, 0}}, {1}}, false), std::invalid_argument);
  CHECK_THROWS_AS(validate_trajectory(Trajectory{{}, {}}, false), std::invalid_argument);
  CHECK_THROWS_AS(validate_trajectory(Trajectory{{{0, 0}, {2}}, {1}}, false),
                  std::invalid_argument);
}
