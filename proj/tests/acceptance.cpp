// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Thresholds and sizes are fixed here.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapfire/cli.hpp"
#include "gapfire/constructor.hpp"
#include "gapfire/explorer.hpp"
#include "gapfire/playout.hpp"
#include "gapfire/room_oracle.hpp"
#include "gapfire/verify.hpp"

using namespace gapfire;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  Criterion(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

  int id;
  std::string title;
  bool passed = true;
  std::vector<std::string> failures;
  double seconds = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

// Norm-law tally over every move executed by criteria 1-4.
struct NormLedger {
  std::size_t moves = 0;
  std::size_t negative = 0;
  std::size_t out_of_range = 0;
  std::size_t two_from_nonflat = 0;
  std::vector<std::string> samples;

  void record(const GapState& prev, const GapState& next) {
    ++moves;
    const auto delta = static_cast<long long>(norm(next)) - static_cast<long long>(norm(prev));
    const bool neg = delta < 0;
    const bool big = delta > 2;
    const bool two = delta == 2 && !is_all_zero(prev);
    negative += neg;
    out_of_range += big;
    two_from_nonflat += two;
    if ((neg || big || two) && samples.size() < 5) {
      samples.push_back(to_string(prev) + " -> " + to_string(next));
    }
  }

  void record(const Trajectory& t) {
    for (std::size_t i = 1; i < t.states.size(); ++i) record(t.states[i - 1], t.states[i]);
  }

  void record(const ReachabilityGraph& g) {
    for (const auto& e : g.edges) record(g.nodes[e.from], g.nodes[e.to]);
  }

  void record(const MoveTree& tree) {
    for (const auto& n : tree.nodes) {
      if (n.parent) record(tree.nodes[*n.parent].state, n.state);
    }
  }
};

GapState zeros(std::size_t length) { return GapState(std::vector<Gap>(length, 0)); }

GapState ones_two_ones(std::size_t before, std::size_t after) {
  std::vector<Gap> gaps(before, 1);
  gaps.push_back(2);
  gaps.insert(gaps.end(), after, 1);
  return GapState(std::move(gaps));
}

// 1. The four-violinist move tree through the CLI.
Criterion figure_reproduction(NormLedger& ledger) {
  Criterion c{1, "four-violinist move tree reproduced exactly"};
  const auto start = Clock::now();

  std::ostringstream out, err;
  const int code = cli::run({"--format", "machine", "explore", "000", "--tree"}, out, err);
  c.expect(code == 0, "explore 000 --tree exit code " + std::to_string(code));
  const auto doc = nlohmann::json::parse(out.str());

  const auto& tree = doc["tree"];
  std::size_t count = 0;
  std::vector<std::string> leaves;
  std::vector<const nlohmann::json*> stack{&tree};
  while (!stack.empty()) {
    const auto* node = stack.back();
    stack.pop_back();
    ++count;
    const auto& children = (*node)["children"];
    if (children.empty()) leaves.push_back((*node)["state"].get<std::string>());
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(&*it);
  }
  c.expect(tree["state"] == "000", "root is " + tree["state"].dump());
  c.expect(count == 20, "tree has " + std::to_string(count) + " nodes");
  std::vector<std::string> depth_one;
  for (const auto& child : tree["children"]) depth_one.push_back(child["state"]);
  c.expect(depth_one == std::vector<std::string>{"200", "020", "002"}, "depth-one children differ");
  std::multiset<std::string> leaf_set(leaves.begin(), leaves.end());
  c.expect(leaf_set == std::multiset<std::string>{"112", "211", "121", "121", "112", "211"},
           "leaf multiset differs");
  c.expect(doc["report"]["node_count"] == 14, "distinct states " + doc["report"]["node_count"].dump());
  c.expect(doc["report"]["final_states"] == nlohmann::json{"112", "121", "211"},
           "finals " + doc["report"]["final_states"].dump());
  c.expect(doc["report"]["is_acyclic"] == true, "cycle reported");

  ledger.record(build_move_tree(zeros(3)));
  ledger.record(explore(zeros(3)).graph);

  c.seconds = seconds_since(start);
  c.expect(c.seconds < 1.0, "runtime " + std::to_string(c.seconds) + " s >= 1 s");
  return c;
}

// 2 and 3 share the explorations for N = 2..10.
std::pair<Criterion, Criterion> closure_and_window_bound(NormLedger& ledger) {
  Criterion closure{2, "flat-clusteron finals are exactly 1^k 2 1^(N-2-k), all constructible"};
  Criterion window{3, "window bound and {0,1,2} alphabet on every flat-origin state"};
  const auto start = Clock::now();
  std::size_t states = 0;

  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t len = n - 1;
    const auto ex = explore(flat_clusteron(n));
    ledger.record(ex.graph);

    std::set<GapState> expected;
    for (std::size_t k = 0; k < len; ++k) expected.insert(ones_two_ones(k, len - 1 - k));
    const std::set<GapState> finals(ex.report.final_states.begin(), ex.report.final_states.end());
    closure.expect(finals == expected && finals.size() == n - 1,
                   "N=" + std::to_string(n) + ": finals differ");

    for (std::size_t k = 0; k < len; ++k) {
      const auto end = replay(build_final_schedule(len, k));
      closure.expect(end == ones_two_ones(k, len - 1 - k),
                     "N=" + std::to_string(n) + " k=" + std::to_string(k) + " ends at " +
                         to_string(end));
    }

    for (const auto& s : ex.graph.nodes) {
      ++states;
      window.expect(check_window_bound(s), "window bound fails at " + to_string(s));
      window.expect(in_small_alphabet(s), "entry above 2 in " + to_string(s));
    }
  }
  closure.seconds = seconds_since(start);
  closure.expect(closure.seconds < 30.0, "runtime " + std::to_string(closure.seconds) + " s >= 30 s");
  window.seconds = closure.seconds;
  window.expect(states > 0, "no states examined");
  return {closure, window};
}

// 4. Termination at desk scale.
Criterion termination(NormLedger& ledger) {
  Criterion c{4, "acyclic graphs for {0,1,2}^L, L<=6; leftmost and 10000 random playouts terminate"};
  const auto start = Clock::now();
  PlayoutRng rng(20240101);

  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& s : all_states(len, 2)) {
      const auto ex = explore(s);
      ledger.record(ex.graph);
      c.expect(ex.report.is_acyclic, "cycle detected from " + to_string(s));
      try {
        const auto t = playout(s, Policy::Leftmost, rng);
        ledger.record(t);
        c.expect(is_final(t.last()), "leftmost playout from " + to_string(s) + " not final");
      } catch (const std::exception& e) {
        c.expect(false, std::string("leftmost playout: ") + e.what());
      }
    }
  }

  for (int i = 0; i < 10000; ++i) {
    const auto len = rng.between(1, 11);
    std::vector<Gap> gaps(len);
    for (auto& g : gaps) g = rng.between(0, 5);
    const GapState s(std::move(gaps));
    try {
      const auto t = playout(s, Policy::Random, rng);
      ledger.record(t);
      c.expect(is_final(t.last()), "random playout from " + to_string(s) + " not final");
    } catch (const std::exception& e) {
      c.expect(false, std::string("random playout: ") + e.what());
    }
  }
  c.seconds = seconds_since(start);
  c.expect(c.seconds < 60.0, "runtime " + std::to_string(c.seconds) + " s >= 60 s");
  return c;
}

Criterion norm_law(const NormLedger& ledger) {
  Criterion c{5, "norm delta in {0,1,2}, 2 only from all-zero, over every move of 1-4"};
  c.expect(ledger.moves > 0, "no moves recorded");
  c.expect(ledger.negative == 0, std::to_string(ledger.negative) + " negative deltas");
  c.expect(ledger.out_of_range == 0, std::to_string(ledger.out_of_range) + " deltas above 2");
  c.expect(ledger.two_from_nonflat == 0,
           std::to_string(ledger.two_from_nonflat) + " delta-2 moves from non-flat states");
  for (const auto& s : ledger.samples) c.expect(false, s);
  c.title += " (" + std::to_string(ledger.moves) + " moves)";
  return c;
}

// 6. Hotel simulation versus gap rule.
Criterion oracle_equivalence() {
  Criterion c{6, "gap move agrees with room simulation (exhaustive + 10000 random)"};
  const auto start = Clock::now();
  std::size_t cases = 0;
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const auto& s : all_states(len, 3)) {
      for (Trigger t : legal_triggers(s)) {
        ++cases;
        c.expect(check_move_equivalence(s, t), "disagree at " + to_string(s) + " T=" + std::to_string(t));
      }
    }
  }
  PlayoutRng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const auto len = rng.between(1, 12);
    std::vector<Gap> gaps(len);
    for (auto& g : gaps) g = rng.between(0, 9);
    const Trigger t = rng.between(1, len);
    gaps[t - 1] = 0;
    const GapState s(std::move(gaps));
    ++cases;
    c.expect(check_move_equivalence(s, t), "disagree at " + to_string(s) + " T=" + std::to_string(t));
  }
  c.seconds = seconds_since(start);
  c.expect(c.seconds < 10.0, "runtime " + std::to_string(c.seconds) + " s >= 10 s");
  c.title += " (" + std::to_string(cases) + " cases)";
  return c;
}

bool lift_replays(const Schedule& s, std::size_t at) {
  auto expected = s.target.vector();
  expected.insert(expected.begin() + static_cast<std::ptrdiff_t>(at - 1), 0);
  try {
    return replay(lift_insert_zero(s, at)) == GapState(std::move(expected));
  } catch (const std::exception&) {
    return false;
  }
}

// 7. Zero-insertion lift.
Criterion lemma_lift() {
  Criterion c{7, "lifted schedules replay to the zero-inserted target"};
  std::size_t cases = 0;
  for (std::size_t len = 1; len <= 4; ++len) {
    const auto tree = build_move_tree(zeros(len));
    for (std::size_t id = 0; id < tree.size(); ++id) {
      const Schedule s{len, tree.path_to(id), tree.nodes[id].state};
      for (std::size_t at = 1; at <= len + 1; ++at) {
        ++cases;
        c.expect(lift_replays(s, at), "lift of " + to_string(s) + " at " + std::to_string(at));
      }
    }
  }
  PlayoutRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto len = rng.between(1, 8);
    const auto t = playout(zeros(len), Policy::Random, rng);
    const auto prefix = rng.between(0, t.triggers.size());
    const Schedule s{len,
                     {t.triggers.begin(), t.triggers.begin() + static_cast<std::ptrdiff_t>(prefix)},
                     t.states[prefix]};
    const auto at = rng.between(1, len + 1);
    ++cases;
    c.expect(lift_replays(s, at), "lift of " + to_string(s) + " at " + std::to_string(at));
  }
  c.title += " (" + std::to_string(cases) + " cases)";
  return c;
}

// 8. Middle-case intermediate: printed form versus corrected form, L=4, k=2.
Criterion off_by_one_regression() {
  Criterion c{8, "printed middle-case intermediate ends one short; corrected recursion is exact"};
  const std::size_t len = 4, k = 2;
  // 0 1^(k-1) 2 1^(L-1-k)
  std::vector<Gap> printed{0};
  printed.insert(printed.end(), k - 1, 1);
  printed.push_back(2);
  printed.insert(printed.end(), len - 1 - k, 1);
  const auto from_printed = migrate_single_zero(GapState(printed));
  c.expect(GapState(printed) == GapState{0, 1, 2, 1}, "printed intermediate built wrong");
  c.expect(from_printed.end == ones_two_ones(k - 1, len - k),
           "printed intermediate migrates to " + to_string(from_printed.end));
  c.expect(from_printed.end != ones_two_ones(k, len - 1 - k), "printed intermediate hit the target");

  const auto schedule = build_final_schedule(len, k);
  c.expect(replay(schedule) == ones_two_ones(k, len - 1 - k),
           "corrected recursion ends at " + to_string(replay(schedule)));
  // corrected intermediate 0 1^k 2 1^(L-2-k)
  const auto corrected = migrate_single_zero(GapState{0, 1, 1, 2});
  c.expect(corrected.end == GapState{1, 1, 2, 1}, "corrected intermediate migrates to " +
                                                      to_string(corrected.end));
  return c;
}

}  // namespace

int main() {
  NormLedger ledger;
  std::vector<Criterion> results;
  results.push_back(figure_reproduction(ledger));
  auto [closure, window] = closure_and_window_bound(ledger);
  results.push_back(closure);
  results.push_back(window);
  results.push_back(termination(ledger));
  results.push_back(norm_law(ledger));
  results.push_back(oracle_equivalence());
  results.push_back(lemma_lift());
  results.push_back(off_by_one_regression());

  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed;
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << "AC" << c.id << ": " << c.title;
    if (c.seconds > 0) std::cout << " [" << std::to_string(c.seconds) << " s]";
    std::cout << '\n';
    for (const auto& f : c.failures) std::cout << "         " << f << '\n';
  }
  std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
