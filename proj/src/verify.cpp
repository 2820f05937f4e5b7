#include "gapfire/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gapfire/constructor.hpp"
#include "gapfire/playout.hpp"
#include "gapfire/room_oracle.hpp"

namespace gapfire {

namespace {

constexpr std::size_t kMaxExamples = 5;

// Randomized oracle cases go up to this many gaps with entries up to 9.
constexpr std::size_t kOracleRandomGaps = 12;
constexpr Gap kOracleRandomEntry = 9;
// Random termination playouts.
constexpr std::size_t kPlayoutRandomGaps = 11;
constexpr Gap kPlayoutRandomEntry = 5;
// Randomized lemma lifts.
constexpr std::size_t kLiftRandomGaps = 8;

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    ++result_.violations;
    if (result_.examples.size() < kMaxExamples) result_.examples.push_back(describe());
  }

  void add_violations(const std::vector<Violation>& vs) {
    for (const auto& v : vs) {
      ++result_.violations;
      if (result_.examples.size() < kMaxExamples) {
        result_.examples.push_back(to_string(v.kind) + ": " + v.detail);
      }
    }
  }

  void count(std::size_t n) { result_.cases += n; }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

GapState random_state(PlayoutRng& rng, std::size_t length, Gap max_entry) {
  std::vector<Gap> gaps(length);
  for (auto& g : gaps) g = rng.between(0, max_entry);
  return GapState(std::move(gaps));
}

// replay(lift_insert_zero(s, at)) is s.target with a zero inserted at `at`.
bool lift_replays(const Schedule& s, std::size_t at) {
  auto expected = s.target.vector();
  expected.insert(expected.begin() + static_cast<std::ptrdiff_t>(at - 1), 0);
  try {
    return replay(lift_insert_zero(s, at)) == GapState(std::move(expected));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<Violation> of_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  std::vector<Violation> out;
  std::copy_if(vs.begin(), vs.end(), std::back_inserter(out),
               [&](const Violation& v) { return v.kind == kind; });
  return out;
}

SuiteResult norm_law(const VerifyOptions& o) {
  Tally tally("norm-law");
  for (std::size_t len = 1; len <= o.gaps_max; ++len) {
    const auto ex = explore(GapState(std::vector<Gap>(len, 0)), o.node_cap);
    tally.count(ex.report.edge_count);
    tally.add_violations(of_kind(ex.report.invariant_violations, ViolationKind::NormLaw));
  }
  PlayoutRng rng(o.seed);
  for (std::size_t i = 0; i < o.trials; ++i) {
    const auto len = rng.between(1, std::max<std::size_t>(o.gaps_max, 1));
    const auto t = playout(random_state(rng, len, kPlayoutRandomEntry), Policy::Random, rng,
                           o.depth_limit);
    tally.count(t.triggers.size());
    tally.add_violations(of_kind(validate_trajectory(t, false), ViolationKind::NormLaw));
  }
  return tally.take();
}

SuiteResult window_bound(const VerifyOptions& o) {
  Tally tally("window-bound");
  for (std::size_t len = 1; len <= o.gaps_max; ++len) {
    const auto ex = explore(GapState(std::vector<Gap>(len, 0)), o.node_cap);
    for (const auto& s : ex.graph.nodes) {
      tally.check(check_window_bound(s), [&] { return "window bound fails at " + to_string(s); });
    }
  }
  return tally.take();
}

SuiteResult alphabet(const VerifyOptions& o) {
  Tally tally("alphabet");
  for (std::size_t len = 1; len <= std::min<std::size_t>(o.gaps_max, 8); ++len) {
    for (const auto& s : all_states(len, 2)) {
      for (Trigger t : legal_triggers(s)) {
        const auto next = apply_move(s, t);
        tally.check(in_small_alphabet(next), [&] {
          return to_string(s) + " --" + std::to_string(t) + "--> " + to_string(next);
        });
      }
    }
  }
  return tally.take();
}

SuiteResult oracle_equivalence(const VerifyOptions& o) {
  Tally tally("oracle-equivalence");
  auto one = [&](const GapState& s, Trigger t) {
    tally.check(check_move_equivalence(s, t), [&] {
      return "room simulation disagrees at " + to_string(s) + " trigger " + std::to_string(t);
    });
  };
  for (std::size_t len = 1; len <= std::min<std::size_t>(o.gaps_max, 5); ++len) {
    for (const auto& s : all_states(len, 3)) {
      for (Trigger t : legal_triggers(s)) one(s, t);
    }
  }
  PlayoutRng rng(o.seed);
  for (std::size_t i = 0; i < o.trials; ++i) {
    const auto len = rng.between(1, kOracleRandomGaps);
    auto gaps = random_state(rng, len, kOracleRandomEntry).vector();
    const Trigger t = rng.between(1, len);
    gaps[t - 1] = 0;
    one(GapState(std::move(gaps)), t);
  }
  return tally.take();
}

SuiteResult acyclic(const VerifyOptions& o) {
  Tally tally("acyclic");
  PlayoutRng rng(o.seed);
  for (std::size_t len = 1; len <= std::min<std::size_t>(o.gaps_max, 6); ++len) {
    for (const auto& s : all_states(len, 2)) {
      const auto ex = explore(s, o.node_cap);
      tally.check(ex.report.is_acyclic, [&] { return "cycle reachable from " + to_string(s); });
      tally.add_violations(ex.report.invariant_violations);
      const auto t = playout(s, Policy::Leftmost, rng, o.depth_limit);
      tally.check(is_final(t.last()), [&] { return "leftmost playout stuck at " + to_string(s); });
    }
  }
  for (std::size_t i = 0; i < o.trials; ++i) {
    const auto len = rng.between(1, kPlayoutRandomGaps);
    const auto s = random_state(rng, len, kPlayoutRandomEntry);
    const auto t = playout(s, Policy::Random, rng, o.depth_limit);
    tally.check(is_final(t.last()), [&] { return "random playout stuck at " + to_string(s); });
  }
  return tally.take();
}

SuiteResult constructor_suite(const VerifyOptions& o) {
  Tally tally("constructor");
  for (std::size_t len = 1; len <= o.gaps_max; ++len) {
    std::set<GapState> targets;
    for (std::size_t k = 0; k < len; ++k) {
      const auto schedule = build_final_schedule(len, k);
      const auto end = replay(schedule);
      targets.insert(end);
      tally.check(end == clusteron_final(len, k), [&] {
        return "schedule " + to_string(schedule) + " ends at " + to_string(end);
      });
    }
    if (len <= 9) {
      const auto ex = explore(GapState(std::vector<Gap>(len, 0)), o.node_cap);
      const std::set<GapState> finals(ex.report.final_states.begin(), ex.report.final_states.end());
      tally.check(finals == targets, [&] {
        return "constructed targets differ from explored finals at length " + std::to_string(len);
      });
    }
  }
  return tally.take();
}

SuiteResult lemma_lift(const VerifyOptions& o) {
  Tally tally("lemma-lift");
  auto check = [&](const Schedule& s, std::size_t at) {
    tally.check(lift_replays(s, at), [&] {
      return "lift of " + to_string(s) + " at " + std::to_string(at) + " fails";
    });
  };
  for (std::size_t len = 1; len <= std::min<std::size_t>(o.gaps_max, 4); ++len) {
    const auto tree = build_move_tree(GapState(std::vector<Gap>(len, 0)), o.depth_limit, o.node_cap);
    for (std::size_t id = 0; id < tree.size(); ++id) {
      const Schedule s{len, tree.path_to(id), tree.nodes[id].state};
      for (std::size_t at = 1; at <= len + 1; ++at) check(s, at);
    }
  }
  PlayoutRng rng(o.seed);
  for (std::size_t i = 0; i < o.trials; ++i) {
    const auto len = rng.between(1, kLiftRandomGaps);
    const auto t = playout(GapState(std::vector<Gap>(len, 0)), Policy::Random, rng, o.depth_limit);
    const auto prefix = rng.between(0, t.triggers.size());
    const Schedule s{len, {t.triggers.begin(), t.triggers.begin() + static_cast<std::ptrdiff_t>(prefix)},
               t.states[prefix]};
    check(s, rng.between(1, len + 1));
  }
  return tally.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"norm-law",    "window-bound", "alphabet",
                                              "oracle-equivalence", "acyclic", "constructor",
                                              "lemma-lift"};
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& opts) {
  if (name == "norm-law") return norm_law(opts);
  if (name == "window-bound") return window_bound(opts);
  if (name == "alphabet") return alphabet(opts);
  if (name == "oracle-equivalence") return oracle_equivalence(opts);
  if (name == "acyclic") return acyclic(opts);
  if (name == "constructor") return constructor_suite(opts);
  if (name == "lemma-lift") return lemma_lift(opts);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<GapState> all_states(std::size_t length, Gap max_entry) {
  std::vector<GapState> out;
  std::vector<Gap> gaps(length, 0);
  while (true) {
    out.emplace_back(gaps);
    std::size_t i = length;
    while (i > 0 && gaps[i - 1] == max_entry) gaps[--i] = 0;
    if (i == 0) return out;
    ++gaps[i - 1];
  }
}

}  // namespace gapfire
