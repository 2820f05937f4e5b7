#include "gapfire/cli.hpp"

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapfire/constructor.hpp"
#include "gapfire/errors.hpp"
#include "gapfire/explorer.hpp"
#include "gapfire/export.hpp"
#include "gapfire/playout.hpp"
#include "gapfire/room_oracle.hpp"
#include "gapfire/verify.hpp"
#include "text_util.hpp"

namespace gapfire::cli {

namespace {

enum class Format { Plain, Machine, Diagram };

struct RunConfig {
  std::string format = "plain";
  std::optional<std::uint64_t> seed;
  std::size_t depth_limit = kDefaultDepthLimit;
  std::size_t node_cap = kDefaultNodeCap;

  // subcommand inputs
  std::string state;
  std::string triggers;
  bool tree = false;
  std::size_t gaps = 0;
  std::size_t k = 0;
  std::string suite;
  std::size_t gaps_max = 8;
  std::size_t trials = 1;
  std::size_t verify_trials = 1000;
  std::optional<std::string> rooms_text;
  std::optional<std::string> gaps_text;
  Room leftmost = 0;
  std::string policy;

  Format fmt() const {
    if (format == "machine") return Format::Machine;
    if (format == "diagram") return Format::Diagram;
    return Format::Plain;
  }
};

// Domain failure raised by a subcommand with a ready-made message.
struct CommandFailure {
  int code;
  std::string message;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Trigger> parse_triggers(const std::string& text) {
  std::vector<Trigger> out;
  for (auto token : detail::split_commas(text)) {
    out.push_back(detail::parse_integer<Trigger>(token, "trigger"));
  }
  return out;
}

std::string join_states(const std::vector<GapState>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ',';
    out += to_string(states[i]);
  }
  return out;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const GapState initial = parse_state(cfg.state);
  const auto triggers = parse_triggers(cfg.triggers);

  Trajectory t;
  t.states.push_back(initial);
  for (std::size_t step = 0; step < triggers.size(); ++step) {
    try {
      t.states.push_back(apply_move(t.last(), triggers[step]));
    } catch (const std::invalid_argument& e) {
      throw CommandFailure{kDomainError, "step " + std::to_string(step + 1) + ": trigger " +
                                             std::to_string(triggers[step]) + ": " + e.what()};
    }
    t.triggers.push_back(triggers[step]);
  }

  switch (cfg.fmt()) {
    case Format::Machine:
      out << trajectory_to_json(t).dump(2) << '\n';
      break;
    case Format::Diagram:
      out << trajectory_to_dot(t);
      break;
    case Format::Plain:
      out << std::left << std::setw(6) << "step" << std::setw(9) << "trigger" << std::setw(16)
          << "state" << std::setw(6) << "norm" << "final\n";
      for (std::size_t i = 0; i < t.states.size(); ++i) {
        out << std::setw(6) << i << std::setw(9)
            << (i == 0 ? std::string("-") : std::to_string(t.triggers[i - 1])) << std::setw(16)
            << to_string(t.states[i]) << std::setw(6) << norm(t.states[i])
            << yes_no(is_final(t.states[i])) << '\n';
      }
      out << "final=" << yes_no(is_final(t.last())) << '\n';
      break;
  }
  return kOk;
}

void print_tree_plain(const MoveTree& tree, std::ostream& out) {
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    const auto& n = tree.nodes[id];
    out << std::string(2 * n.depth, ' ');
    if (n.via) out << *n.via << ": ";
    out << to_string(n.state);
    if (n.truncated) out << " (truncated)";
    out << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
}

int cmd_explore(const RunConfig& cfg, std::ostream& out) {
  const GapState initial = parse_state(cfg.state);
  const auto ex = explore(initial, cfg.node_cap);
  std::optional<MoveTree> tree;
  if (cfg.tree) tree = build_move_tree(initial, cfg.depth_limit, cfg.node_cap);
  const auto& r = ex.report;

  switch (cfg.fmt()) {
    case Format::Machine: {
      auto doc = graph_to_json(ex.graph);
      doc["report"] = report_to_json(r);
      if (tree) doc["tree"] = tree_to_json(*tree);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Diagram:
      out << (tree ? tree_to_dot(*tree) : graph_to_dot(ex.graph));
      break;
    case Format::Plain:
      out << "root: " << to_string(initial) << '\n';
      out << "nodes: " << r.node_count << '\n';
      out << "edges: " << r.edge_count << '\n';
      out << "finals: " << join_states(r.final_states) << '\n';
      out << "max_trajectory_length: "
          << (r.max_trajectory_length ? std::to_string(*r.max_trajectory_length) : "undefined")
          << '\n';
      out << "acyclic: " << (r.is_acyclic ? "true" : "false") << '\n';
      out << "violations: " << r.invariant_violations.size() << '\n';
      for (const auto& v : r.invariant_violations) {
        out << "  " << to_string(v.kind) << " at node " << v.step << ": " << v.detail << '\n';
      }
      if (tree) {
        out << "tree_nodes: " << tree->size() << '\n';
        out << "tree_leaves: " << join_states(tree->leaves()) << '\n';
        out << "tree_truncated: " << tree->truncated_count() << '\n';
        out << "tree:\n";
        print_tree_plain(*tree, out);
      }
      break;
  }
  return r.is_acyclic && r.invariant_violations.empty() ? kOk : kDomainError;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  Schedule s;
  try {
    s = build_final_schedule(cfg.gaps, cfg.k);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kDomainError, e.what()};
  }
  validate(s);
  if (cfg.fmt() == Format::Machine) {
    nlohmann::json doc{{"length", s.length},
                       {"triggers", s.triggers},
                       {"target", to_string(s.target)},
                       {"schedule", to_string(s)}};
    out << doc.dump(2) << '\n';
  } else {
    out << to_string(s) << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.gaps_max = cfg.gaps_max;
  opts.seed = cfg.seed.value_or(0);
  opts.trials = cfg.verify_trials;
  opts.node_cap = cfg.node_cap;
  opts.depth_limit = cfg.depth_limit;

  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(cfg.suite);
  }
  std::vector<SuiteResult> results;
  for (const auto& name : names) results.push_back(run_suite(name, opts));

  std::size_t total = 0;
  for (const auto& r : results) total += r.violations;

  if (cfg.fmt() == Format::Machine) {
    nlohmann::json doc;
    doc["seed"] = opts.seed;
    doc["gaps_max"] = opts.gaps_max;
    doc["trials"] = opts.trials;
    auto& suites = doc["suites"] = nlohmann::json::array();
    for (const auto& r : results) {
      suites.push_back({{"suite", r.name},
                        {"cases", r.cases},
                        {"violations", r.violations},
                        {"examples", r.examples}});
    }
    doc["passed"] = total == 0;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << r.name << ": cases=" << r.cases << " violations=" << r.violations << '\n';
      for (const auto& e : r.examples) out << "  ! " << e << '\n';
    }
    out << "result: " << (total == 0 ? "PASS" : "FAIL") << '\n';
  }
  return total == 0 ? kOk : kDomainError;
}

int cmd_convert(const RunConfig& cfg, std::ostream& out) {
  if (cfg.rooms_text.has_value() == cfg.gaps_text.has_value()) {
    throw CLI::ValidationError("convert needs exactly one of --rooms or --gaps");
  }
  std::optional<RoomOccupancy> rooms;
  std::optional<GapState> gaps;
  if (cfg.rooms_text) {
    rooms = parse_occupancy(*cfg.rooms_text);
    gaps = rooms_to_gaps(*rooms);
  } else {
    gaps = parse_state(*cfg.gaps_text);
    rooms = gaps_to_rooms(*gaps, cfg.leftmost);
  }
  if (cfg.fmt() == Format::Machine) {
    nlohmann::json doc{{"gaps", to_string(*gaps)}, {"rooms", rooms->rooms()}};
    out << doc.dump(2) << '\n';
  } else {
    out << (cfg.rooms_text ? to_string(*gaps) : to_string(*rooms)) << '\n';
  }
  return kOk;
}

int cmd_playout(const RunConfig& cfg, std::ostream& out) {
  const GapState initial = parse_state(cfg.state);
  const Policy policy = parse_policy(cfg.policy);
  if (policy == Policy::Random && !cfg.seed) {
    throw CLI::ValidationError("--policy random requires --seed");
  }
  const auto stats = run_playouts(initial, policy, cfg.seed.value_or(0), cfg.trials, cfg.depth_limit);
  const double mean =
      stats.trials ? static_cast<double>(stats.total_length) / static_cast<double>(stats.trials) : 0.0;

  if (cfg.fmt() == Format::Machine) {
    nlohmann::json doc{{"initial", to_string(initial)},
                       {"policy", to_string(policy)},
                       {"rng", std::string(PlayoutRng::kAlgorithm)},
                       {"trials", stats.trials},
                       {"length_min", stats.min_length},
                       {"length_max", stats.max_length},
                       {"length_mean", mean}};
    if (cfg.seed) doc["seed"] = *cfg.seed;
    auto& finals = doc["finals"] = nlohmann::json::array();
    for (const auto& [s, count] : stats.final_counts) {
      finals.push_back({{"state", to_string(s)}, {"count", count}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "initial: " << to_string(initial) << '\n';
    out << "policy: " << to_string(policy) << '\n';
    if (policy == Policy::Random) {
      out << "rng: " << PlayoutRng::kAlgorithm << " seed=" << *cfg.seed << '\n';
    }
    out << "trials: " << stats.trials << '\n';
    std::ostringstream m;
    m << std::fixed << std::setprecision(3) << mean;
    out << "length: min=" << stats.min_length << " max=" << stats.max_length
        << " mean=" << m.str() << '\n';
    out << std::left << std::setw(16) << "final" << "count\n";
    for (const auto& [s, count] : stats.final_counts) {
      out << std::setw(16) << to_string(s) << count << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Gap-encoded noisy-violinist chip-firing toolkit", "gapfire"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"plain", "machine", "diagram"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized runs (unsigned 64-bit)");
  app.add_option("--depth-limit", cfg.depth_limit, "Move limit per trajectory")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-cap", cfg.node_cap, "Distinct-state cap for exploration")
      ->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Replay a trigger sequence");
  simulate->add_option("state", cfg.state, "Initial gap state")->required();
  simulate->add_option("--triggers", cfg.triggers, "Comma-separated 1-based triggers");

  auto* explore_cmd = app.add_subcommand("explore", "Enumerate the reachability graph");
  explore_cmd->add_option("state", cfg.state, "Initial gap state")->required();
  explore_cmd->add_flag("--tree", cfg.tree, "Also emit the full move tree");

  auto* construct = app.add_subcommand("construct", "Schedule from 0^L to 1^k 2 1^(L-1-k)");
  construct->add_option("--gaps", cfg.gaps, "Number of gaps L")->required();
  construct->add_option("--k", cfg.k, "Number of leading ones")->required();

  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--gaps-max", cfg.gaps_max, "Largest exhaustive gap count");
  verify->add_option("--trials", cfg.verify_trials, "Randomized cases");

  auto* convert = app.add_subcommand("convert", "Convert between rooms and gaps");
  convert->add_option("--rooms", cfg.rooms_text, "Occupied rooms, comma-separated");
  convert->add_option("--gaps", cfg.gaps_text, "Gap state");
  convert->add_option("--leftmost", cfg.leftmost, "Room of the leftmost violinist");

  auto* playout_cmd = app.add_subcommand("playout", "Run policy-driven playouts");
  playout_cmd->add_option("state", cfg.state, "Initial gap state")->required();
  playout_cmd->add_option("--policy", cfg.policy, "leftmost, rightmost or random")
      ->required()
      ->check(CLI::IsMember({"leftmost", "rightmost", "random"}));
  playout_cmd->add_option("--trials", cfg.trials, "Number of playouts")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"gapfire"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(simulate)) return cmd_simulate(cfg, out);
    if (app.got_subcommand(explore_cmd)) return cmd_explore(cfg, out);
    if (app.got_subcommand(construct)) return cmd_construct(cfg, out);
    if (app.got_subcommand(verify)) return cmd_verify(cfg, out);
    if (app.got_subcommand(convert)) return cmd_convert(cfg, out);
    if (app.got_subcommand(playout_cmd)) return cmd_playout(cfg, out);
    return kUsageError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  } catch (const CommandFailure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace gapfire::cli
