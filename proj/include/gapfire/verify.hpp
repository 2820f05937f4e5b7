#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapfire/explorer.hpp"

namespace gapfire {

// Sizes and randomisation for the invariant suites. Exhaustive parts run up
// to gaps_max (clamped per suite where the state space is exponential);
// randomized parts run `trials` seeded cases.
struct VerifyOptions {
  std::size_t gaps_max = 8;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t depth_limit = kDefaultDepthLimit;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violations, for diagnostics
};

// norm-law, window-bound, alphabet, oracle-equivalence, acyclic, constructor,
// lemma-lift.
const std::vector<std::string>& suite_names();

// Runs one named suite; "all" is handled by the caller. Throws
// std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& opts);

// Every state of `length` gaps with entries in 0..max_entry, in lexicographic
// order.
std::vector<GapState> all_states(std::size_t length, Gap max_entry);

}  // namespace gapfire
