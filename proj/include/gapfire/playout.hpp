#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "gapfire/explorer.hpp"

namespace gapfire {

enum class Policy { Leftmost, Rightmost, Random };

std::string to_string(Policy p);
// Throws std::invalid_argument for an unknown name.
Policy parse_policy(std::string_view name);

// Seeded generator for the random policy and randomized checks.
//
// Algorithm "mt64-reject/1": std::mt19937_64 seeded with the 64-bit seed
// (its output sequence is fixed by the C++ standard), and a bounded draw in
// [0, n) that rejects raw values >= 2^64 - (2^64 mod n) and returns raw mod n.
// Both steps are portable, so a seed names the same run everywhere.
class PlayoutRng {
 public:
  static constexpr std::string_view kAlgorithm = "mt64-reject/1";

  explicit PlayoutRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

// Fires triggers chosen by policy until a final state. Throws ResourceLimit if
// depth_limit moves pass without reaching one.
Trajectory playout(const GapState& initial, Policy policy, PlayoutRng& rng,
                   std::size_t depth_limit = kDefaultDepthLimit);

struct PlayoutStats {
  std::size_t trials = 0;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::size_t total_length = 0;
  std::map<GapState, std::size_t> final_counts;  // lexicographic
};

PlayoutStats run_playouts(const GapState& initial, Policy policy, std::uint64_t seed,
                          std::size_t trials, std::size_t depth_limit = kDefaultDepthLimit);

}  // namespace gapfire
