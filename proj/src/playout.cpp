#include "gapfire/playout.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gapfire/errors.hpp"

namespace gapfire {

std::string to_string(Policy p) {
  switch (p) {
    case Policy::Leftmost: return "leftmost";
    case Policy::Rightmost: return "rightmost";
    case Policy::Random: return "random";
  }
  return "unknown";
}

Policy parse_policy(std::string_view name) {
  if (name == "leftmost") return Policy::Leftmost;
  if (name == "rightmost") return Policy::Rightmost;
  if (name == "random") return Policy::Random;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

std::uint64_t PlayoutRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of n that fits, expressed as a rejection threshold.
  const std::uint64_t limit = kMax - (kMax % n + 1) % n;
  std::uint64_t raw;
  do {
    raw = engine_();
  } while (raw > limit);
  return raw % n;
}

Trajectory playout(const GapState& initial, Policy policy, PlayoutRng& rng,
                   std::size_t depth_limit) {
  Trajectory t;
  t.states.push_back(initial);
  while (true) {
    const auto triggers = legal_triggers(t.last());
    if (triggers.empty()) return t;
    if (t.triggers.size() >= depth_limit) {
      throw ResourceLimit(depth_limit, "playout from " + to_string(initial) +
                                           " did not terminate within " +
                                           std::to_string(depth_limit) + " moves");
    }
    Trigger pick = 0;
    switch (policy) {
      case Policy::Leftmost: pick = triggers.front(); break;
      case Policy::Rightmost: pick = triggers.back(); break;
      case Policy::Random: pick = triggers[rng.below(triggers.size())]; break;
    }
    t.states.push_back(apply_move(t.last(), pick));
    t.triggers.push_back(pick);
  }
}

PlayoutStats run_playouts(const GapState& initial, Policy policy, std::uint64_t seed,
                          std::size_t trials, std::size_t depth_limit) {
  PlayoutRng rng(seed);
  PlayoutStats stats;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto t = playout(initial, policy, rng, depth_limit);
    const std::size_t len = t.triggers.size();
    stats.min_length = stats.trials == 0 ? len : std::min(stats.min_length, len);
    stats.max_length = std::max(stats.max_length, len);
    stats.total_length += len;
    ++stats.final_counts[t.last()];
    ++stats.trials;
  }
  return stats;
}

}  // namespace gapfire
