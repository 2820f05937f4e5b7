#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapfire {

using Gap = std::uint64_t;

// 1-based position of a zero gap chosen for a move.
using Trigger = std::size_t;

// Gap-encoded state of N violinists: entry k (1-based) counts the empty rooms
// between violinist k and k+1. Absolute room positions are not stored.
class GapState {
 public:
  GapState() = default;
  explicit GapState(std::vector<Gap> gaps) : gaps_(std::move(gaps)) {}
  GapState(std::initializer_list<Gap> gaps) : gaps_(gaps) {}

  std::size_t size() const noexcept { return gaps_.size(); }
  bool empty() const noexcept { return gaps_.empty(); }

  // 1-based access; throws std::out_of_range outside 1..size().
  Gap gap(std::size_t position) const;

  std::span<const Gap> values() const noexcept { return gaps_; }
  const std::vector<Gap>& vector() const noexcept { return gaps_; }

  friend bool operator==(const GapState&, const GapState&) = default;
  friend auto operator<=>(const GapState&, const GapState&) = default;

 private:
  std::vector<Gap> gaps_;
};

struct GapStateHash {
  std::size_t operator()(const GapState& s) const noexcept;
};

// All-zero state of length n_violinists - 1.
GapState flat_clusteron(std::size_t n_violinists);

std::vector<Trigger> legal_triggers(const GapState& s);

// Sets the trigger to 2 and decrements the nearest nonzero gap on each side
// (a side with no nonzero gap is left alone).
//
// Throws IllegalTrigger if the position holds a nonzero gap and
// std::invalid_argument if it is outside 1..size().
GapState apply_move(const GapState& s, Trigger t);

bool is_final(const GapState& s);
bool is_all_zero(const GapState& s);
Gap norm(const GapState& s);

// True iff every entry lies in {0,1,2}.
bool in_small_alphabet(const GapState& s);

// Norm delta of a single move, after confirming next == apply_move(prev, t).
// Throws std::invalid_argument when the pair is not related by that move.
int classify_norm_step(const GapState& prev, const GapState& next, Trigger t);

// Norm delta predicted from the move rule alone: 2 minus the number of sides
// of t that hold a nonzero gap.
int predicted_norm_delta(const GapState& s, Trigger t);

// Every window of l consecutive gaps sums to at most l + 1.
bool check_window_bound(const GapState& s);

// Each entry either stayed, dropped by one, or went from 0 to 2.
// Throws std::invalid_argument on length mismatch.
bool entry_step_law(const GapState& prev, const GapState& next);

// State text. Emits the compact digit string (`201`) when every entry is at
// most 9, otherwise a parenthesized comma list (`(3,10)`). The empty state
// is the empty string.
std::string to_string(const GapState& s);

// Accepts `201`, `2,0,1`, `(2,0,1)`, `(12)`, `` and `()`. Parenthesized or
// comma-containing input is read as decimal entries; anything else as one
// digit per entry. Throws ParseError.
GapState parse_state(std::string_view text);

}  // namespace gapfire

template <>
struct std::hash<gapfire::GapState> : gapfire::GapStateHash {};
