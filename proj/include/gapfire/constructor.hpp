#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gapfire/gap_state.hpp"

namespace gapfire {

// A trigger sequence that claims to take the all-zero state of `length` gaps
// to `target`.
struct Schedule {
  std::size_t length = 0;
  std::vector<Trigger> triggers;
  GapState target;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Folds apply_move over the triggers starting from 0^length. Throws
// InvalidSchedule naming the 1-based step of the first illegal trigger.
GapState replay(const Schedule& s);

// replay(s) must equal s.target; throws InvalidSchedule otherwise.
void validate(const Schedule& s);

// Inserts an untouched zero gap at 1-based position `at` (1..length+1):
// triggers >= at shift right by one. Throws std::invalid_argument when `at`
// is out of range.
Schedule lift_insert_zero(const Schedule& s, std::size_t at);

// Reflects triggers T -> length+1-T and reverses the target. The move rule is
// left-right symmetric, so validity carries over.
Schedule mirror(const Schedule& s);

// Schedule from 0^length to 1^k 2 1^(length-1-k), replay-validated.
//   length 1:         [1]
//   k == 0:           lift(build(length-1, 0), 1) reaches 0 2 1^(length-2),
//                     then trigger 1
//   k == length-1:    mirror(build(length, 0))
//   otherwise:        lift(build(length-1, k), 1) reaches 0 1^k 2 1^(length-2-k),
//                     then migrate the zero with triggers 1..k+1
// Throws std::invalid_argument unless length >= 1 and k < length.
Schedule build_final_schedule(std::size_t length, std::size_t k);

// Triggers 1..k+1 that walk the leading zero of 0 1^k 2 ... rightward until
// it is absorbed next to the 2.
std::vector<Trigger> migration_triggers(std::size_t k);

struct Migration {
  GapState end;
  std::vector<Trigger> triggers;
};

// Repeatedly fires the unique zero of s until no zero is left. Throws
// std::invalid_argument if a state along the way has more than one zero.
Migration migrate_single_zero(const GapState& s);

// `L; T1,T2,...; target`
std::string to_string(const Schedule& s);
// Throws ParseError.
Schedule parse_schedule(std::string_view text);

}  // namespace gapfire
