#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapfire {

// Plain argument/range problems are reported as std::invalid_argument.
// The types below mark the domain-specific failure modes so callers (the
// CLI in particular) can map them to distinct exit codes.

// The chosen trigger position does not hold a zero gap.
class IllegalTrigger : public std::invalid_argument {
 public:
  IllegalTrigger(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// No two occupied rooms are adjacent at the requested label.
class NoAdjacentPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A schedule failed replay; step is 1-based.
class InvalidSchedule : public std::invalid_argument {
 public:
  InvalidSchedule(std::size_t step, const std::string& what)
      : std::invalid_argument(what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// Text input did not match one of the state/occupancy/schedule grammars.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exploration or playout ran into its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace gapfire
