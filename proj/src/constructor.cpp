#include "gapfire/constructor.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapfire/errors.hpp"
#include "text_util.hpp"

namespace gapfire {

GapState replay(const Schedule& s) {
  GapState state(std::vector<Gap>(s.length, 0));
  for (std::size_t step = 0; step < s.triggers.size(); ++step) {
    try {
      state = apply_move(state, s.triggers[step]);
    } catch (const std::invalid_argument& e) {
      throw InvalidSchedule(step + 1, "invalid schedule at step " + std::to_string(step + 1) +
                                          ": " + e.what());
    }
  }
  return state;
}

void validate(const Schedule& s) {
  const GapState end = replay(s);
  if (end != s.target) {
    throw InvalidSchedule(s.triggers.size(), "schedule ends at " + to_string(end) +
                                                 ", not at claimed target " +
                                                 to_string(s.target));
  }
}

Schedule lift_insert_zero(const Schedule& s, std::size_t at) {
  if (at < 1 || at > s.length + 1) {
    throw std::invalid_argument("insertion position " + std::to_string(at) + " outside 1.." +
                                std::to_string(s.length + 1));
  }
  Schedule out;
  out.length = s.length + 1;
  out.triggers.reserve(s.triggers.size());
  for (Trigger t : s.triggers) out.triggers.push_back(t < at ? t : t + 1);
  std::vector<Gap> target = s.target.vector();
  target.insert(target.begin() + static_cast<std::ptrdiff_t>(at - 1), 0);
  out.target = GapState(std::move(target));
  return out;
}

Schedule mirror(const Schedule& s) {
  Schedule out;
  out.length = s.length;
  out.triggers.reserve(s.triggers.size());
  for (Trigger t : s.triggers) out.triggers.push_back(s.length + 1 - t);
  std::vector<Gap> target = s.target.vector();
  std::reverse(target.begin(), target.end());
  out.target = GapState(std::move(target));
  return out;
}

std::vector<Trigger> migration_triggers(std::size_t k) {
  std::vector<Trigger> out;
  for (Trigger t = 1; t <= k + 1; ++t) out.push_back(t);
  return out;
}

namespace {

Schedule build_unchecked(std::size_t length, std::size_t k) {
  if (length == 1) return {1, {1}, GapState{2}};
  if (k == length - 1) return mirror(build_unchecked(length, 0));

  Schedule s = lift_insert_zero(build_unchecked(length - 1, k), 1);
  const auto tail = k == 0 ? std::vector<Trigger>{1} : migration_triggers(k);
  s.triggers.insert(s.triggers.end(), tail.begin(), tail.end());
  std::vector<Gap> target(length, 1);
  target[k] = 2;
  s.target = GapState(std::move(target));
  return s;
}

}  // namespace

Schedule build_final_schedule(std::size_t length, std::size_t k) {
  if (length < 1) throw std::invalid_argument("schedule length must be at least 1");
  if (k >= length) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside 0.." +
                                std::to_string(length - 1));
  }
  Schedule s = build_unchecked(length, k);
  validate(s);
  return s;
}

Migration migrate_single_zero(const GapState& s) {
  Migration m{s, {}};
  while (true) {
    const auto zeros = legal_triggers(m.end);
    if (zeros.empty()) return m;
    if (zeros.size() > 1) {
      throw std::invalid_argument("state " + to_string(m.end) + " has more than one zero");
    }
    m.end = apply_move(m.end, zeros.front());
    m.triggers.push_back(zeros.front());
  }
}

std::string to_string(const Schedule& s) {
  return std::to_string(s.length) + "; " + detail::join(s.triggers) + "; " + to_string(s.target);
}

Schedule parse_schedule(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 3) {
    throw ParseError("schedule needs three ';'-separated fields: '" + std::string(text) + "'");
  }
  Schedule s;
  s.length = detail::parse_integer<std::size_t>(parts[0], "schedule length");
  for (auto token : detail::split_commas(parts[1])) {
    s.triggers.push_back(detail::parse_integer<Trigger>(token, "trigger"));
  }
  s.target = parse_state(parts[2]);
  if (s.target.size() != s.length) {
    throw ParseError("schedule target has " + std::to_string(s.target.size()) +
                     " gaps, expected " + std::to_string(s.length));
  }
  return s;
}

}  // namespace gapfire
