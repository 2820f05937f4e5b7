#include "gapfire/gap_state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gapfire/errors.hpp"
#include "text_util.hpp"

namespace gapfire {

Gap GapState::gap(std::size_t position) const {
  if (position < 1 || position > gaps_.size()) {
    throw std::out_of_range("gap position " + std::to_string(position) +
                            " outside 1.." + std::to_string(gaps_.size()));
  }
  return gaps_[position - 1];
}

std::size_t GapStateHash::operator()(const GapState& s) const noexcept {
  // FNV-1a over the entries.
  std::uint64_t h = 1469598103934665603ull;
  for (Gap g : s.values()) {
    h ^= g;
    h *= 1099511628211ull;
  }
  h ^= s.size();
  return static_cast<std::size_t>(h);
}

GapState flat_clusteron(std::size_t n_violinists) {
  if (n_violinists < 1) {
    throw std::invalid_argument("a clusteron needs at least one violinist");
  }
  return GapState(std::vector<Gap>(n_violinists - 1, 0));
}

std::vector<Trigger> legal_triggers(const GapState& s) {
  std::vector<Trigger> out;
  const auto gaps = s.values();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] == 0) out.push_back(i + 1);
  }
  return out;
}

GapState apply_move(const GapState& s, Trigger t) {
  if (t < 1 || t > s.size()) {
    throw std::invalid_argument("trigger " + std::to_string(t) + " outside 1.." +
                                std::to_string(s.size()));
  }
  std::vector<Gap> gaps = s.vector();
  const std::size_t idx = t - 1;
  if (gaps[idx] != 0) {
    throw IllegalTrigger(t, "position " + std::to_string(t) + " holds " +
                                std::to_string(gaps[idx]) + ", not 0");
  }
  gaps[idx] = 2;
  for (std::size_t j = idx; j-- > 0;) {
    if (gaps[j] > 0) {
      --gaps[j];
      break;
    }
  }
  for (std::size_t j = idx + 1; j < gaps.size(); ++j) {
    if (gaps[j] > 0) {
      --gaps[j];
      break;
    }
  }
  return GapState(std::move(gaps));
}

bool is_final(const GapState& s) {
  const auto gaps = s.values();
  return std::none_of(gaps.begin(), gaps.end(), [](Gap g) { return g == 0; });
}

bool is_all_zero(const GapState& s) {
  const auto gaps = s.values();
  return std::all_of(gaps.begin(), gaps.end(), [](Gap g) { return g == 0; });
}

Gap norm(const GapState& s) {
  const auto gaps = s.values();
  return std::accumulate(gaps.begin(), gaps.end(), Gap{0});
}

bool in_small_alphabet(const GapState& s) {
  const auto gaps = s.values();
  return std::all_of(gaps.begin(), gaps.end(), [](Gap g) { return g <= 2; });
}

int classify_norm_step(const GapState& prev, const GapState& next, Trigger t) {
  GapState expected;
  try {
    expected = apply_move(prev, t);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("not a move: ") + e.what());
  }
  if (expected != next) {
    throw std::invalid_argument("not a move: " + to_string(prev) + " --" +
                                std::to_string(t) + "--> " + to_string(expected) +
                                ", not " + to_string(next));
  }
  return static_cast<int>(static_cast<std::int64_t>(norm(next)) -
                          static_cast<std::int64_t>(norm(prev)));
}

int predicted_norm_delta(const GapState& s, Trigger t) {
  const auto gaps = s.values();
  if (t < 1 || t > gaps.size()) {
    throw std::invalid_argument("trigger " + std::to_string(t) + " outside 1.." +
                                std::to_string(gaps.size()));
  }
  const auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(t - 1);
  auto nonzero = [](Gap g) { return g > 0; };
  const bool left = std::any_of(gaps.begin(), mid, nonzero);
  const bool right = std::any_of(mid + 1, gaps.end(), nonzero);
  return 2 - int(left) - int(right);
}

bool check_window_bound(const GapState& s) {
  const auto gaps = s.values();
  std::vector<Gap> prefix(gaps.size() + 1, 0);
  for (std::size_t i = 0; i < gaps.size(); ++i) prefix[i + 1] = prefix[i] + gaps[i];
  for (std::size_t start = 0; start < gaps.size(); ++start) {
    for (std::size_t end = start + 1; end <= gaps.size(); ++end) {
      const Gap len = end - start;
      if (prefix[end] - prefix[start] > len + 1) return false;
    }
  }
  return true;
}

bool entry_step_law(const GapState& prev, const GapState& next) {
  if (prev.size() != next.size()) {
    throw std::invalid_argument("length mismatch: " + std::to_string(prev.size()) +
                                " vs " + std::to_string(next.size()));
  }
  const auto a = prev.values();
  const auto b = next.values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool ok = a[i] > 0 ? (b[i] == a[i] || b[i] + 1 == a[i])
                             : (b[i] == 0 || b[i] == 2);
    if (!ok) return false;
  }
  return true;
}

std::string to_string(const GapState& s) {
  const auto gaps = s.values();
  const bool compact = std::all_of(gaps.begin(), gaps.end(), [](Gap g) { return g <= 9; });
  if (compact) {
    std::string out;
    out.reserve(gaps.size());
    for (Gap g : gaps) out.push_back(static_cast<char>('0' + g));
    return out;
  }
  return "(" + detail::join(s.vector()) + ")";
}

GapState parse_state(std::string_view text) {
  text = detail::trim(text);
  bool decimal = text.find(',') != std::string_view::npos;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in state '" +
                                             std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    decimal = true;
  }
  std::vector<Gap> gaps;
  if (decimal) {
    for (auto token : detail::split_commas(text)) {
      gaps.push_back(detail::parse_integer<Gap>(token, "state"));
    }
    return GapState(std::move(gaps));
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in state '" +
                       std::string(text) + "'");
    }
    gaps.push_back(static_cast<Gap>(c - '0'));
  }
  return GapState(std::move(gaps));
}

}  // namespace gapfire
