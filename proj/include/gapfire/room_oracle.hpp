#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapfire/gap_state.hpp"

namespace gapfire {

using Room = std::int64_t;

// Occupied room labels of the hotel, strictly increasing, at least one.
class RoomOccupancy {
 public:
  // Throws std::invalid_argument unless rooms is non-empty and strictly
  // increasing.
  explicit RoomOccupancy(std::vector<Room> rooms);

  const std::vector<Room>& rooms() const noexcept { return rooms_; }
  std::size_t size() const noexcept { return rooms_.size(); }
  bool occupied(Room label) const;

  friend bool operator==(const RoomOccupancy&, const RoomOccupancy&) = default;

 private:
  std::vector<Room> rooms_;
};

GapState rooms_to_gaps(const RoomOccupancy& o);

// Places the leftmost violinist at `leftmost`; the shadow loses translation so
// some representative must be picked.
RoomOccupancy gaps_to_rooms(const GapState& s, Room leftmost = 0);

// One night in the hotel: the occupants of left_room and left_room + 1 move to
// the nearest free room on their own side. Throws NoAdjacentPair unless both
// rooms are occupied.
RoomOccupancy simulate_room_move(const RoomOccupancy& o, Room left_room);

// Compares apply_move(s, t) with the hotel simulation seen through the
// conversions. Throws IllegalTrigger if s has no zero at t.
bool check_move_equivalence(const GapState& s, Trigger t);

// `-1,0,3,4`
std::string to_string(const RoomOccupancy& o);
RoomOccupancy parse_occupancy(std::string_view text);

}  // namespace gapfire
