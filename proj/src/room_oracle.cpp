#include "gapfire/room_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapfire/errors.hpp"
#include "text_util.hpp"

namespace gapfire {

RoomOccupancy::RoomOccupancy(std::vector<Room> rooms) : rooms_(std::move(rooms)) {
  if (rooms_.empty()) {
    throw std::invalid_argument("an occupancy needs at least one violinist");
  }
  for (std::size_t i = 1; i < rooms_.size(); ++i) {
    if (rooms_[i] <= rooms_[i - 1]) {
      throw std::invalid_argument("room labels must be strictly increasing");
    }
  }
}

bool RoomOccupancy::occupied(Room label) const {
  return std::binary_search(rooms_.begin(), rooms_.end(), label);
}

GapState rooms_to_gaps(const RoomOccupancy& o) {
  const auto& r = o.rooms();
  std::vector<Gap> gaps;
  gaps.reserve(r.size() - 1);
  for (std::size_t k = 1; k < r.size(); ++k) {
    gaps.push_back(static_cast<Gap>(r[k] - r[k - 1] - 1));
  }
  return GapState(std::move(gaps));
}

RoomOccupancy gaps_to_rooms(const GapState& s, Room leftmost) {
  std::vector<Room> rooms;
  rooms.reserve(s.size() + 1);
  rooms.push_back(leftmost);
  for (Gap g : s.values()) rooms.push_back(rooms.back() + static_cast<Room>(g) + 1);
  return RoomOccupancy(std::move(rooms));
}

RoomOccupancy simulate_room_move(const RoomOccupancy& o, Room left_room) {
  if (!o.occupied(left_room) || !o.occupied(left_room + 1)) {
    throw NoAdjacentPair("rooms " + std::to_string(left_room) + " and " +
                         std::to_string(left_room + 1) + " are not both occupied");
  }
  Room to_left = left_room - 1;
  while (o.occupied(to_left)) --to_left;
  Room to_right = left_room + 2;
  while (o.occupied(to_right)) ++to_right;

  std::vector<Room> rooms;
  rooms.reserve(o.size());
  for (Room r : o.rooms()) {
    if (r == left_room) {
      rooms.push_back(to_left);
    } else if (r == left_room + 1) {
      rooms.push_back(to_right);
    } else {
      rooms.push_back(r);
    }
  }
  std::sort(rooms.begin(), rooms.end());
  return RoomOccupancy(std::move(rooms));
}

bool check_move_equivalence(const GapState& s, Trigger t) {
  const GapState by_gaps = apply_move(s, t);
  const RoomOccupancy hotel = gaps_to_rooms(s, 0);
  // Violinist t sits at rooms[t] (1-based), left of the zero gap t.
  const Room left_room = hotel.rooms()[t - 1];
  return rooms_to_gaps(simulate_room_move(hotel, left_room)) == by_gaps;
}

std::string to_string(const RoomOccupancy& o) { return detail::join(o.rooms()); }

RoomOccupancy parse_occupancy(std::string_view text) {
  std::vector<Room> rooms;
  for (auto token : detail::split_commas(text)) {
    rooms.push_back(detail::parse_integer<Room>(token, "occupancy"));
  }
  try {
    return RoomOccupancy(std::move(rooms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad occupancy '") + std::string(text) + "': " + e.what());
  }
}

}  // namespace gapfire
