#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "lcskpp/match_pairs.hpp"

namespace lcskpp {

// Ends sort before starts at the same cell, so every predecessor is final
// before any start reads the column maxima.
enum class EventKind : std::uint8_t { kEnd = 0, kStart = 1 };

struct Event {
  Index row = 0;
  Index col = 0;
  EventKind kind = EventKind::kStart;
  std::size_t pair_id = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

inline bool event_before(const Event& a, const Event& b) {
  return std::tie(a.row, a.col, a.kind, a.pair_id) <
         std::tie(b.row, b.col, b.kind, b.pair_id);
}

inline std::vector<Event> build_events(std::span<const MatchPair> pairs,
                                       Index k) {
  std::vector<Event> events;
  events.reserve(2 * pairs.size());
  for (std::size_t id = 0; id < pairs.size(); ++id) {
    const auto& p = pairs[id];
    events.push_back({p.i, p.j, EventKind::kStart, id});
    events.push_back({p.i + k, p.j + k, EventKind::kEnd, id});
  }
  std::sort(events.begin(), events.end(), event_before);
  return events;
}

}  // namespace lcskpp
