#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lcskpp/events.hpp"
#include "lcskpp/match_pairs.hpp"
#include "lcskpp/prefix_max.hpp"

namespace lcskpp {

enum class Mode { kLcskpp, kLcsk };

enum class LinkKind : std::uint8_t { kNone, kPrecedes, kContinues };

// Predecessor of a pair on its best chain.
struct Link {
  LinkKind kind = LinkKind::kNone;
  std::size_t pair_id = 0;

  friend bool operator==(const Link&, const Link&) = default;
};

struct ChainResult {
  Mode mode = Mode::kLcskpp;
  // LCSk++ length, or the LCSk segment count in kLcsk mode.
  Score value = 0;
  // Best chain length (in symbols) ending at each pair.
  std::vector<Score> dp;
  std::vector<Link> back;
  std::optional<std::size_t> best_pair;
};

namespace detail {

inline constexpr std::size_t kNoPair = std::numeric_limits<std::size_t>::max();

// Column-max entry; a higher score wins, equal scores prefer the lower id.
struct ColumnBest {
  Score score = 0;
  std::size_t pair_id = kNoPair;
};

struct ColumnBestLess {
  bool operator()(const ColumnBest& a, const ColumnBest& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.pair_id > b.pair_id;
  }
};

}  // namespace detail

// Row-major event sweep over pre-extracted, row-major-sorted match pairs.
// `y_length` sizes the column index; it must be >= every j + k.
inline ChainResult sweep_pairs(std::span<const MatchPair> pairs, Index k,
                               Index y_length, Mode mode = Mode::kLcskpp) {
  require_positive_k(k);
  ChainResult result;
  result.mode = mode;
  result.dp.assign(pairs.size(), 0);
  result.back.assign(pairs.size(), Link{});
  if (pairs.empty()) return result;

  assert(std::is_sorted(pairs.begin(), pairs.end()));
  const auto events = build_events(pairs, k);
  PrefixMaxIndex<detail::ColumnBest, detail::ColumnBestLess> column_max(
      static_cast<std::size_t>(y_length + k + 1));

  for (const Event& ev : events) {
    const std::size_t p = ev.pair_id;
    if (ev.kind == EventKind::kStart) {
      const auto best = column_max.query(static_cast<std::size_t>(ev.col));
      result.dp[p] = k + best.score;
      if (best.pair_id != detail::kNoPair) {
        result.back[p] = {LinkKind::kPrecedes, best.pair_id};
      }
      continue;
    }
    if (mode == Mode::kLcskpp) {
      const auto& pair = pairs[p];
      if (auto g = continuation_lookup(pairs, pair.i - 1, pair.j - 1)) {
        if (result.dp[*g] + 1 >= result.dp[p]) {
          result.dp[p] = result.dp[*g] + 1;
          result.back[p] = {LinkKind::kContinues, *g};
        }
      }
    }
    column_max.update(static_cast<std::size_t>(ev.col),
                      {result.dp[p], p});
  }

  // First maximum wins, i.e. the lowest pair id.
  const auto best_it = std::max_element(result.dp.begin(), result.dp.end());
  result.best_pair = static_cast<std::size_t>(best_it - result.dp.begin());
  result.value = mode == Mode::kLcsk ? *best_it / k : *best_it;
  return result;
}

inline ChainResult sweep(SequenceView x, SequenceView y, Index k,
                         Mode mode = Mode::kLcskpp,
                         const MatchOptions& options = {}) {
  require_positive_k(k);
  const auto pairs = find_match_pairs(x, y, k, options);
  return sweep_pairs(pairs, k, static_cast<Index>(y.size()), mode);
}

inline Score lcskpp(SequenceView x, SequenceView y, Index k) {
  return sweep(x, y, k, Mode::kLcskpp).value;
}

inline Score lcsk(SequenceView x, SequenceView y, Index k) {
  return sweep(x, y, k, Mode::kLcsk).value;
}

struct IndexPair {
  Index i = 0;
  Index j = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// Matched index pairs of the optimal k++ common subsequence, ascending.
// A pair reached by continuation adds only its last cell; any other pair
// adds all k of its cells.
inline std::vector<IndexPair> reconstruct(const ChainResult& result,
                                          std::span<const MatchPair> pairs,
                                          Index k) {
  assert(result.mode == Mode::kLcskpp);
  std::vector<IndexPair> out;
  if (!result.best_pair) return out;
  out.reserve(static_cast<std::size_t>(result.value));

  std::optional<std::size_t> cur = result.best_pair;
  while (cur) {
    const auto& p = pairs[*cur];
    const Link link = result.back[*cur];
    if (link.kind == LinkKind::kContinues) {
      assert(continues(p, pairs[link.pair_id]));
      out.push_back({p.i + k - 1, p.j + k - 1});
    } else {
      for (Index t = k - 1; t >= 0; --t) out.push_back({p.i + t, p.j + t});
    }
    if (link.kind == LinkKind::kNone) {
      cur.reset();
    } else {
      assert(link.kind != LinkKind::kPrecedes ||
             precedes(pairs[link.pair_id], p, k));
      cur = link.pair_id;
    }
  }
  std::reverse(out.begin(), out.end());
  assert(static_cast<Score>(out.size()) == result.value);
  return out;
}

}  // namespace lcskpp
