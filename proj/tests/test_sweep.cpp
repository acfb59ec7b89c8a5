#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lcskpp/oracle.hpp"
#include "lcskpp/sweep.hpp"
#include "test_util.hpp"

namespace lcskpp {
namespace {

TEST(BuildEvents, SinglePair) {
  const std::vector<MatchPair> pairs = {{0, 0}};
  const auto events = build_events(pairs, 2);
  const std::vector<Event> expected = {{0, 0, EventKind::kStart, 0},
                                       {2, 2, EventKind::kEnd, 0}};
  EXPECT_EQ(events, expected);
}

TEST(BuildEvents, Empty) { EXPECT_TRUE(build_events({}, 3).empty()); }

TEST(BuildEvents, FigureOneOrdering) {
  const auto pairs = find_match_pairs("ATTATG", "CTATAGAGTA", 2);
  const auto events = build_events(pairs, 2);
  ASSERT_EQ(events.size(), 10u);
  EXPECT_EQ(events.front(), (Event{0, 2, EventKind::kStart, 0}));
  // Pairwise: row-major, and an end never follows a start at the same cell.
  for (std::size_t a = 0; a < events.size(); ++a) {
    for (std::size_t b = a + 1; b < events.size(); ++b) {
      const auto& ea = events[a];
      const auto& eb = events[b];
      ASSERT_TRUE(ea.row < eb.row || (ea.row == eb.row && ea.col <= eb.col));
      if (ea.row == eb.row && ea.col == eb.col) {
        ASSERT_FALSE(ea.kind == EventKind::kStart && eb.kind == EventKind::kEnd);
      }
    }
  }
  // End of c=(0,2) lands on (2,4), after the start of d=(2,3).
  std::size_t end_c = 0, start_d = 0;
  for (std::size_t t = 0; t < events.size(); ++t) {
    if (events[t] == Event{2, 4, EventKind::kEnd, 0}) end_c = t;
    if (events[t] == Event{2, 3, EventKind::kStart, 2}) start_d = t;
  }
  EXPECT_LT(start_d, end_c);
}

TEST(BuildEvents, EndBeforeStartAtSameCell) {
  // (0,0) ends at (2,2) where (2,2) starts.
  const std::vector<MatchPair> pairs = {{0, 0}, {2, 2}};
  const auto events = build_events(pairs, 2);
  const std::vector<Event> expected = {{0, 0, EventKind::kStart, 0},
                                       {2, 2, EventKind::kEnd, 0},
                                       {2, 2, EventKind::kStart, 1},
                                       {4, 4, EventKind::kEnd, 1}};
  EXPECT_EQ(events, expected);
}

TEST(Sweep, AbcbaExamples) {
  EXPECT_EQ(lcskpp("ABCBA", "ABCBA", 3), 5);
  EXPECT_EQ(lcskpp("ABCBA", "ABCDE", 3), 3);
  EXPECT_EQ(lcsk("ABCBA", "ABCBA", 3), 1);
  EXPECT_EQ(lcsk("ABCBA", "ABCDE", 3), 1);
}

TEST(Sweep, FigureOneValue) {
  const auto result = sweep("ATTATG", "CTATAGAGTA", 2);
  EXPECT_EQ(result.value, 4);
  // Optimal chain c -> e, i.e. (0,2) then (2,8).
  const auto pairs = find_match_pairs("ATTATG", "CTATAGAGTA", 2);
  const auto chain = reconstruct(result, pairs, 2);
  const std::vector<IndexPair> expected = {{0, 2}, {1, 3}, {2, 8}, {3, 9}};
  EXPECT_EQ(chain, expected);
  EXPECT_EQ(sweep("ATTATG", "CTATAGAGTA", 2, Mode::kLcsk).value, 2);
}

// Values from exhaustive enumeration of index sets (test-time script).
TEST(Sweep, FrozenSmallInstances) {
  struct Case { const char* x; const char* y; Index k; Score pp; Score k_count; };
  const std::vector<Case> cases = {
      {"AABBAABB", "ABABBAAB", 2, 6, 3},
      {"GATTACA", "TACAGATT", 3, 4, 1},
      {"ACGTACGT", "ACGTTACG", 2, 7, 3},
      {"ABAB", "BABA", 1, 3, 3},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(lcskpp(c.x, c.y, c.k), c.pp) << c.x << " " << c.y;
    EXPECT_EQ(lcsk(c.x, c.y, c.k), c.k_count) << c.x << " " << c.y;
  }
}

TEST(Sweep, EdgeCases) {
  EXPECT_EQ(lcskpp("", "", 1), 0);
  EXPECT_EQ(lcskpp("ABC", "", 1), 0);
  EXPECT_EQ(lcskpp("ABC", "ABC", 4), 0);
  EXPECT_THROW(lcskpp("ABC", "ABC", 0), InvalidParameter);
  EXPECT_THROW(sweep("ABC", "ABC", 0, Mode::kLcsk), InvalidParameter);
  const auto none = sweep("AB", "CD", 1);
  EXPECT_EQ(none.value, 0);
  EXPECT_FALSE(none.best_pair.has_value());
  EXPECT_TRUE(reconstruct(none, {}, 1).empty());
}

TEST(Sweep, IdentityPairGivesLength) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto x = testing::random_string(rng, 80, 4, 1);
    const Index k = 1 + static_cast<Index>(rng() % x.size());
    EXPECT_EQ(lcskpp(x, x, k), static_cast<Score>(x.size())) << x << " k=" << k;
  }
}

TEST(Sweep, ReconstructIdentity) {
  const auto pairs = find_match_pairs("ABCBA", "ABCBA", 3);
  const auto result = sweep_pairs(pairs, 3, 5);
  const auto chain = reconstruct(result, pairs, 3);
  std::vector<Index> is, js;
  testing::split_indices(chain, is, js);
  EXPECT_EQ(is, (std::vector<Index>{0, 1, 2, 3, 4}));
  EXPECT_EQ(js, is);
}

// Oracle equivalence plus reconstruction soundness on a reduced grid; the
// acceptance binary runs the full 10k-instance version.
TEST(Sweep, MatchesOraclesOnRandomGrid) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1500; ++t) {
    const int alphabet = std::vector<int>{2, 4, 20}[t % 3];
    const auto x = testing::random_string(rng, 40, alphabet);
    const auto y = testing::random_string(rng, 40, alphabet);
    const Index k = 1 + static_cast<Index>(rng() % 6);
    const auto pairs = find_match_pairs(x, y, k);
    const auto pp = sweep_pairs(pairs, k, static_cast<Index>(y.size()));
    ASSERT_EQ(pp.value, oracle::lcskpp_dp(x, y, k)) << x << " / " << y << " k=" << k;
    ASSERT_EQ(sweep_pairs(pairs, k, static_cast<Index>(y.size()), Mode::kLcsk).value,
              oracle::lcsk_dp(x, y, k));
    std::vector<Index> is, js;
    testing::split_indices(reconstruct(pp, pairs, k), is, js);
    ASSERT_EQ(static_cast<Score>(is.size()), pp.value);
    ASSERT_TRUE(oracle::validate_chain(x, y, k, is, js)) << x << " / " << y;
  }
}

TEST(Sweep, MetricProperties) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 400; ++t) {
    const int alphabet = std::vector<int>{2, 4, 20}[t % 3];
    const auto x = testing::random_string(rng, 120, alphabet);
    const auto y = testing::random_string(rng, 120, alphabet);
    const Index k = 1 + static_cast<Index>(rng() % 8);
    const Score v = lcskpp(x, y, k);
    EXPECT_GE(v, 0);
    EXPECT_LE(v, static_cast<Score>(std::min(x.size(), y.size())));
    EXPECT_EQ(v, lcskpp(y, x, k));
    EXPECT_LE(lcskpp(x, y, k + 1), v);
    EXPECT_LE(k * lcsk(x, y, k), v);
  }
}

TEST(Sweep, KOneIsClassicLcs) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto x = testing::random_string(rng, 100, 4);
    const auto y = testing::random_string(rng, 100, 4);
    ASSERT_EQ(lcskpp(x, y, 1), oracle::lcs_classic(x, y));
  }
}

TEST(Sweep, Deterministic) {
  std::mt19937_64 rng(8);
  const auto x = testing::random_string(rng, 300, 2, 300);
  const auto y = testing::random_string(rng, 300, 2, 300);
  const auto pairs = find_match_pairs(x, y, 3);
  const auto a = sweep_pairs(pairs, 3, 300);
  const auto b = sweep_pairs(find_match_pairs(x, y, 3), 3, 300);
  EXPECT_EQ(a.dp, b.dp);
  EXPECT_EQ(a.back, b.back);
  EXPECT_EQ(a.best_pair, b.best_pair);
  EXPECT_EQ(build_events(pairs, 3), build_events(pairs, 3));
  EXPECT_EQ(reconstruct(a, pairs, 3), reconstruct(b, pairs, 3));
}

TEST(Sweep, BackPointersFollowRelations) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto x = testing::random_string(rng, 50, 2);
    const auto y = testing::random_string(rng, 50, 2);
    const Index k = 1 + static_cast<Index>(rng() % 4);
    const auto pairs = find_match_pairs(x, y, k);
    const auto r = sweep_pairs(pairs, k, static_cast<Index>(y.size()));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& link = r.back[p];
      if (link.kind == LinkKind::kPrecedes) {
        ASSERT_TRUE(precedes(pairs[link.pair_id], pairs[p], k));
        ASSERT_EQ(r.dp[p], r.dp[link.pair_id] + k);
      } else if (link.kind == LinkKind::kContinues) {
        ASSERT_TRUE(continues(pairs[p], pairs[link.pair_id]));
        ASSERT_EQ(r.dp[p], r.dp[link.pair_id] + 1);
      } else {
        ASSERT_EQ(r.dp[p], k);
      }
    }
  }
}

}  // namespace
}  // namespace lcskpp
