#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lcskpp/oracle.hpp"
#include "test_util.hpp"

namespace lcskpp::oracle {
namespace {

// Exhaustive search over equal-size index subsets; only viable for strings
// of a handful of symbols.
Score brute_force_lcskpp(SequenceView x, SequenceView y, Index k) {
  const auto nx = x.size(), ny = y.size();
  Score best = 0;
  std::vector<Index> is, js;
  for (std::uint32_t mx = 1; mx < (1u << nx); ++mx) {
    is.clear();
    for (std::size_t b = 0; b < nx; ++b) if (mx >> b & 1) is.push_back(static_cast<Index>(b));
    if (static_cast<Score>(is.size()) <= best) continue;
    for (std::uint32_t my = 1; my < (1u << ny); ++my) {
      if (static_cast<std::size_t>(__builtin_popcount(my)) != is.size()) continue;
      js.clear();
      for (std::size_t b = 0; b < ny; ++b) if (my >> b & 1) js.push_back(static_cast<Index>(b));
      if (validate_chain(x, y, k, is, js)) {
        best = static_cast<Score>(is.size());
        break;
      }
    }
  }
  return best;
}

TEST(LcskppDp, AbcbaExamples) {
  EXPECT_EQ(lcskpp_dp("ABCBA", "ABCBA", 3), 5);
  EXPECT_EQ(lcskpp_dp("ABCBA", "ABCDE", 3), 3);
}

TEST(LcskppDp, NoSharedSymbol) { EXPECT_EQ(lcskpp_dp("AAAA", "CCCC", 1), 0); }

TEST(LcskppDp, FigureOneStrings) { EXPECT_EQ(lcskpp_dp("ATTATG", "CTATAGAGTA", 2), 4); }

TEST(LcskppDp, RejectsZeroK) {
  EXPECT_THROW(lcskpp_dp("A", "A", 0), InvalidParameter);
  EXPECT_THROW(lcsk_dp("A", "A", 0), InvalidParameter);
  EXPECT_THROW(count_match_pairs_naive("A", "A", 0), InvalidParameter);
}

TEST(LcskppDp, AgreesWithExhaustiveSearch) {
  EXPECT_EQ(brute_force_lcskpp("ATTATG", "CTATAGAGTA", 2), 4);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 150; ++t) {
    const auto x = testing::random_string(rng, 7, 2 + t % 3);
    const auto y = testing::random_string(rng, 7, 2 + t % 3);
    const Index k = 1 + static_cast<Index>(rng() % 3);
    ASSERT_EQ(lcskpp_dp(x, y, k), brute_force_lcskpp(x, y, k)) << x << " / " << y << " k=" << k;
  }
}

TEST(LcskDp, Examples) {
  EXPECT_EQ(lcsk_dp("ABCBA", "ABCBA", 3), 1);
  EXPECT_EQ(lcsk_dp("ABCBA", "ABCDE", 3), 1);
  EXPECT_EQ(lcsk_dp("ABCDE", "ABCDE", 2), 2);
  EXPECT_EQ(lcsk_dp("AB", "CD", 1), 0);
}

TEST(LcsClassic, Examples) {
  EXPECT_EQ(lcs_classic("ABCBDAB", "BDCABA"), 4);
  EXPECT_EQ(lcs_classic("GATTACA", "GATTACA"), 7);
  EXPECT_EQ(lcs_classic("GATTACA", ""), 0);
}

TEST(CountMatchPairsNaive, Examples) {
  EXPECT_EQ(count_match_pairs_naive("ATTATG", "CTATAGAGTA", 2), 5);
  EXPECT_EQ(count_match_pairs_naive("AAA", "AAA", 1), 9);
  EXPECT_EQ(count_match_pairs_naive("AAA", "AAA", 4), 0);
}

TEST(ValidateChain, Examples) {
  const std::vector<Index> full = {0, 1, 2, 3, 4};
  EXPECT_TRUE(validate_chain("ABCBA", "ABCBA", 3, full, full));
  const std::vector<Index> two = {0, 1};
  EXPECT_FALSE(validate_chain("ABCBA", "ABCBA", 3, two, two));
  EXPECT_TRUE(validate_chain("ABCBA", "ABCBA", 3, {}, {}));
}

TEST(ValidateChain, RejectsMalformed) {
  const std::vector<Index> a = {0, 1}, b = {0}, rev = {1, 0}, out = {0, 9};
  EXPECT_FALSE(validate_chain("AB", "AB", 1, a, b));       // size mismatch
  EXPECT_FALSE(validate_chain("AB", "BA", 1, rev, rev));   // not increasing
  EXPECT_FALSE(validate_chain("AB", "AB", 1, out, out));   // out of range
  EXPECT_FALSE(validate_chain("AB", "BA", 1, a, a));       // symbols differ
  EXPECT_FALSE(validate_chain("AB", "AB", 0, a, a));
}

TEST(ValidateChain, BlocksMustBeAlignedInBothStrings) {
  // X runs {0..3} but Y jumps after two symbols: blocks {0,1} and {2,3}.
  const std::vector<Index> is = {0, 1, 2, 3}, js = {0, 1, 3, 4};
  EXPECT_TRUE(validate_chain("ABCD", "ABxCD", 2, is, js));
  EXPECT_FALSE(validate_chain("ABCD", "ABxCD", 3, is, js));
  // Breaks at different offsets leave a one-symbol aligned block.
  const std::vector<Index> i2 = {0, 1, 2, 5, 6, 7}, j2 = {0, 1, 4, 5, 6, 7};
  EXPECT_FALSE(validate_chain("ABCxxDEF", "ABxxCDEF", 2, i2, j2));
}

TEST(OracleProperties, RandomInstances) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto x = testing::random_string(rng, 30, 2 + t % 4);
    const auto y = testing::random_string(rng, 30, 2 + t % 4);
    const Index k = 1 + static_cast<Index>(rng() % 5);
    ASSERT_EQ(lcskpp_dp(x, y, 1), lcs_classic(x, y));
    ASSERT_EQ(lcskpp_dp(x, y, k), lcskpp_dp(y, x, k));
    ASSERT_GE(lcskpp_dp(x, y, k), k * lcsk_dp(x, y, k));
    const auto table = lcskpp_table(x, y, k);
    for (std::size_t i = 0; i < table.rows(); ++i) {
      for (std::size_t j = 0; j < table.cols(); ++j) {
        if (i == 0 || j == 0) {
          ASSERT_EQ(table(i, j), 0);
        }
        if (i > 0) {
          ASSERT_GE(table(i, j), table(i - 1, j));
        }
        if (j > 0) {
          ASSERT_GE(table(i, j), table(i, j - 1));
        }
      }
    }
  }
}

}  // namespace
}  // namespace lcskpp::oracle
