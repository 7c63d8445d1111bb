#include <gtest/gtest.h>

#include "gdkit/order.hpp"
#include "gdkit/verify.hpp"
#include "support.hpp"

using namespace gdkit;

TEST(Majorizes, Examples) {
  EXPECT_TRUE(majorizes(BlockSizes{3, 1, 1}, BlockSizes{2, 2, 1}));
  EXPECT_TRUE(majorizes(BlockSizes{2, 2, 1}, BlockSizes{2, 2, 1}));
  EXPECT_FALSE(majorizes(BlockSizes{2, 2}, BlockSizes{3, 1}));
  EXPECT_TRUE(majorizes(BlockSizes{2, 2}, BlockSizes{1, 1, 1, 1}));  // zero padding
  EXPECT_FALSE(majorizes(BlockSizes{2, 2}, BlockSizes{1, 1, 1}));    // unequal totals
}

TEST(PairingComparison, Examples) {
  auto r = check_lemma_4_1(2, 2, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "20");
  EXPECT_EQ(r.rhs, "9");
  r = check_lemma_4_1(1, 1, 0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "1");
  EXPECT_EQ(r.rhs, "1");
  r = check_lemma_4_1(3, 1, 5);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "0");
  EXPECT_EQ(r.rhs, "0");
  EXPECT_THROW(check_lemma_4_1(1, 2, 1), Error);
}

TEST(PairingComparison, HoldsOnGrid) {
  for (std::uint64_t t2 = 1; t2 <= 8; ++t2)
    for (std::uint64_t t1 = t2; t1 <= 10; ++t1)
      for (std::uint64_t l = 0; l <= t1 + t2; ++l) EXPECT_TRUE(check_lemma_4_1(t1, t2, l).holds) << t1 << t2 << l;
}

// The factorial step used alongside the pairing inequality:
// a! b! <= (a + 1)! (b - 1)! for a >= b >= 1.
TEST(PairingComparison, FactorialCompanion) {
  for (unsigned b = 1; b <= 15; ++b)
    for (unsigned a = b; a <= 15; ++a) EXPECT_LE(factorial(a) * factorial(b), factorial(a + 1) * factorial(b - 1));
}

TEST(Transfer, Examples) {
  MemoStore memo;
  auto r = check_transfer_inequality(BlockSizes{2, 2, 1}, 0, 1, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "16");
  EXPECT_EQ(r.rhs, "0");
  r = check_transfer_inequality(BlockSizes{1, 1}, 0, 1, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "1");
  EXPECT_EQ(r.rhs, "0");
  r = check_transfer_inequality(BlockSizes{2, 2, 2}, 0, 1, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "80");
  EXPECT_EQ(r.rhs, "36");
  EXPECT_NE(r.notes.find("strict_observed=yes"), std::string::npos);
  EXPECT_THROW(check_transfer_inequality(BlockSizes{1, 2}, 0, 1, memo), Error);
}

TEST(Transfer, ExhaustiveUpToTen) {
  MemoStore memo;
  for (Size m = 1; m <= 10; ++m)
    for (const auto& r : sweep_transfer(m, memo)) EXPECT_TRUE(r.holds) << r.instance;
}

bool note_says(const Report& r, const std::string& flag) { return r.notes.find(flag) != std::string::npos; }

// Strict inequality follows once the family without block j is feasible: the
// l = t_j term then has a positive merged count. The weaker condition
// 2 max(t_i, t_j) <= sum does not suffice.
TEST(Transfer, StrictWhenFamilyWithoutDonorIsFeasible) {
  MemoStore memo;
  std::size_t covered = 0;
  for (Size m = 2; m <= 10; ++m)
    for (const auto& r : sweep_transfer(m, memo))
      if (note_says(r, "strict_merged=yes")) {
        EXPECT_TRUE(note_says(r, "strict_observed=yes")) << r.instance;
        ++covered;
      }
  EXPECT_GT(covered, 1000u);

  auto r = check_transfer_inequality(BlockSizes{2, 1, 1}, 1, 2, memo);
  EXPECT_TRUE(note_says(r, "strict_pre=yes"));
  EXPECT_TRUE(note_says(r, "strict_post=yes"));
  EXPECT_TRUE(note_says(r, "strict_merged=no"));
  EXPECT_TRUE(note_says(r, "strict_observed=no"));
  EXPECT_EQ(r.lhs, r.rhs);
}

TEST(Majorization, Examples) {
  MemoStore memo;
  auto r = check_majorization_inequality(BlockSizes{3, 1, 1}, BlockSizes{2, 2, 1}, false, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "0");
  EXPECT_EQ(r.rhs, "4");
  r = check_majorization_inequality(BlockSizes{2, 2, 1}, BlockSizes{2, 1, 1, 1}, false, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "4");
  EXPECT_EQ(r.rhs, "12");
  r = check_majorization_inequality(BlockSizes{2, 2}, BlockSizes{2, 2}, true, memo);
  EXPECT_EQ(r.notes, "equality");
  try {
    check_majorization_inequality(BlockSizes{2, 2}, BlockSizes{3, 1}, true, memo);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_comparable);
  }
}

TEST(Majorization, ExhaustiveUpToTen) {
  MemoStore memo;
  std::size_t pairs = 0;
  for (Size m = 1; m <= 10; ++m)
    for (const auto& r : sweep_majorization(m, memo)) {
      EXPECT_TRUE(r.holds) << r.claim_id << " " << r.instance;
      ++pairs;
    }
  EXPECT_GT(pairs, 500u);
}

TEST(Extremal, Examples) {
  MemoStore memo;
  auto r = extremal_values(4, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.claimed_max, Count(9));
  EXPECT_EQ(r.claimed_min, Count(4));
  // (2,1,1) ties with (2,2): P(2,1,1) = 2! * 2 = 4
  EXPECT_EQ(r.observed_min_at, (std::vector<BlockSizes>{BlockSizes{2, 2}, BlockSizes{2, 1, 1}}));
  r = extremal_values(5, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.claimed_min, Count(16));
  EXPECT_EQ(r.claimed_min_at, (BlockSizes{2, 2, 1}));
  r = extremal_values(2, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.claimed_max, Count(1));
  EXPECT_EQ(r.claimed_min, Count(1));
}

TEST(Extremal, SweptRange) {
  MemoStore memo;
  for (Size m = 2; m <= 12; ++m) {
    auto r = extremal_values(m, memo);
    EXPECT_TRUE(r.swept);
    EXPECT_TRUE(r.holds) << m;
  }
  auto big = extremal_values(20, memo);
  EXPECT_FALSE(big.swept);
  EXPECT_TRUE(big.holds);
}

TEST(Superset, Examples) {
  MemoStore memo;
  auto r = check_superset_inequality(BlockSizes{1, 1}, BlockSizes{1, 1}, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.rhs, "4");
  EXPECT_TRUE(check_superset_inequality(BlockSizes{2, 1, 1}, BlockSizes{1, 1, 1}, memo).holds);
  r = check_superset_inequality(BlockSizes{3, 1, 1}, BlockSizes{1, 1, 1}, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "0");
  EXPECT_THROW(check_superset_inequality(BlockSizes{1, 1}, BlockSizes{2, 1}, memo), Error);
}

TEST(Superset, SweepUpToEight) {
  MemoStore memo;
  for (const auto& r : verify_superset(8, memo)) EXPECT_TRUE(r.holds) << r.instance;
}

TEST(Increment, Examples) {
  MemoStore memo;
  auto r = check_increment_inequality(BlockSizes{1, 2}, 0, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "4");
  EXPECT_EQ(r.rhs, "0");
  EXPECT_TRUE(check_increment_inequality(BlockSizes{1, 2, 2}, 0, memo).holds);
  EXPECT_TRUE(check_increment_inequality(BlockSizes{2, 3, 3}, 0, memo).holds);
  EXPECT_THROW(check_increment_inequality(BlockSizes{2, 2}, 0, memo), Error);
}

TEST(Penrice, Examples) {
  MemoStore memo;
  auto r = check_penrice_bounds(1, 4, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "9");
  r = check_penrice_bounds(2, 2, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "4");
  r = check_penrice_bounds(2, 3, memo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "80");
  EXPECT_THROW(check_penrice_bounds(3, 5, memo), Error);
}

TEST(Penrice, AllSmallProducts) {
  MemoStore memo;
  for (std::uint64_t n = 2; n <= 14; ++n)
    for (std::uint64_t k = 1; k * n <= 14; ++k) EXPECT_TRUE(check_penrice_bounds(k, n, memo).holds) << k << "," << n;
}

TEST(ScanX, Examples) {
  MemoStore memo;
  auto r = scan_best_extra_block(BlockSizes{1, 1}, memo);
  ASSERT_EQ(r.table.size(), 2u);
  EXPECT_EQ(r.table[0], (std::pair<Size, Count>{1, Count(2)}));
  EXPECT_EQ(r.table[1], (std::pair<Size, Count>{2, Count(4)}));
  EXPECT_EQ(r.argmax, (std::vector<Size>{2}));
  EXPECT_EQ(scan_best_extra_block(BlockSizes{2, 2}, memo).table.size(), 3u);
  EXPECT_EQ(scan_best_extra_block(BlockSizes{1, 1, 1}, memo).table.size(), 3u);
}

// Outside [max t, sum t] an extra block never beats the in-bracket argmax.
TEST(ScanX, BracketContainsTheMaximum) {
  MemoStore memo;
  for (Size s = 2; s <= 7; ++s)
    for (const auto& p : partitions(s)) {
      if (p.size() < 2) continue;
      auto r = scan_best_extra_block(p, memo);
      for (Size x = 0; x <= s + 3; ++x) {
        std::vector<Size> v{x};
        v.insert(v.end(), p.sizes().begin(), p.sizes().end());
        EXPECT_LE(count_labeled(BlockSizes(v), memo), r.best) << p.str() << " X=" << x;
      }
    }
}
