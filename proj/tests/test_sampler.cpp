#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <set>
#include <random>

#include "gdkit/counting.hpp"
#include "gdkit/oracle.hpp"
#include "gdkit/sampler.hpp"
#include "support.hpp"

using namespace gdkit;

TEST(Pairing, Examples) {
  auto gd = construct_gd_pairing(BlockSizes{1, 1});
  EXPECT_EQ(gd.image, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(word_str(project_to_afl(gd)), "21");

  gd = construct_gd_pairing(BlockSizes{2, 2});
  EXPECT_TRUE(gd.is_valid());
  for (std::size_t e = 0; e < 4; ++e) EXPECT_EQ(gd.image[gd.image[e]], e);  // row swaps are involutions
  EXPECT_EQ(word_str(project_to_afl(gd)), "2211");

  gd = construct_gd_pairing(BlockSizes{1, 1, 1});
  EXPECT_TRUE(gd.is_valid());
  for (std::size_t e = 0; e < 3; ++e) EXPECT_NE(gd.image[gd.image[e]], e);  // a 3-cycle
}

TEST(Greedy, Examples) {
  EXPECT_EQ(construct_gd_greedy(BlockSizes{1, 1}).image, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(construct_gd_greedy(BlockSizes{2, 1, 1}).is_valid());
  auto gd = construct_gd_greedy(BlockSizes{3, 2, 1});
  EXPECT_TRUE(gd.is_valid());
  EXPECT_EQ(gd.image.size(), 6u);
}

TEST(Constructions, RejectInfeasible) {
  for (auto f : {construct_gd_pairing, construct_gd_greedy}) {
    try {
      f(BlockSizes{3, 1, 1});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::infeasible);
    }
  }
  EXPECT_THROW(sample_gd_uniform(BlockSizes{3, 1, 1}, 1), Error);
}

TEST(Constructions, ValidOnEveryFeasibleSmallComposition) {
  std::uint64_t seed = 0;
  for (Size s = 1; s <= 9; ++s)
    for (const auto& c : compositions(s)) {
      if (!is_feasible(c)) continue;
      EXPECT_TRUE(construct_gd_pairing(c).is_valid()) << c.str();
      EXPECT_TRUE(construct_gd_greedy(c).is_valid()) << c.str();
      EXPECT_TRUE(sample_gd_uniform(c, ++seed).is_valid()) << c.str();
    }
}

TEST(Constructions, ValidOnLargerRandomFamilies) {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 100) {
    auto b = ref::random_blocks(rng, 200, 12, true);
    if (!is_feasible(b)) continue;
    ++done;
    EXPECT_TRUE(construct_gd_pairing(b).is_valid()) << b.str();
    EXPECT_TRUE(construct_gd_greedy(b).is_valid()) << b.str();
  }
}

TEST(Uniform, UniqueGdOnTwoSingletons) {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_EQ(sample_gd_uniform(BlockSizes{1, 1}, seed).image, (std::vector<std::size_t>{1, 0}));
}

TEST(Uniform, SameSeedSameSample) {
  for (std::uint64_t seed : {1u, 7u, 99u})
    EXPECT_EQ(sample_gd_uniform(BlockSizes{3, 2, 2}, seed).image, sample_gd_uniform(BlockSizes{3, 2, 2}, seed).image);
  EXPECT_THROW(sample_gd_uniform(repeated(1, 13), 1), Error);
}

TEST(Projection, Examples) {
  std::set<std::string> words;
  for (const auto& image : oracle::enumerate_gds(BlockSizes{2, 1, 1}))
    words.insert(word_str(project_to_afl(GdAssignment{BlockSizes{2, 1, 1}, image})));
  EXPECT_EQ(words, (std::set<std::string>{"2311", "3211"}));
  EXPECT_EQ(word_str(Word{0, 9, 10}), "1,10,11");
}

TEST(Projection, EachAflHitBlockFactorialTimes) {
  for (Size s = 1; s <= 7; ++s)
    for (const auto& c : compositions(s)) {
      std::map<Word, std::uint64_t> hits;
      for (const auto& image : oracle::enumerate_gds(c)) ++hits[project_to_afl(GdAssignment{c, image})];
      EXPECT_EQ(Count(hits.size()), count_unlabeled(c)) << c.str();
      for (const auto& [w, n] : hits) EXPECT_EQ(Count(n), block_factorials(c)) << c.str() << " " << word_str(w);
    }
}

// Pearson chi-square against the uniform law on the oracle-enumerated GD set,
// rejected at significance 0.001.
TEST(Uniform, ChiSquareAgainstEnumeratedSet) {
  for (auto blocks : {BlockSizes{2, 2}, BlockSizes{1, 1, 1}, BlockSizes{2, 1, 1}}) {
    auto all = oracle::enumerate_gds(blocks);
    std::map<std::vector<std::size_t>, std::uint64_t> seen;
    for (const auto& g : all) seen[g] = 0;
    std::mt19937_64 rng(2024);
    const std::uint64_t draws = 20000;
    for (std::uint64_t d = 0; d < draws; ++d) {
      auto gd = sample_gd_uniform(blocks, rng);
      auto it = seen.find(gd.image);
      ASSERT_NE(it, seen.end()) << "sample outside the enumerated set";
      ++it->second;
    }
    const double expected = static_cast<double>(draws) / static_cast<double>(all.size());
    double stat = 0;
    for (const auto& [g, n] : seen) stat += (n - expected) * (n - expected) / expected;
    boost::math::chi_squared dist(static_cast<double>(all.size() - 1));
    double critical = boost::math::quantile(dist, 1 - 0.001);
    EXPECT_LT(stat, critical) << blocks.str();
  }
}
