#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "gdkit/blocks.hpp"
#include "gdkit/count.hpp"

// Brute-force reference counters. None of these touch the recursion in
// counting.hpp; they exist to check it.

namespace gdkit::oracle {

inline constexpr std::uint64_t kAflLimit = 12;
inline constexpr std::uint64_t kPermanentLimit = 22;
inline constexpr std::uint64_t kInjectionLimit = 10;

/// m x m board; forbidden[r][c] marks assignment r -> c as disallowed.
struct ForbiddenBoard {
  std::size_t size = 0;
  std::vector<std::vector<bool>> forbidden;

  static ForbiddenBoard for_blocks(const BlockSizes& blocks) {
    ForbiddenBoard b;
    b.size = blocks.total();
    b.forbidden.assign(b.size, std::vector<bool>(b.size, false));
    std::size_t start = 0;
    for (auto t : blocks.sizes()) {
      for (std::size_t r = start; r < start + t; ++r)
        for (std::size_t c = start; c < start + t; ++c) b.forbidden[r][c] = true;
      start += t;
    }
    return b;
  }
};

/// Counts rearrangements of 1^{t_1} 2^{t_2} ... with no letter left on a
/// position of its own block, walking multiset permutations in
/// lexicographic successor order.
inline Count afl_count(const BlockSizes& blocks) {
  if (blocks.total() > kAflLimit)
    throw Error(Errc::too_large, "oracle AFL enumeration limited to total size " + std::to_string(kAflLimit));
  std::vector<std::uint32_t> word;
  for (std::uint32_t i = 0; i < blocks.size(); ++i) word.insert(word.end(), blocks[i], i);
  const auto original = word;
  std::uint64_t hits = 0;
  do {
    bool ok = true;
    for (std::size_t p = 0; p < word.size() && ok; ++p) ok = word[p] != original[p];
    hits += ok;
  } while (std::next_permutation(word.begin(), word.end()));
  return Count(hits);
}

/// Permanent of the allowed-assignment matrix by Ryser's formula with a
/// Gray-code sweep over column subsets.
inline Count permanent(const ForbiddenBoard& board) {
  const std::size_t m = board.size;
  if (m > kPermanentLimit)
    throw Error(Errc::too_large, "oracle permanent limited to " + std::to_string(kPermanentLimit) + " elements");
  if (m == 0) return Count(1);

  std::vector<std::int64_t> row_sum(m, 0);
  __int128 acc = 0;
  std::uint64_t subset = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
    auto col = static_cast<std::size_t>(__builtin_ctzll(step));
    std::uint64_t bit = std::uint64_t{1} << col;
    subset ^= bit;
    std::int64_t delta = (subset & bit) ? 1 : -1;
    for (std::size_t r = 0; r < m; ++r)
      if (!board.forbidden[r][col]) row_sum[r] += delta;

    __int128 prod = 1;
    for (std::size_t r = 0; r < m && prod != 0; ++r) prod *= row_sum[r];
    auto k = static_cast<std::size_t>(__builtin_popcountll(subset));
    acc += ((m - k) % 2 == 0) ? prod : -prod;
  }
  if (acc < 0) throw Error(Errc::negative_result, "Ryser sweep produced a negative permanent");

  BigInt out = 0;
  auto u = static_cast<unsigned __int128>(acc);
  for (int shift = 96; shift >= 0; shift -= 32) {
    out <<= 32;
    out += static_cast<std::uint32_t>(u >> shift);
  }
  return Count(std::move(out));
}

inline Count gd_count_permanent(const BlockSizes& blocks) {
  if (blocks.total() > kPermanentLimit)
    throw Error(Errc::too_large, "oracle permanent limited to " + std::to_string(kPermanentLimit) + " elements");
  return permanent(ForbiddenBoard::for_blocks(blocks));
}

/// Injective maps defined on exactly l elements of T1 u T2 with every image
/// in the opposite set, by exhaustive search.
inline Count partial_injection_count(std::uint64_t t1, std::uint64_t t2, std::uint64_t l) {
  if (t1 + t2 > kInjectionLimit)
    throw Error(Errc::too_large, "oracle injection enumeration limited to t1 + t2 <= " + std::to_string(kInjectionLimit));
  const std::size_t m = t1 + t2;
  std::vector<bool> used(m, false);
  std::uint64_t hits = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t x, std::uint64_t defined) {
    if (x == m) {
      hits += defined == l;
      return;
    }
    rec(x + 1, defined);  // x left undefined
    if (defined == l) return;
    bool in_first = x < t1;
    std::size_t lo = in_first ? t1 : 0, hi = in_first ? m : t1;
    for (std::size_t y = lo; y < hi; ++y) {
      if (used[y]) continue;
      used[y] = true;
      rec(x + 1, defined + 1);
      used[y] = false;
    }
  };
  rec(0, 0);
  return Count(hits);
}

/// Every labeled generalized derangement of `blocks`, as image vectors over
/// element ids 0..m-1 (block-major order).
inline std::vector<std::vector<std::size_t>> enumerate_gds(const BlockSizes& blocks) {
  if (blocks.total() > 10) throw Error(Errc::too_large, "GD enumeration limited to 10 elements");
  std::vector<std::size_t> block_of;
  for (std::size_t i = 0; i < blocks.size(); ++i) block_of.insert(block_of.end(), blocks[i], i);
  std::vector<std::size_t> perm(block_of.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t e = 0; e < perm.size() && ok; ++e) ok = block_of[perm[e]] != block_of[e];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace gdkit::oracle
