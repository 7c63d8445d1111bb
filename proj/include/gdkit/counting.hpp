#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gdkit/blocks.hpp"
#include "gdkit/core_arith.hpp"
#include "gdkit/memo.hpp"

// Counting engine for anagrams without fixed letters (P') and generalized
// derangements (P = t_1! ... t_n! P').
//
// Fix one element a of the first block. g'_i counts the AFLs in which the
// letter at a's position comes from block i. For t_1 > 0, i > 1, t_i > 0:
//
//   g'_i(t) = P'(t_1 - 1, ..., t_i - 1, ...) + P'(..., t_i - 1, ...)
//             - g'_i(..., t_i - 1, ...)
//
// and P'(t) = sum_i g'_i(t). This is the labeled recursion for g_i divided
// through by t_1! ... t_n!: the t_1 t_i P(t_1 - 1, t_i - 1) term becomes
// P'(t_1 - 1, t_i - 1) and the t_i factors on the other terms cancel.
// Base cases: g'_1 = 0 when t_1 > 0, g'_i = 0 when t_i = 0, and the empty
// family has P' = 1.

namespace gdkit {

namespace detail {

/// Sorted nonincreasing merge of (a, b) into rest, dropping zeros.
inline CanonicalKey with_two(Size a, Size b, const CanonicalKey& rest) {
  CanonicalKey k = rest;
  k.reserve(rest.size() + 2);
  if (a) k.insert(std::upper_bound(k.begin(), k.end(), a, std::greater<>()), a);
  if (b) k.insert(std::upper_bound(k.begin(), k.end(), b, std::greater<>()), b);
  return k;
}

inline Count unlabeled_canonical(const CanonicalKey& key, MemoStore& memo);

inline Count g_prime(Size first, Size target, const CanonicalKey& rest, MemoStore& memo) {
  if (target == 0) return Count(0);
  GKey key{first, target, rest};
  if (auto hit = memo.find_g(key)) return *hit;
  memo.note_g_evaluation();

  Count both = unlabeled_canonical(with_two(first - 1, target - 1, rest), memo);
  Count target_only = unlabeled_canonical(with_two(first, target - 1, rest), memo);
  Count shorter = g_prime(first, target - 1, rest, memo);
  // g'_i(.., t_i - 1, ..) counts a subset of the AFLs behind `target_only`.
  Count value = both + target_only;
  if (value < shorter)
    throw Error(Errc::negative_result, "internal invariant broken in g' recursion at first=" + std::to_string(first) +
                                           " target=" + std::to_string(target) + " rest=" + key_str(rest));
  value -= shorter;
  memo.store_g(std::move(key), value);
  return value;
}

inline Count unlabeled_canonical(const CanonicalKey& key, MemoStore& memo) {
  if (key.empty()) return Count(1);
  if (auto hit = memo.find_p(key)) return *hit;
  memo.note_p_evaluation();

  Count total = 0;
  CanonicalKey rest(key.begin() + 1, key.end());
  for (std::size_t i = 1; i < key.size(); ++i) {
    // rest without position i (still sorted).
    CanonicalKey others = rest;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i - 1));
    total += g_prime(key[0], key[i], others, memo);
  }
  memo.store_p(key, total);
  return total;
}

}  // namespace detail

/// P'(t_1, ..., t_n): number of anagrams of 1^{t_1} ... n^{t_n} with no letter
/// in an originally same-letter position. The empty family gives 1.
inline Count count_unlabeled(const BlockSizes& blocks, MemoStore& memo) {
  return detail::unlabeled_canonical(blocks.canonical(), memo);
}

inline Count count_unlabeled(const BlockSizes& blocks) {
  MemoStore memo;
  return count_unlabeled(blocks, memo);
}

inline Count block_factorials(const BlockSizes& blocks) {
  Count r = 1;
  for (auto t : blocks.sizes()) r *= factorial(t);
  return r;
}

/// P(t_1, ..., t_n) = t_1! ... t_n! P'(t_1, ..., t_n).
inline Count count_labeled(const BlockSizes& blocks, MemoStore& memo) {
  return block_factorials(blocks) * count_unlabeled(blocks, memo);
}

inline Count count_labeled(const BlockSizes& blocks) {
  MemoStore memo;
  return count_labeled(blocks, memo);
}

/// g'_i for positional blocks; `target_index` is 0-based, so index 0 is the
/// block holding the fixed element.
inline Count count_unlabeled_direct_g(const BlockSizes& blocks, std::size_t target_index, MemoStore& memo) {
  if (blocks.empty() || target_index >= blocks.size())
    throw Error(Errc::index_out_of_range,
                "target index " + std::to_string(target_index) + " for " + std::to_string(blocks.size()) + " blocks");
  const auto& t = blocks.sizes();
  bool all_zero = blocks.total() == 0;
  if (all_zero) return Count(target_index == 0 ? 1 : 0);
  if (t[0] == 0) return target_index == 0 ? count_unlabeled(blocks, memo) : Count(0);
  if (target_index == 0 || t[target_index] == 0) return Count(0);

  std::vector<Size> rest;
  for (std::size_t j = 1; j < t.size(); ++j)
    if (j != target_index) rest.push_back(t[j]);
  return detail::g_prime(t[0], t[target_index], BlockSizes(std::move(rest)).canonical(), memo);
}

/// Closed form when the largest block equals the sum of the others: then P'
/// is the multinomial C(t_max; others). Returns nullopt otherwise.
inline std::optional<Count> count_equal_sum_special(const BlockSizes& blocks) {
  auto key = blocks.canonical();
  std::uint64_t others = blocks.total() - blocks.max();
  if (blocks.max() != others) return std::nullopt;
  if (key.empty()) return Count(1);
  std::vector<std::uint64_t> parts(key.begin() + 1, key.end());
  return multinomial(key[0], parts);
}

/// d(n) - 2 d(n-1) - d(n-2), which equals P(2, 1, ..., 1) with n-2 ones.
inline Count lemma_2_1_value(std::uint64_t n) {
  if (n < 2) throw Error(Errc::precondition_violated, "lemma_2_1_value needs n >= 2");
  auto d = derangement_table(n);
  Count sub = Count(2) * d[n - 1] + d[n - 2];
  if (d[n] < sub) throw Error(Errc::negative_result, "d(n) - 2d(n-1) - d(n-2) < 0 at n=" + std::to_string(n));
  return d[n] - sub;
}

/// Size of the memo state space a query can reach: (n+1) times the number of
/// nonincreasing size vectors dominated entrywise by the sorted sizes. Used
/// as an input guard, not as a proven entry bound.
inline double state_estimate(const BlockSizes& blocks) {
  auto key = blocks.canonical();
  if (key.empty()) return 1.0;
  // ways[v] = number of valid prefixes whose last entry is v.
  std::vector<double> ways(key[0] + 1, 1.0);
  for (std::size_t j = 1; j < key.size(); ++j) {
    std::vector<double> next(key[j] + 1, 0.0);
    double acc = 0.0;
    // next[v] = sum_{u >= v} ways[u]
    for (std::size_t u = ways.size(); u-- > 0;) {
      acc += ways[u];
      if (u <= key[j]) next[u] = acc;
    }
    ways = std::move(next);
  }
  double count = 0.0;
  for (double w : ways) count += w;
  return static_cast<double>(key.size() + 1) * count;
}

/// Default ceiling for state_estimate in sweeps and checks that guard input size.
inline constexpr double kDefaultStateBudget = 4.0e6;

inline void require_within_budget(const BlockSizes& blocks, double budget = kDefaultStateBudget) {
  if (state_estimate(blocks) > budget)
    throw Error(Errc::too_large, "instance (" + blocks.str() + ") exceeds the compute guard");
}

}  // namespace gdkit
