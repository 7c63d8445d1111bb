#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gdkit/blocks.hpp"
#include "gdkit/error.hpp"

namespace gdkit {

/// A permutation of the labeled elements of all blocks. Element ids are
/// block-major: block 0's elements first, then block 1's, and so on.
struct GdAssignment {
  BlockSizes blocks;
  std::vector<std::size_t> image;  // image[e] = sigma(e)

  std::vector<std::size_t> block_of() const {
    std::vector<std::size_t> out;
    out.reserve(image.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) out.insert(out.end(), blocks[i], i);
    return out;
  }

  /// (block, index within block) of element id e.
  std::pair<std::size_t, std::size_t> element(std::size_t e) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (e < blocks[i]) return {i, e};
      e -= blocks[i];
    }
    throw Error(Errc::index_out_of_range, "element id out of range");
  }

  /// Bijective on all elements, and nothing lands in its own block.
  bool is_valid() const {
    if (image.size() != blocks.total()) return false;
    auto owner = block_of();
    std::vector<bool> hit(image.size(), false);
    for (std::size_t e = 0; e < image.size(); ++e) {
      auto y = image[e];
      if (y >= image.size() || hit[y] || owner[y] == owner[e]) return false;
      hit[y] = true;
    }
    return true;
  }
};

/// An anagram as 0-based letter (block) indices per position.
using Word = std::vector<std::size_t>;

namespace detail {

inline void require_feasible(const BlockSizes& blocks) {
  if (!is_feasible(blocks))
    throw Error(Errc::infeasible, "blocks (" + blocks.str() + ") fail 2 t_k <= sum t_i, no generalized derangement exists");
}

/// Block indices, largest first; ties keep input order.
inline std::vector<std::size_t> order_by_size(const BlockSizes& blocks) {
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return blocks[a] > blocks[b]; });
  return order;
}

inline std::vector<std::size_t> block_starts(const BlockSizes& blocks) {
  std::vector<std::size_t> start(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) start[i + 1] = start[i] + blocks[i];
  return start;
}

}  // namespace detail

/// Two-column construction. Lay the elements out block by block (largest
/// blocks first) down the left column of an m x 2 array, then down the right
/// one, and swap each row. No block exceeds m, so rows never repeat a block.
/// An odd total first spends one element of each of the three largest
/// blocks on a 3-cycle.
inline GdAssignment construct_gd_pairing(const BlockSizes& blocks) {
  detail::require_feasible(blocks);
  auto order = detail::order_by_size(blocks);
  auto start = detail::block_starts(blocks);
  GdAssignment gd{blocks, std::vector<std::size_t>(blocks.total())};

  std::vector<std::size_t> skip(blocks.size(), 0);  // leading elements already used per block
  if (blocks.total() % 2 == 1) {
    std::size_t a1 = start[order[0]], a2 = start[order[1]], a3 = start[order[2]];
    gd.image[a1] = a2;
    gd.image[a2] = a3;
    gd.image[a3] = a1;
    skip[order[0]] = skip[order[1]] = skip[order[2]] = 1;
  }
  std::vector<std::size_t> column;
  for (auto b : order)
    for (std::size_t e = start[b] + skip[b]; e < start[b + 1]; ++e) column.push_back(e);
  const std::size_t rows = column.size() / 2;
  for (std::size_t r = 0; r < rows; ++r) {
    gd.image[column[r]] = column[r + rows];
    gd.image[column[r + rows]] = column[r];
  }
  return gd;
}

/// Staged injection. Blocks are taken largest first; at stage k the
/// elements of the k-th block are sent to not-yet-used images outside their
/// own block, taking the unused elements of the next block first and then
/// the rest in (stage, index-within-block) order. After stage k every element
/// of block k+1 is an image, which is what keeps each later stage solvable.
inline GdAssignment construct_gd_greedy(const BlockSizes& blocks) {
  detail::require_feasible(blocks);
  auto order = detail::order_by_size(blocks);
  auto start = detail::block_starts(blocks);
  GdAssignment gd{blocks, std::vector<std::size_t>(blocks.total())};
  std::vector<bool> used(blocks.total(), false);

  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto cur = order[k];
    std::vector<std::size_t> targets;
    if (k + 1 < order.size())
      for (auto e = start[order[k + 1]]; e < start[order[k + 1] + 1]; ++e)
        if (!used[e]) targets.push_back(e);
    for (std::size_t s = 0; s < order.size(); ++s) {
      if (s == k || s == k + 1) continue;
      for (auto e = start[order[s]]; e < start[order[s] + 1]; ++e)
        if (!used[e]) targets.push_back(e);
    }
    if (targets.size() < blocks[cur]) throw Error(Errc::infeasible, "staged injection ran out of images");
    for (std::size_t x = 0; x < blocks[cur]; ++x) {
      gd.image[start[cur] + x] = targets[x];
      used[targets[x]] = true;
    }
  }
  return gd;
}

inline constexpr std::uint64_t kUniformSampleLimit = 12;

/// Uniform over all P(blocks) generalized derangements: draw uniform
/// permutations until one avoids every block. Acceptance probability is
/// P(blocks) / (sum t_i)!.
template <class Rng>
GdAssignment sample_gd_uniform(const BlockSizes& blocks, Rng& rng) {
  detail::require_feasible(blocks);
  if (blocks.total() > kUniformSampleLimit)
    throw Error(Errc::too_large, "rejection sampling limited to total size " + std::to_string(kUniformSampleLimit));
  GdAssignment gd{blocks, std::vector<std::size_t>(blocks.total())};
  std::iota(gd.image.begin(), gd.image.end(), 0);
  auto owner = gd.block_of();
  while (true) {
    std::shuffle(gd.image.begin(), gd.image.end(), rng);
    bool ok = true;
    for (std::size_t e = 0; e < gd.image.size() && ok; ++e) ok = owner[gd.image[e]] != owner[e];
    if (ok) return gd;
  }
}

inline GdAssignment sample_gd_uniform(const BlockSizes& blocks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_gd_uniform(blocks, rng);
}

/// Forget within-block labels: position e reads the letter of sigma(e).
inline Word project_to_afl(const GdAssignment& gd) {
  auto owner = gd.block_of();
  Word w(gd.image.size());
  for (std::size_t e = 0; e < w.size(); ++e) w[e] = owner[gd.image[e]];
  return w;
}

/// 1-based letters, concatenated ("2211") when every letter is a single
/// digit, comma-separated otherwise.
inline std::string word_str(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](auto x) { return x < 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

}  // namespace gdkit
