#pragma once

#include <cstdint>
#include <vector>

#include "gdkit/counting.hpp"

namespace gdkit {

/// f(t1, t2, l): partial injections on T1 u T2 defined on exactly l elements,
/// every image in the opposite block. l1 of the preimages come from T1.
inline Count pairing_count(std::uint64_t t1, std::uint64_t t2, std::uint64_t l) {
  Count total = 0;
  for (std::uint64_t l1 = 0; l1 <= l; ++l1) {
    auto a = static_cast<std::int64_t>(l1);
    auto b = static_cast<std::int64_t>(l - l1);
    Count from_first = binomial(t1, a) * binomial(t2, a) * factorial(l1);
    if (from_first.is_zero()) continue;
    total += from_first * binomial(t1, b) * binomial(t2, b) * factorial(l - l1);
  }
  return total;
}

struct PairingCountTable {
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
  std::vector<Count> values;  // indexed by l in [0, t1 + t2]
};

inline PairingCountTable pairing_table(std::uint64_t t1, std::uint64_t t2) {
  PairingCountTable table{t1, t2, {}};
  table.values.reserve(t1 + t2 + 1);
  for (std::uint64_t l = 0; l <= t1 + t2; ++l) table.values.push_back(pairing_count(t1, t2, l));
  return table;
}

/// P(blocks) by merging blocks i and j (0-based):
///   sum_l f(t_i, t_j, l) P(t_i + t_j - l, rest).
inline Count merge_count(const BlockSizes& blocks, std::size_t i, std::size_t j, MemoStore& memo) {
  if (i >= blocks.size() || j >= blocks.size())
    throw Error(Errc::index_out_of_range, "merge indices out of range for " + std::to_string(blocks.size()) + " blocks");
  if (i == j) throw Error(Errc::equal_indices, "merge_count needs two distinct blocks");

  std::vector<Size> rest;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (k != i && k != j) rest.push_back(blocks[k]);
  const std::uint64_t ti = blocks[i], tj = blocks[j];
  const BlockSizes others(rest);

  Count total = 0;
  for (std::uint64_t l = 0; l <= ti + tj; ++l) {
    Count f = pairing_count(ti, tj, l);
    if (f.is_zero()) continue;
    total += f * count_labeled(others.appended({static_cast<Size>(ti + tj - l)}), memo);
  }
  return total;
}

/// P'(t1, t2, t3) = sum_{l1} C(t2, l1) C(t3, t1 - l1) C(t1, t3 - t2 + l1).
/// Terms with l1 > t1 vanish, so the sum stops at t1.
inline Count count_three_closed(std::uint64_t t1, std::uint64_t t2, std::uint64_t t3) {
  Count total = 0;
  for (std::uint64_t l1 = 0; l1 <= t1; ++l1) {
    auto x = static_cast<std::int64_t>(l1);
    total += binomial(t2, x) * binomial(t3, static_cast<std::int64_t>(t1) - x) *
             binomial(t1, static_cast<std::int64_t>(t3) - static_cast<std::int64_t>(t2) + x);
  }
  return total;
}

}  // namespace gdkit
