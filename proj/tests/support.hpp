#pragma once

// Test-only reference computations, independent of the library code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdkit/blocks.hpp"

namespace gdkit::ref {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// Fixed-point-free permutations of n items, by enumeration.
inline std::uint64_t derangements_by_enumeration(unsigned n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t hits = 0;
  do {
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) ok = p[i] != i;
    hits += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return hits;
}

/// n! sum_{i=0}^{n} (-1)^i / i!, accumulated as signed integers n!/i!.
inline cpp_int derangement_alternating(unsigned n) {
  cpp_int total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    cpp_int term = 1;
    for (unsigned j = i + 1; j <= n; ++j) term *= j;
    total += (i % 2 == 0) ? term : cpp_int(-term);
  }
  return total;
}

inline cpp_int factorial_ref(unsigned n) {
  cpp_int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// floor(n!/e + 1/2) bracketed by rational bounds on 1/e: the partial sums
/// of sum (-1)^i / i! alternate around 1/e, so two consecutive partial sums
/// past n + 2 terms enclose it. Returns {floor at lower, floor at upper}.
inline std::pair<cpp_int, cpp_int> rounded_factorial_over_e(unsigned n) {
  const unsigned terms = n + 30;
  cpp_rational s = 0, prev = 0, term = 1;
  for (unsigned i = 0; i <= terms; ++i) {
    if (i) term /= i;
    prev = s;
    s += (i % 2 == 0) ? term : cpp_rational(-term);
  }
  cpp_rational lo = std::min(s, prev), hi = std::max(s, prev);
  cpp_rational nf = cpp_rational(factorial_ref(n));
  auto floor_of = [](const cpp_rational& q) {
    cpp_int num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    cpp_int f = num / den;
    if (num < 0 && f * den != num) f -= 1;
    return f;
  };
  cpp_rational half(1, 2);
  return {floor_of(nf * lo + half), floor_of(nf * hi + half)};
}

/// P' by backtracking over positions, placing any letter with copies left
/// that differs from the position's original letter.
inline std::uint64_t afl_backtrack(const BlockSizes& blocks) {
  std::vector<std::size_t> original, left(blocks.sizes().begin(), blocks.sizes().end());
  for (std::size_t i = 0; i < blocks.size(); ++i) original.insert(original.end(), blocks[i], i);
  std::uint64_t hits = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == original.size()) {
      ++hits;
      return;
    }
    for (std::size_t c = 0; c < left.size(); ++c) {
      if (!left[c] || c == original[pos]) continue;
      --left[c];
      self(self, pos + 1);
      ++left[c];
    }
  };
  rec(rec, 0);
  return hits;
}

/// P by the rook-polynomial expansion of the block-diagonal board:
///   sum over j_i in [0, t_i] of prod (-1)^{j_i} C(t_i, j_i)^2 j_i! times (m - sum j)!.
inline cpp_int gd_rook(const BlockSizes& blocks) {
  auto choose = [](unsigned n, unsigned k) {
    cpp_int r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  const unsigned m = static_cast<unsigned>(blocks.total());
  cpp_int total = 0;
  auto rec = [&](auto&& self, std::size_t i, unsigned placed, cpp_int weight) -> void {
    if (i == blocks.size()) {
      total += weight * factorial_ref(m - placed);
      return;
    }
    for (unsigned j = 0; j <= blocks[i]; ++j) {
      cpp_int c = choose(blocks[i], j);
      cpp_int w = weight * c * c * factorial_ref(j);
      self(self, i + 1, placed + j, (j % 2) ? cpp_int(-w) : w);
    }
  };
  rec(rec, 0, 0, cpp_int(1));
  return total;
}

/// A random composition with total at most max_total, possibly with zeros.
inline BlockSizes random_blocks(std::mt19937_64& rng, unsigned max_total, unsigned max_len, bool zeros = false) {
  std::uniform_int_distribution<unsigned> len_d(1, max_len);
  unsigned len = len_d(rng);
  std::uniform_int_distribution<unsigned> total_d(0, max_total);
  unsigned total = total_d(rng);
  std::vector<Size> s(len, zeros ? 0 : 1);
  unsigned used = zeros ? 0 : len;
  if (used > total) {
    s.assign(len, 0);
    used = 0;
  }
  std::uniform_int_distribution<std::size_t> pick(0, len - 1);
  while (used < total) {
    ++s[pick(rng)];
    ++used;
  }
  return BlockSizes(std::move(s));
}

}  // namespace gdkit::ref
