#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "gdkit/count.hpp"

namespace gdkit {

inline Count factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return Count(std::move(r));
}

/// C(n, k), with C(n, k) = 0 whenever k < 0 or k > n. Several finite sums
/// (pairing counts, the three-block closed form) depend on that convention.
inline Count binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return Count(0);
  auto kk = static_cast<std::uint64_t>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < kk; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return Count(std::move(r));
}

namespace detail {

inline void require_parts_sum(std::uint64_t n, std::span<const std::uint64_t> parts) {
  std::uint64_t s = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (s != n) throw Error(Errc::parts_mismatch, "parts sum to " + std::to_string(s) + ", expected " + std::to_string(n));
}

}  // namespace detail

/// n! / (parts[0]! parts[1]! ...), computed as a product of binomials.
inline Count multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
  detail::require_parts_sum(n, parts);
  Count r = 1;
  std::uint64_t left = n;
  for (auto p : parts) {
    r *= binomial(left, static_cast<std::int64_t>(p));
    left -= p;
  }
  return r;
}

inline Count multinomial(std::uint64_t n, std::initializer_list<std::uint64_t> parts) {
  return multinomial(n, std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

/// Derangement numbers d(0..n) via d(n) = (n-1)(d(n-1) + d(n-2)).
inline std::vector<Count> derangement_table(std::uint64_t n) {
  std::vector<Count> d;
  d.reserve(n + 1);
  d.emplace_back(1);
  if (n >= 1) d.emplace_back(0);
  for (std::uint64_t i = 2; i <= n; ++i) d.push_back(Count(i - 1) * (d[i - 1] + d[i - 2]));
  return d;
}

inline Count derangement(std::uint64_t n) { return derangement_table(n).back(); }

/// Set bit positions of an integer, ascending.
struct BitSupport {
  std::vector<unsigned> positions;

  std::uint64_t value() const {
    std::uint64_t v = 0;
    for (auto p : positions) v |= std::uint64_t{1} << p;
    return v;
  }

  bool contains(unsigned x) const {
    for (auto p : positions)
      if (p == x) return true;
    return false;
  }

  friend bool operator==(const BitSupport&, const BitSupport&) = default;
};

inline BitSupport bit_support(std::uint64_t m) {
  BitSupport s;
  for (unsigned x = 0; m != 0; ++x, m >>= 1)
    if (m & 1u) s.positions.push_back(x);
  return s;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Whether C(2p, p) = 2 (mod p^3).
inline bool wolstenholme_holds(std::uint64_t p) {
  if (p < 2) throw Error(Errc::precondition_violated, "wolstenholme_holds needs p >= 2");
  Count p3 = Count(p).pow(3);
  Count c = binomial(2 * p, static_cast<std::int64_t>(p));
  return c >= Count(2) && (c - Count(2)).value() % p3.value() == 0;
}

/// Parity of a multinomial by Dickson's criterion at p = 2: odd iff the
/// binary digits of n split among the parts with no carries, i.e. the parts'
/// bit supports are pairwise disjoint and together cover q(n).
inline bool multinomial_is_odd(std::uint64_t n, std::span<const std::uint64_t> parts) {
  detail::require_parts_sum(n, parts);
  std::uint64_t seen = 0;
  for (auto p : parts) {
    if (seen & p) return false;
    seen |= p;
  }
  return seen == n;
}

inline bool multinomial_is_odd(std::uint64_t n, std::initializer_list<std::uint64_t> parts) {
  return multinomial_is_odd(n, std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

}  // namespace gdkit
