#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdkit/error.hpp"

namespace gdkit {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision nonnegative integer.
///
/// Every value the library reports (P, P', d(n), binomials, pairing counts)
/// is a Count. Subtraction that would go below zero throws
/// Errc::negative_result instead of wrapping.
class Count {
 public:
  Count() = default;
  Count(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  explicit Count(BigInt v) : v_(std::move(v)) {
    if (v_ < 0) throw Error(Errc::negative_result, "Count constructed from a negative value");
  }

  static Count parse(std::string_view digits) {
    if (digits.empty()) throw Error(Errc::parse_error, "empty decimal string");
    for (char c : digits) {
      if (c < '0' || c > '9') throw Error(Errc::parse_error, "invalid decimal digit in '" + std::string(digits) + "'");
    }
    return Count(BigInt(std::string(digits)));
  }

  const BigInt& value() const noexcept { return v_; }
  std::string str() const { return v_.str(); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_odd() const { return boost::multiprecision::bit_test(v_, 0); }

  /// Residue modulo m (m > 0).
  std::uint64_t mod(std::uint64_t m) const {
    if (m == 0) throw Error(Errc::precondition_violated, "modulus must be positive");
    return static_cast<std::uint64_t>(v_ % m);
  }

  bool divisible_by(const Count& d) const { return !d.is_zero() && BigInt(v_ % d.v_).is_zero(); }

  /// Quotient; throws unless d divides *this.
  Count divide_exact(const Count& d) const {
    if (d.is_zero()) throw Error(Errc::precondition_violated, "division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(v_, d.v_, q, r);
    if (!r.is_zero()) throw Error(Errc::precondition_violated, str() + " is not divisible by " + d.str());
    return Count(std::move(q));
  }

  Count pow(unsigned e) const { return Count(boost::multiprecision::pow(v_, e)); }

  Count& operator+=(const Count& o) {
    v_ += o.v_;
    return *this;
  }
  Count& operator*=(const Count& o) {
    v_ *= o.v_;
    return *this;
  }
  Count& operator-=(const Count& o) {
    if (v_ < o.v_) throw Error(Errc::negative_result, str() + " - " + o.str() + " would be negative");
    v_ -= o.v_;
    return *this;
  }

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator*(Count a, const Count& b) { return a *= b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }

  friend bool operator==(const Count& a, const Count& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.v_; }

 private:
  BigInt v_{0};
};

}  // namespace gdkit
