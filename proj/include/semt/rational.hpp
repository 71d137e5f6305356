#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "semt/error.hpp"

namespace semt {

/// Exact num/den with den > 0 and gcd(num, den) == 1. Every operation is
/// overflow-checked and throws ErrorKind::Overflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) {  // NOLINT(google-explicit-constructor)
    if (den == 0) throw Error(ErrorKind::BadShape, "zero denominator");
    if (den < 0) {
      num = negate(num);
      den = negate(den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Smallest integer >= this.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t lhs = mul(a.num_, b.den_ / g);
    const std::int64_t rhs = mul(b.num_, a.den_ / g);
    return {add(lhs, rhs), mul(a.den_ / g, b.den_)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(negate(b.num_), b.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return {mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorKind::BadShape, "division by zero");
    return a * Rational(b.den_, b.num_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // a/b <=> c/d  iff  ad <=> cb, denominators positive.
    return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "rational multiply");
    return out;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "rational add");
    return out;
  }
  static std::int64_t negate(std::int64_t a) { return mul(a, -1); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace semt
