#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace cutgroup {

// Exact rational with 64-bit numerator and denominator. Intermediate results
// use 128-bit arithmetic; a reduced result that does not fit throws
// Error(overflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT implicit
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const {
    if (num_ == INT64_MIN) overflow();
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<__int128>(a.num_) * b.num_, 1);
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::invalid_argument, "division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  [[noreturn]] static void overflow() {
    throw Error(ErrorCode::overflow, "rational arithmetic exceeds 64-bit range");
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (d != 1) {
      const __int128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) overflow();
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
    return from_wide(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cutgroup
