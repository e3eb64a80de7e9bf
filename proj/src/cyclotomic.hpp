#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cutgroup {

// Q(zeta_e) in the power basis 1, z, ..., z^(phi(e)-1), z = exp(2 pi i / e).
// reduction(j) lists the integer coordinates of z^j for 0 <= j < e.
class CyclotomicField {
 public:
  using Sparse = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  explicit CyclotomicField(std::uint64_t e);

  std::uint64_t conductor() const noexcept { return e_; }
  std::size_t dimension() const noexcept { return phi_; }
  const std::vector<std::int64_t>& polynomial() const noexcept { return poly_; }  // low degree first
  const Sparse& reduction(std::uint64_t j) const noexcept { return red_[j % e_]; }

 private:
  std::uint64_t e_;
  std::size_t phi_;
  std::vector<std::int64_t> poly_;
  std::vector<Sparse> red_;
};

// Shared, immutable, thread-safe cache.
const CyclotomicField& cyclotomic_field(std::uint64_t e);
// e-th cyclotomic polynomial, low degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t e);

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::uint64_t conductor);  // zero

  static Cyclotomic rational(std::uint64_t conductor, const Rational& q);
  static Cyclotomic root_of_unity(std::uint64_t conductor, std::int64_t j);
  static Cyclotomic from_coefficients(std::uint64_t conductor, std::vector<Rational> coefficients);

  std::uint64_t conductor() const noexcept { return field_->conductor(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  // Throws Error(invalid_argument) when the value is not rational.
  Rational rational_value() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q);
  friend Cyclotomic operator*(const Rational& q, const Cyclotomic& a) { return a * q; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Rational& q);
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  // this += q * z^j
  void add_root(std::uint64_t j, const Rational& q);

  // The Galois automorphism z -> z^k; k must be a unit modulo the conductor.
  Cyclotomic galois(std::uint64_t k) const;
  Cyclotomic complex_conjugate() const { return galois(conductor() - 1); }

  // Same number viewed in Q(zeta_m), m a multiple of the conductor.
  Cyclotomic embed(std::uint64_t m) const;
  // Same number in Q(zeta_m), m a divisor of the conductor; throws
  // Error(invalid_argument) when the number does not lie in that subfield.
  Cyclotomic descend(std::uint64_t m) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor() == b.conductor() && a.c_ == b.c_;
  }
  // Lexicographic on coefficient vectors (same conductor).
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  // e.g. "1 + z^2 - 1/2*z^5" with z = exp(2 pi i / conductor).
  std::string to_string() const;

 private:
  explicit Cyclotomic(const CyclotomicField* field, std::vector<Rational> c)
      : field_(field), c_(std::move(c)) {}
  void require_same(const Cyclotomic& o) const;

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

}  // namespace cutgroup
