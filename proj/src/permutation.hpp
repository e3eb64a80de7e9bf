#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cutgroup {

using Point = std::uint32_t;

inline constexpr std::size_t kMaxDegree = 10000;

// Dense permutation of {0, ..., degree-1}. Products compose as functions:
// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;

  // Throws Error(not_a_permutation) unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);
  // Parses "(0 1 2)(3 4)" or "()" ; commas are accepted as separators.
  static Permutation parse_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }
  const Point* data() const noexcept { return images_.data(); }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// Least n >= 1 with g^n = 1 (lcm of cycle lengths). Throws on 64-bit overflow.
std::uint64_t element_order(const Permutation& g);

}  // namespace cutgroup
