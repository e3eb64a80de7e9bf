#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cutgroup {

using Index = std::uint32_t;

// Fixed-universe bitset over element indices of an enumerated group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Index i) const noexcept { return (words_[i >> 6] >> (i & 63U)) & 1U; }
  void insert(Index i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63U); }
  void erase(Index i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63U)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Index> to_vector() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cutgroup
