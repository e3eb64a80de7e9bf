#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "element_set.hpp"
#include "permutation.hpp"

namespace cutgroup {

// All elements of a group, sorted lexicographically by image sequence, so
// index 0 is the identity. Elements are located by their images on a base,
// which determines a group element uniquely; products and conjugates are
// therefore looked up without composing full permutations.
class ElementStore {
 public:
  ElementStore(std::vector<Permutation> elements, std::vector<Point> base);

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& operator[](Index i) const noexcept { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Point>& base() const noexcept { return base_; }

  // Exact lookup; nullopt when g is not an element.
  std::optional<Index> find(const Permutation& g) const;
  // As find(), but throws Error(not_a_member).
  Index index_of(const Permutation& g) const;

  Index multiply(Index a, Index b) const;   // a * b
  Index inverse(Index a) const noexcept { return inverses_[a]; }
  Index conjugate(Index g, Index x) const;  // g x g^-1
  Index power(Index a, std::int64_t k) const;
  std::uint64_t order_of(Index a) const noexcept { return orders_[a]; }

  // Subgroup generated by the given elements, as a membership set.
  ElementSet closure(const std::vector<Index>& generators) const;

 private:
  template <typename KeyFn>
  std::optional<Index> lookup(KeyFn&& key) const;

  std::vector<Permutation> elements_;
  std::vector<Point> base_;
  std::vector<Point> base_images_;  // size() * base_.size(), row-major
  std::vector<Index> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<Index> table_;  // open addressing; stores index + 1, 0 = empty
  std::uint64_t mask_ = 0;
};

}  // namespace cutgroup
