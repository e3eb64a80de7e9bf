#pragma once

#include <cstdint>
#include <vector>

#include "element_store.hpp"
#include "perm_group.hpp"

namespace cutgroup {

struct ConjugacyClass {
  Index representative;  // lexicographically least element of the class
  std::uint64_t size;
  std::uint64_t element_order;
};

// Classes ordered by (element order, class size, representative). Since
// elements are stored in lexicographic order, the representative's index is
// the least index in its class and the ordering is bit-reproducible.
class ConjugacyClassTable {
 public:
  ConjugacyClassTable(const ElementStore& store, const std::vector<Index>& generators);

  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t c) const noexcept { return classes_[c]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  const std::vector<Index>& members(std::size_t c) const noexcept { return members_[c]; }

  std::size_t class_of(Index element) const noexcept { return class_of_[element]; }
  std::size_t inverse_class(std::size_t c) const noexcept { return inverse_class_[c]; }
  // Class of (representative of c)^k; k is reduced modulo the element order.
  std::size_t power_class(std::size_t c, std::int64_t k) const noexcept;
  std::vector<std::size_t> power_map(std::int64_t k) const;

  std::uint64_t group_order() const noexcept { return group_order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  std::uint64_t centralizer_order(std::size_t c) const noexcept {
    return group_order_ / classes_[c].size;
  }

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<std::vector<Index>> members_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::vector<std::uint32_t>> powers_;  // powers_[c][j] = class of rep^j
  std::uint64_t group_order_ = 1;
  std::uint64_t exponent_ = 1;
};

const ConjugacyClassTable& conjugacy_classes(const PermGroup& group);

// Index i maps to the class of (representative of i)^k.
std::vector<std::size_t> class_power_map(const ConjugacyClassTable& table, std::int64_t k);

// {x in G : xg = gx}. Throws Error(not_a_member) unless g is in G.
PermGroup centralizer(const PermGroup& group, const Permutation& g);

bool are_conjugate(const PermGroup& group, const Permutation& x, const Permutation& y);

}  // namespace cutgroup
