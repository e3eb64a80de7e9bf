#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "perm_group.hpp"

namespace cutgroup {

namespace detail {
struct SubgroupData;
}

// Subgroup of an enumerated parent group, held as a membership set over the
// parent's element indices. The subgroup's own PermGroup (with its own
// stabilizer chain and class table) is built on first use.
class Subgroup {
 public:
  static Subgroup generated(const PermGroup& parent, const std::vector<Index>& generators,
                            std::string label = {});
  static Subgroup generated(const PermGroup& parent, const std::vector<Permutation>& generators,
                            std::string label = {});
  // members must already be a subgroup.
  static Subgroup from_members(const PermGroup& parent, ElementSet members, std::string label = {});
  static Subgroup trivial(const PermGroup& parent);
  static Subgroup whole(const PermGroup& parent);

  const PermGroup& parent() const noexcept;
  const std::string& label() const noexcept;
  const std::vector<Index>& generator_indices() const noexcept;
  std::vector<Permutation> generators() const;
  std::uint64_t order() const noexcept;
  const ElementSet& members() const noexcept;

  bool contains(Index element) const noexcept { return members().contains(element); }
  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return members().is_subset_of(other.members());
  }

  // The subgroup as a group in its own right (same degree).
  const PermGroup& group() const;

  Subgroup relabeled(std::string label) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members() == b.members();
  }

 private:
  explicit Subgroup(std::shared_ptr<detail::SubgroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::SubgroupData> data_;
};

Subgroup intersection(const Subgroup& a, const Subgroup& b);
// Subgroup generated by a and b.
Subgroup join(const Subgroup& a, const Subgroup& b);
// g S g^-1 for g in the parent.
Subgroup conjugate(const Subgroup& s, Index g);

}  // namespace cutgroup
