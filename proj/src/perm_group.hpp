#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "element_store.hpp"
#include "permutation.hpp"

namespace cutgroup {

class ConjugacyClassTable;

struct GroupOptions {
  // Groups up to this order are fully enumerated; larger groups still get
  // order and membership from the stabilizer chain.
  std::uint64_t enumeration_cap = 100000;
};

namespace detail {
struct GroupData;
}

// Immutable finite permutation group. Copies share the underlying data and
// are safe to use from several threads.
class PermGroup {
 public:
  static PermGroup from_generators(std::vector<Permutation> generators, std::size_t degree,
                                   std::string name = {}, GroupOptions options = {});

  const std::string& name() const noexcept { return name_; }
  PermGroup renamed(std::string name) const;

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t order() const noexcept;
  const GroupOptions& options() const noexcept;
  std::vector<Point> base() const;

  bool contains(const Permutation& g) const;
  bool is_enumerated() const noexcept;
  bool is_abelian() const;

  // Throws Error(cap_exceeded) when the order is above the enumeration cap.
  const ElementStore& elements() const;
  // Conjugacy classes, computed once on first use.
  const ConjugacyClassTable& classes() const;

  // Same element set (classes are canonical, so class indices agree too).
  bool equals(const PermGroup& other) const;
  bool shares_data_with(const PermGroup& other) const noexcept { return data_ == other.data_; }

  // Degree and generator images; used to key per-group caches.
  std::string canonical_key() const;

 private:
  explicit PermGroup(std::shared_ptr<const detail::GroupData> data, std::string name)
      : data_(std::move(data)), name_(std::move(name)) {}

  std::shared_ptr<const detail::GroupData> data_;
  std::string name_;
};

// Alias matching the operation name used in docs and the C API.
inline PermGroup group_from_generators(std::vector<Permutation> generators, std::size_t degree,
                                       std::string name = {}, GroupOptions options = {}) {
  return PermGroup::from_generators(std::move(generators), degree, std::move(name), options);
}

// Greedy irredundant generating set for the subgroup given as a membership
// set: elements are scanned in index order and kept when not already generated.
std::vector<Index> irredundant_generators(const ElementStore& store, const ElementSet& members);

}  // namespace cutgroup
