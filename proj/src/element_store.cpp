#include "element_store.hpp"

#include "error.hpp"

namespace cutgroup {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

}  // namespace

template <typename KeyFn>
std::optional<Index> ElementStore::lookup(KeyFn&& key) const {
  const std::size_t b = base_.size();
  std::uint64_t h = 0x51ed27f3a1c9b3d5ULL;
  for (std::size_t i = 0; i < b; ++i) h = mix(h, key(i));
  for (std::uint64_t slot = h & mask_;; slot = (slot + 1) & mask_) {
    const Index entry = table_[slot];
    if (entry == 0) return std::nullopt;
    const Point* row = base_images_.data() + static_cast<std::size_t>(entry - 1) * b;
    bool match = true;
    for (std::size_t i = 0; i < b; ++i) {
      if (row[i] != key(i)) {
        match = false;
        break;
      }
    }
    if (match) return entry - 1;
  }
}

ElementStore::ElementStore(std::vector<Permutation> elements, std::vector<Point> base)
    : elements_(std::move(elements)), base_(std::move(base)) {
  const std::size_t n = elements_.size();
  const std::size_t b = base_.size();
  base_images_.resize(n * b);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t i = 0; i < b; ++i) base_images_[e * b + i] = elements_[e][base_[i]];
  }
  std::size_t capacity = 16;
  while (capacity < 2 * n) capacity <<= 1U;
  table_.assign(capacity, 0);
  mask_ = capacity - 1;
  for (std::size_t e = 0; e < n; ++e) {
    const Point* row = base_images_.data() + e * b;
    std::uint64_t h = 0x51ed27f3a1c9b3d5ULL;
    for (std::size_t i = 0; i < b; ++i) h = mix(h, row[i]);
    std::uint64_t slot = h & mask_;
    while (table_[slot] != 0) slot = (slot + 1) & mask_;
    table_[slot] = static_cast<Index>(e + 1);
  }

  inverses_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    const Permutation inv = elements_[e].inverse();
    auto idx = lookup([&](std::size_t i) { return inv[base_[i]]; });
    if (!idx) throw Error(ErrorCode::internal, "element store is not closed under inverses");
    inverses_[e] = *idx;
  }

  orders_.resize(n);
  for (std::size_t e = 0; e < n; ++e) orders_[e] = element_order(elements_[e]);
}

std::optional<Index> ElementStore::find(const Permutation& g) const {
  if (elements_.empty() || g.degree() != elements_[0].degree()) return std::nullopt;
  auto idx = lookup([&](std::size_t i) { return g[base_[i]]; });
  if (!idx || elements_[*idx] != g) return std::nullopt;
  return idx;
}

Index ElementStore::index_of(const Permutation& g) const {
  auto idx = find(g);
  if (!idx) {
    throw Error(ErrorCode::not_a_member, "permutation " + g.to_cycle_string() +
                                             " is not an element of the group");
  }
  return *idx;
}

Index ElementStore::multiply(Index a, Index b) const {
  const Permutation& pa = elements_[a];
  const Permutation& pb = elements_[b];
  auto idx = lookup([&](std::size_t i) { return pa[pb[base_[i]]]; });
  if (!idx) throw Error(ErrorCode::internal, "element store is not closed under products");
  return *idx;
}

Index ElementStore::conjugate(Index g, Index x) const {
  const Permutation& pg = elements_[g];
  const Permutation& px = elements_[x];
  const Permutation& pgi = elements_[inverses_[g]];
  auto idx = lookup([&](std::size_t i) { return pg[px[pgi[base_[i]]]]; });
  if (!idx) throw Error(ErrorCode::internal, "element store is not closed under conjugation");
  return *idx;
}

Index ElementStore::power(Index a, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(orders_[a]);
  std::int64_t e = k % ord;
  if (e < 0) e += ord;
  Index result = 0;
  Index base = a;
  auto ue = static_cast<std::uint64_t>(e);
  while (ue > 0) {
    if (ue & 1U) result = multiply(result, base);
    base = multiply(base, base);
    ue >>= 1U;
  }
  return result;
}

ElementSet ElementStore::closure(const std::vector<Index>& generators) const {
  // Generators already in the subgroup built so far are skipped; each new one
  // triggers a pass over the current elements with the accepted generators.
  ElementSet members(size());
  std::vector<Index> elems{0};
  members.insert(0);
  std::vector<Index> accepted;
  for (Index s : generators) {
    if (members.contains(s)) continue;
    accepted.push_back(s);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      const Index x = elems[head];
      for (Index t : accepted) {
        const Index y = multiply(x, t);
        if (!members.contains(y)) {
          members.insert(y);
          elems.push_back(y);
        }
      }
    }
  }
  return members;
}

}  // namespace cutgroup
