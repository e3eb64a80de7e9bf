#include "classes.hpp"

#include <algorithm>
#include <numeric>

#include "arith.hpp"

namespace cutgroup {

ConjugacyClassTable::ConjugacyClassTable(const ElementStore& store,
                                         const std::vector<Index>& generators) {
  const std::size_t n = store.size();
  group_order_ = n;
  constexpr std::uint32_t kUnassigned = 0xffffffffU;
  std::vector<std::uint32_t> raw_class(n, kUnassigned);
  std::vector<std::vector<Index>> raw_members;

  for (Index start = 0; start < n; ++start) {
    if (raw_class[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(raw_members.size());
    std::vector<Index> orbit{start};
    raw_class[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Index s : generators) {
        const Index y = store.conjugate(s, orbit[head]);
        if (raw_class[y] == kUnassigned) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw_members.push_back(std::move(orbit));
  }

  std::vector<std::size_t> perm(raw_members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const Index ra = raw_members[a].front();
    const Index rb = raw_members[b].front();
    const auto key_a = std::tuple(store.order_of(ra), raw_members[a].size(), ra);
    const auto key_b = std::tuple(store.order_of(rb), raw_members[b].size(), rb);
    return key_a < key_b;
  });

  std::vector<std::uint32_t> relabel(raw_members.size());
  for (std::size_t c = 0; c < perm.size(); ++c) relabel[perm[c]] = static_cast<std::uint32_t>(c);

  classes_.reserve(perm.size());
  members_.reserve(perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) {
    auto& mem = raw_members[perm[c]];
    const Index rep = mem.front();
    classes_.push_back({rep, mem.size(), store.order_of(rep)});
    members_.push_back(std::move(mem));
  }
  class_of_.resize(n);
  for (std::size_t x = 0; x < n; ++x) class_of_[x] = relabel[raw_class[x]];

  exponent_ = 1;
  for (const auto& cls : classes_) exponent_ = checked_lcm(exponent_, cls.element_order);

  inverse_class_.resize(classes_.size());
  powers_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const Index rep = classes_[c].representative;
    inverse_class_[c] = class_of_[store.inverse(rep)];
    auto& pw = powers_[c];
    pw.resize(classes_[c].element_order);
    Index x = 0;
    for (std::size_t j = 0; j < pw.size(); ++j) {
      pw[j] = class_of_[x];
      x = store.multiply(x, rep);
    }
  }
}

std::size_t ConjugacyClassTable::power_class(std::size_t c, std::int64_t k) const noexcept {
  const auto ord = static_cast<std::int64_t>(powers_[c].size());
  std::int64_t r = k % ord;
  if (r < 0) r += ord;
  return powers_[c][static_cast<std::size_t>(r)];
}

std::vector<std::size_t> ConjugacyClassTable::power_map(std::int64_t k) const {
  std::vector<std::size_t> out(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) out[c] = power_class(c, k);
  return out;
}

const ConjugacyClassTable& conjugacy_classes(const PermGroup& group) { return group.classes(); }

std::vector<std::size_t> class_power_map(const ConjugacyClassTable& table, std::int64_t k) {
  return table.power_map(k);
}

PermGroup centralizer(const PermGroup& group, const Permutation& g) {
  const ElementStore& store = group.elements();
  const Index gi = store.index_of(g);
  ElementSet members(store.size());
  for (Index x = 0; x < store.size(); ++x) {
    if (store.multiply(x, gi) == store.multiply(gi, x)) members.insert(x);
  }
  std::vector<Permutation> gens;
  for (Index x : irredundant_generators(store, members)) gens.push_back(store[x]);
  return PermGroup::from_generators(std::move(gens), group.degree(),
                                    "C(" + group.name() + ", " + g.to_cycle_string() + ")",
                                    group.options());
}

bool are_conjugate(const PermGroup& group, const Permutation& x, const Permutation& y) {
  const ElementStore& store = group.elements();
  const Index xi = store.index_of(x);
  const Index yi = store.index_of(y);
  const auto& table = group.classes();
  return table.class_of(xi) == table.class_of(yi);
}

}  // namespace cutgroup
