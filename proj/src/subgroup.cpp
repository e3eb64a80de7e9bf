#include "subgroup.hpp"

#include <mutex>

#include "error.hpp"

namespace cutgroup {

namespace detail {

struct SubgroupData {
  explicit SubgroupData(PermGroup p) : parent(std::move(p)) {}

  PermGroup parent;
  std::string label;
  std::vector<Index> generators;
  ElementSet members;
  std::uint64_t order = 1;

  std::once_flag group_once;
  std::unique_ptr<PermGroup> group;
};

}  // namespace detail

namespace {

std::shared_ptr<detail::SubgroupData> make_data(const PermGroup& parent, std::vector<Index> gens,
                                                ElementSet members, std::string label) {
  auto d = std::make_shared<detail::SubgroupData>(parent);
  d->label = std::move(label);
  d->generators = std::move(gens);
  d->members = std::move(members);
  d->order = d->members.count();
  return d;
}

}  // namespace

Subgroup Subgroup::generated(const PermGroup& parent, const std::vector<Index>& generators,
                             std::string label) {
  const auto& store = parent.elements();
  std::vector<Index> gens;
  for (Index g : generators) {
    if (g != 0) gens.push_back(g);
  }
  auto members = store.closure(gens);
  // keep the generating set small and deterministic
  auto reduced = irredundant_generators(store, [&] {
    ElementSet s(store.size());
    for (Index g : gens) s.insert(g);
    return s;
  }());
  return Subgroup(make_data(parent, std::move(reduced), std::move(members), std::move(label)));
}

Subgroup Subgroup::generated(const PermGroup& parent, const std::vector<Permutation>& generators,
                             std::string label) {
  const auto& store = parent.elements();
  std::vector<Index> idx;
  idx.reserve(generators.size());
  for (const auto& g : generators) idx.push_back(store.index_of(g));
  return generated(parent, idx, std::move(label));
}

Subgroup Subgroup::from_members(const PermGroup& parent, ElementSet members, std::string label) {
  const auto& store = parent.elements();
  if (members.universe() != store.size()) {
    throw Error(ErrorCode::invalid_argument, "membership set does not match the parent group");
  }
  auto gens = irredundant_generators(store, members);
  return Subgroup(make_data(parent, std::move(gens), std::move(members), std::move(label)));
}

Subgroup Subgroup::trivial(const PermGroup& parent) {
  return generated(parent, std::vector<Index>{}, "1");
}

Subgroup Subgroup::whole(const PermGroup& parent) {
  return generated(parent, parent.generators(), parent.name());
}

const PermGroup& Subgroup::parent() const noexcept { return data_->parent; }
const std::string& Subgroup::label() const noexcept { return data_->label; }
const std::vector<Index>& Subgroup::generator_indices() const noexcept { return data_->generators; }
std::uint64_t Subgroup::order() const noexcept { return data_->order; }
const ElementSet& Subgroup::members() const noexcept { return data_->members; }

std::vector<Permutation> Subgroup::generators() const {
  const auto& store = data_->parent.elements();
  std::vector<Permutation> out;
  out.reserve(data_->generators.size());
  for (Index g : data_->generators) out.push_back(store[g]);
  return out;
}

bool Subgroup::contains(const Permutation& g) const {
  auto idx = data_->parent.elements().find(g);
  return idx && contains(*idx);
}

const PermGroup& Subgroup::group() const {
  std::call_once(data_->group_once, [&] {
    std::string name = data_->label.empty() ? data_->parent.name() + "/sub" : data_->label;
    data_->group = std::make_unique<PermGroup>(PermGroup::from_generators(
        generators(), data_->parent.degree(), std::move(name), data_->parent.options()));
  });
  return *data_->group;
}

Subgroup Subgroup::relabeled(std::string label) const {
  return Subgroup(make_data(data_->parent, data_->generators, data_->members, std::move(label)));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  ElementSet m = a.members();
  m &= b.members();
  return Subgroup::from_members(a.parent(), std::move(m));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> gens = a.generator_indices();
  gens.insert(gens.end(), b.generator_indices().begin(), b.generator_indices().end());
  return Subgroup::generated(a.parent(), gens);
}

Subgroup conjugate(const Subgroup& s, Index g) {
  const auto& store = s.parent().elements();
  std::vector<Index> gens;
  for (Index x : s.generator_indices()) gens.push_back(store.conjugate(g, x));
  return Subgroup::generated(s.parent(), gens);
}

}  // namespace cutgroup
