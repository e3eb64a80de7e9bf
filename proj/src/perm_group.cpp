#include "perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "classes.hpp"
#include "error.hpp"
#include "stabilizer_chain.hpp"

namespace cutgroup {

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  StabilizerChain chain{0};
  std::uint64_t order = 1;
  GroupOptions options;
  std::unique_ptr<ElementStore> store;

  mutable std::once_flag classes_once;
  mutable std::unique_ptr<ConjugacyClassTable> classes;
};

}  // namespace detail

namespace {

std::vector<Permutation> enumerate(const StabilizerChain& chain) {
  const auto base = chain.base();
  std::vector<Permutation> out;
  out.reserve(chain.order());
  std::vector<Permutation> prefix{Permutation::identity(chain.degree())};
  // Depth-first over transversal choices; every element is t_1 * t_2 * ... * t_m.
  std::vector<std::size_t> choice(base.size(), 0);
  if (base.empty()) {
    out.push_back(prefix[0]);
    return out;
  }
  std::size_t depth = 0;
  prefix.resize(base.size() + 1);
  while (true) {
    const auto& trans = chain.transversal(base[depth]);
    if (choice[depth] < trans.size()) {
      prefix[depth + 1] = prefix[depth] * trans[choice[depth]];
      ++choice[depth];
      if (depth + 1 == base.size()) {
        out.push_back(prefix[depth + 1]);
      } else {
        ++depth;
        choice[depth] = 0;
      }
    } else {
      if (depth == 0) break;
      --depth;
    }
  }
  return out;
}

}  // namespace

PermGroup PermGroup::from_generators(std::vector<Permutation> generators, std::size_t degree,
                                     std::string name, GroupOptions options) {
  if (degree == 0) throw Error(ErrorCode::invalid_argument, "group degree must be at least 1");
  if (degree > kMaxDegree) {
    throw Error(ErrorCode::invalid_argument, "group degree " + std::to_string(degree) +
                                                 " exceeds the maximum of " +
                                                 std::to_string(kMaxDegree));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != degree) {
      throw Error(ErrorCode::degree_mismatch,
                  "generator " + std::to_string(i) + " has degree " +
                      std::to_string(generators[i].degree()) + ", expected " +
                      std::to_string(degree));
    }
  }
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->generators = std::move(generators);
  data->options = options;
  data->chain = StabilizerChain(degree);
  for (const auto& g : data->generators) data->chain.add_generator(g);
  data->order = data->chain.order();
  if (data->order <= options.enumeration_cap) {
    auto elems = enumerate(data->chain);
    std::sort(elems.begin(), elems.end());
    data->store = std::make_unique<ElementStore>(std::move(elems), data->chain.base());
  }
  return PermGroup(std::move(data), std::move(name));
}

PermGroup PermGroup::renamed(std::string name) const { return PermGroup(data_, std::move(name)); }

std::size_t PermGroup::degree() const noexcept { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return data_->generators; }
std::uint64_t PermGroup::order() const noexcept { return data_->order; }
const GroupOptions& PermGroup::options() const noexcept { return data_->options; }
std::vector<Point> PermGroup::base() const { return data_->chain.base(); }
bool PermGroup::is_enumerated() const noexcept { return data_->store != nullptr; }

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != data_->degree) return false;
  if (data_->store) return data_->store->find(g).has_value();
  return data_->chain.contains(g);
}

bool PermGroup::is_abelian() const {
  const auto& gens = data_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

const ElementStore& PermGroup::elements() const {
  if (!data_->store) {
    throw Error(ErrorCode::cap_exceeded,
                "group of order " + std::to_string(data_->order) +
                    " exceeds the enumeration cap of " +
                    std::to_string(data_->options.enumeration_cap));
  }
  return *data_->store;
}

const ConjugacyClassTable& PermGroup::classes() const {
  const ElementStore& store = elements();
  std::call_once(data_->classes_once, [&] {
    std::vector<Index> gens;
    gens.reserve(data_->generators.size());
    for (const auto& g : data_->generators) gens.push_back(store.index_of(g));
    data_->classes = std::make_unique<ConjugacyClassTable>(store, gens);
  });
  return *data_->classes;
}

bool PermGroup::equals(const PermGroup& other) const {
  if (data_ == other.data_) return true;
  if (degree() != other.degree() || order() != other.order()) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

std::string PermGroup::canonical_key() const {
  std::string key = std::to_string(degree()) + ":";
  for (const auto& g : generators()) {
    for (auto p : g.images()) {
      key += std::to_string(p);
      key += ',';
    }
    key += ';';
  }
  return key;
}

std::vector<Index> irredundant_generators(const ElementStore& store, const ElementSet& members) {
  std::vector<Index> gens;
  ElementSet current = store.closure(gens);
  members.for_each([&](Index x) {
    if (!current.contains(x)) {
      gens.push_back(x);
      current = store.closure(gens);
    }
  });
  return gens;
}

}  // namespace cutgroup
