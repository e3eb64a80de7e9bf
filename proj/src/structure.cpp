#include "structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arith.hpp"
#include "classes.hpp"
#include "error.hpp"

namespace cutgroup {

namespace {

void require_parent(const PermGroup& group, const Subgroup& s) {
  if (!s.parent().shares_data_with(group) && !s.parent().equals(group)) {
    throw Error(ErrorCode::invalid_argument, "subgroup does not belong to the given group");
  }
}

std::vector<Index> generator_indices(const PermGroup& group) {
  const auto& store = group.elements();
  std::vector<Index> out;
  for (const auto& g : group.generators()) out.push_back(store.index_of(g));
  return out;
}

}  // namespace

Subgroup center(const PermGroup& group) {
  const auto& store = group.elements();
  const auto gens = generator_indices(group);
  ElementSet members(store.size());
  for (Index z = 0; z < store.size(); ++z) {
    bool central = true;
    for (Index g : gens) {
      if (store.multiply(z, g) != store.multiply(g, z)) {
        central = false;
        break;
      }
    }
    if (central) members.insert(z);
  }
  return Subgroup::from_members(group, std::move(members), "Z(" + group.name() + ")");
}

Subgroup normalizer(const PermGroup& group, const Subgroup& s) {
  require_parent(group, s);
  const auto& store = group.elements();
  ElementSet members(store.size());
  for (Index x = 0; x < store.size(); ++x) {
    bool ok = true;
    for (Index g : s.generator_indices()) {
      if (!s.contains(store.conjugate(x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) members.insert(x);
  }
  return Subgroup::from_members(group, std::move(members));
}

bool is_normal(const PermGroup& group, const Subgroup& s) {
  require_parent(group, s);
  const auto& store = group.elements();
  for (Index g : generator_indices(group)) {
    for (Index x : s.generator_indices()) {
      if (!s.contains(store.conjugate(g, x))) return false;
    }
  }
  return true;
}

bool is_abelian(const Subgroup& s) {
  const auto& store = s.parent().elements();
  const auto& gens = s.generator_indices();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (store.multiply(gens[i], gens[j]) != store.multiply(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_elementary_abelian(const Subgroup& s) {
  if (!is_abelian(s)) return false;
  const auto& store = s.parent().elements();
  std::uint64_t prime = 0;
  bool ok = true;
  s.members().for_each([&](Index x) {
    if (x == 0 || !ok) return;
    const auto o = store.order_of(x);
    if (prime == 0) prime = o;
    if (o != prime || !is_prime(o)) ok = false;
  });
  return ok;
}

Subgroup sylow_subgroup(const PermGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  const auto& store = group.elements();
  const std::uint64_t target = p_part(group.order(), p);
  const std::string label = "Syl" + std::to_string(p) + "(" + group.name() + ")";
  Subgroup current = Subgroup::trivial(group);
  while (current.order() < target) {
    const Subgroup norm = normalizer(group, current);
    std::optional<Index> step;
    norm.members().for_each([&](Index x) {
      if (step || current.contains(x)) return;
      if (current.contains(store.power(x, static_cast<std::int64_t>(p)))) step = x;
    });
    if (!step) throw Error(ErrorCode::internal, "Sylow ascent found no p-element in the normalizer");
    std::vector<Index> gens = current.generator_indices();
    gens.push_back(*step);
    current = Subgroup::generated(group, gens);
  }
  return current.relabeled(label);
}

Subgroup p_core(const PermGroup& group, std::uint64_t p) {
  const auto& store = group.elements();
  const auto gens = generator_indices(group);
  ElementSet core = sylow_subgroup(group, p).members();
  while (true) {
    ElementSet next = core;
    for (Index g : gens) {
      ElementSet conj(store.size());
      core.for_each([&](Index x) { conj.insert(store.conjugate(g, x)); });
      next &= conj;
    }
    if (next == core) break;
    core = std::move(next);
  }
  return Subgroup::from_members(group, std::move(core),
                                "O" + std::to_string(p) + "(" + group.name() + ")");
}

Subgroup normal_closure(const PermGroup& group, const std::vector<Index>& generators) {
  const auto& store = group.elements();
  const auto ggens = generator_indices(group);
  std::vector<Index> gens;
  for (Index x : generators) {
    if (x != 0) gens.push_back(x);
  }
  ElementSet members = store.closure(gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Index g : ggens) {
        const Index c = store.conjugate(g, gens[i]);
        if (!members.contains(c)) {
          gens.push_back(c);
          members = store.closure(gens);
          changed = true;
        }
      }
    }
  }
  return Subgroup::from_members(group, std::move(members));
}

Subgroup derived_subgroup(const PermGroup& group) {
  const auto& store = group.elements();
  const auto gens = generator_indices(group);
  std::vector<Index> comms;
  for (Index a : gens) {
    for (Index b : gens) {
      const Index c = store.multiply(store.multiply(a, b), store.multiply(store.inverse(a), store.inverse(b)));
      if (c != 0) comms.push_back(c);
    }
  }
  return normal_closure(group, comms).relabeled("[" + group.name() + "," + group.name() + "]");
}

bool is_solvable(const PermGroup& group) {
  PermGroup current = group;
  while (current.order() > 1) {
    const Subgroup d = derived_subgroup(current);
    if (d.order() == current.order()) return false;
    current = d.group();
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& group) {
  const auto& store = group.elements();
  const auto& table = group.classes();
  const std::size_t r = table.size();

  auto class_set = [&](const Subgroup& s) {
    std::vector<bool> cs(r, false);
    for (std::size_t c = 0; c < r; ++c) cs[c] = s.contains(table[c].representative);
    return cs;
  };

  std::map<std::vector<bool>, Subgroup> found;
  auto add = [&](const Subgroup& s) {
    auto cs = class_set(s);
    // a normal subgroup is exactly the union of the classes it meets
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < r; ++c) total += cs[c] ? table[c].size : 0;
    if (total != s.order()) throw Error(ErrorCode::internal, "normal subgroup is not a class union");
    return found.emplace(std::move(cs), s).second;
  };

  add(Subgroup::trivial(group));
  for (std::size_t c = 1; c < r; ++c) {
    add(Subgroup::generated(group, table.members(c)));
  }
  // Every normal subgroup is the join of the class closures it contains.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subgroup> current;
    for (const auto& [cs, s] : found) current.push_back(s);
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].is_subgroup_of(current[j]) || current[j].is_subgroup_of(current[i])) continue;
        const Subgroup joined = join(current[i], current[j]);
        if (found.count(class_set(joined)) == 0) {
          add(joined);
          changed = true;
        }
      }
    }
  }
  (void)store;

  std::vector<std::pair<std::vector<bool>, Subgroup>> entries(found.begin(), found.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
    // classes compared by index: the subgroup containing the earliest
    // differing class comes first
    for (std::size_t c = 0; c < a.first.size(); ++c) {
      if (a.first[c] != b.first[c]) return static_cast<bool>(a.first[c]);
    }
    return false;
  });
  std::vector<Subgroup> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.second));
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& group) {
  const auto all = normal_subgroups(group);
  std::vector<Subgroup> out;
  for (const auto& n : all) {
    if (n.order() == 1) continue;
    bool minimal = true;
    for (const auto& m : all) {
      if (m.order() > 1 && m.order() < n.order() && m.is_subgroup_of(n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

Permutation QuotientGroup::project(Index g) const {
  const auto& store = kernel.parent().elements();
  std::vector<Point> images(coset_representatives.size());
  for (std::size_t c = 0; c < coset_representatives.size(); ++c) {
    images[c] = coset_of[store.multiply(g, coset_representatives[c])];
  }
  return Permutation(std::move(images));
}

Permutation QuotientGroup::project(const Permutation& g) const {
  return project(kernel.parent().elements().index_of(g));
}

QuotientGroup quotient_group(const PermGroup& group, const Subgroup& normal) {
  require_parent(group, normal);
  if (!is_normal(group, normal)) {
    throw Error(ErrorCode::not_normal, "quotient requires a normal subgroup");
  }
  const auto& store = group.elements();
  constexpr Index kNone = 0xffffffffU;
  std::vector<Index> coset_of(store.size(), kNone);
  std::vector<Index> reps;
  const auto kernel_elems = normal.members().to_vector();
  for (Index x = 0; x < store.size(); ++x) {
    if (coset_of[x] != kNone) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index n : kernel_elems) coset_of[store.multiply(x, n)] = id;
  }
  QuotientGroup q{PermGroup::from_generators({}, 1), normal, std::move(coset_of), std::move(reps)};
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(q.project(store.index_of(g)));
  q.group = PermGroup::from_generators(std::move(gens), q.coset_representatives.size(),
                                       group.name() + "/" + normal.label(), group.options());
  return q;
}

std::optional<Subgroup> frobenius_complement(const PermGroup& group, const Subgroup& kernel) {
  require_parent(group, kernel);
  if (kernel.order() <= 1 || kernel.order() >= group.order()) {
    throw Error(ErrorCode::invalid_argument, "Frobenius kernel must satisfy 1 < K < G");
  }
  if (!is_normal(group, kernel)) {
    throw Error(ErrorCode::not_normal, "Frobenius kernel candidate is not normal");
  }
  const std::uint64_t k = kernel.order();
  const std::uint64_t m = group.order() / k;
  // A fixed-point-free complement has order dividing |K| - 1.
  if (std::gcd(k, m) != 1) return std::nullopt;

  const auto& store = group.elements();
  Subgroup h = Subgroup::trivial(group);
  for (Index x = 1; x < store.size() && h.order() < m; ++x) {
    if (h.contains(x) || std::gcd(store.order_of(x), k) != 1) continue;
    std::vector<Index> gens = h.generator_indices();
    gens.push_back(x);
    Subgroup candidate = Subgroup::generated(group, gens);
    if (m % candidate.order() != 0) continue;
    ElementSet meet = candidate.members();
    meet &= kernel.members();
    if (meet.count() != 1) continue;
    h = std::move(candidate);
  }
  if (h.order() != m) return std::nullopt;

  const auto kernel_elems = kernel.members().to_vector();
  bool fixed_point_free = true;
  h.members().for_each([&](Index hx) {
    if (hx == 0 || !fixed_point_free) return;
    for (Index kx : kernel_elems) {
      if (kx != 0 && store.multiply(hx, kx) == store.multiply(kx, hx)) {
        fixed_point_free = false;
        return;
      }
    }
  });
  if (!fixed_point_free) return std::nullopt;
  return h.relabeled("H(" + group.name() + ")");
}

bool is_frobenius_with_kernel(const PermGroup& group, const Subgroup& kernel) {
  return frobenius_complement(group, kernel).has_value();
}

}  // namespace cutgroup
