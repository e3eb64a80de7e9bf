#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perm_group.hpp"
#include "subgroup.hpp"

namespace cutgroup {

Subgroup center(const PermGroup& group);
Subgroup normalizer(const PermGroup& group, const Subgroup& s);
bool is_normal(const PermGroup& group, const Subgroup& s);

bool is_abelian(const Subgroup& s);
// Abelian with every nontrivial element of the same prime order.
bool is_elementary_abelian(const Subgroup& s);

// Sylow p-subgroup by normalizer ascent, seeded with the least element of
// order p; p not dividing |G| gives the trivial subgroup.
Subgroup sylow_subgroup(const PermGroup& group, std::uint64_t p);
// Largest normal p-subgroup (intersection of the conjugates of a Sylow p-subgroup).
Subgroup p_core(const PermGroup& group, std::uint64_t p);

Subgroup normal_closure(const PermGroup& group, const std::vector<Index>& generators);
Subgroup derived_subgroup(const PermGroup& group);
bool is_solvable(const PermGroup& group);

// Every normal subgroup, sorted by order and then by the classes it contains.
std::vector<Subgroup> normal_subgroups(const PermGroup& group);
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& group);

// G/N acting faithfully on the left cosets of N (cosets numbered by their
// least element index).
struct QuotientGroup {
  PermGroup group;
  Subgroup kernel;
  std::vector<Index> coset_of;               // parent element -> coset
  std::vector<Index> coset_representatives;  // least element of each coset

  Permutation project(Index g) const;
  Permutation project(const Permutation& g) const;
};

QuotientGroup quotient_group(const PermGroup& group, const Subgroup& normal);

// A complement H of the normal subgroup K acting fixed-point-freely on K, if
// one exists. Requires K normal with 1 < K < G.
std::optional<Subgroup> frobenius_complement(const PermGroup& group, const Subgroup& kernel);
bool is_frobenius_with_kernel(const PermGroup& group, const Subgroup& kernel);

}  // namespace cutgroup
