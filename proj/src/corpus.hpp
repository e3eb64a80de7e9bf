#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "perm_group.hpp"

namespace cutgroup {

// Group constructors. Every matrix or affine construction is realized as a
// permutation action on the underlying set of vectors or residues.

PermGroup cyclic(std::uint64_t n);
PermGroup elementary_abelian(std::uint64_t p, std::uint64_t k);
// Acts on the disjoint union of the factors' point sets.
PermGroup direct_product(const std::vector<PermGroup>& factors, std::string name = {});
PermGroup symmetric(std::uint64_t n);
PermGroup alternating(std::uint64_t n);

// {x -> a^i x + b} on Z/q for a unit a mod q.
PermGroup affine_cyclic(std::uint64_t q, std::uint64_t a, std::string name = {});

// Extraspecial groups of order 27: exponent 3 (Heisenberg, affine maps
// (x, y) -> (x + a, y + bx + c) on Z/3 x Z/3) or exponent 9 (x -> 4^i x + b on Z/9).
PermGroup extraspecial_27(int exponent);

// (C7)^a semidirect C3, the C3 acting by x -> 2x coordinatewise, on 7^a points.
PermGroup frobenius_3_7a(int a);

// A semidirect (C7 semidirect C3) on the 729 elements of the field with 3^6
// elements: translations, multiplication by an element of order 7, and x -> x^9.
PermGroup double_frobenius_15309();

PermGroup wreath_c3_c3();
PermGroup quaternion8();
PermGroup dihedral(std::uint64_t n);

// Arithmetic in the field with 3^6 elements, exposed for the construction's
// self-checks. Elements are indexed sum c_i 3^i by their coefficients over
// the basis 1, x, ..., x^5 modulo the named irreducible sextic.
struct GF729 {
  // x^6 + 2x^4 + x^2 + 2x + 2, coefficients from degree 0 upward.
  static constexpr int kModulus[7] = {2, 2, 1, 0, 2, 0, 1};
  static constexpr std::uint32_t kSize = 729;

  static std::uint32_t add(std::uint32_t a, std::uint32_t b);
  static std::uint32_t mul(std::uint32_t a, std::uint32_t b);
  static std::uint32_t pow(std::uint32_t a, std::uint64_t k);
  static std::uint64_t multiplicative_order(std::uint32_t a);
  static bool modulus_is_irreducible();
  // Least nonzero element (index order) of multiplicative order 7.
  static std::uint32_t order7_element();
};

enum class Family {
  three_group,
  frobenius_3_7a,
  double_frobenius_7_3b,
  abelian,
  odd_control,
  sanity_even_order,
};

std::string family_name(Family f);

struct CorpusEntry {
  std::string name;
  std::string parameters;
  Family family;
  std::uint64_t expected_order;
  std::function<PermGroup()> build;
};

const std::vector<CorpusEntry>& default_corpus();
const CorpusEntry* find_corpus_entry(const std::string& name);

// Builds the group, checks the closed-form order and re-verifies the family
// structurally; throws Error(internal) on any mismatch.
PermGroup build_verified(const CorpusEntry& entry);

// Group JSON: {"name": ..., "degree": n, "generators": [[images...], ...]},
// optionally with a "parent" name for subgroups.
std::string group_to_json(const PermGroup& group, const std::optional<std::string>& parent = {});
PermGroup group_from_json(const std::string& text);
PermGroup load_group(const std::string& path);
void save_group(const PermGroup& group, const std::string& path);

}  // namespace cutgroup
