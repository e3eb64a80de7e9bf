#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "perm_group.hpp"
#include "subgroup.hpp"

namespace cutgroup {

// A function on the conjugacy classes of a group (in class-table order) with
// values in Q(zeta_e), e the group exponent.
class ClassFunction {
 public:
  ClassFunction(PermGroup group, std::vector<Cyclotomic> values);

  static ClassFunction trivial(const PermGroup& group);
  static ClassFunction regular(const PermGroup& group);

  const PermGroup& group() const noexcept { return group_; }
  std::uint64_t conductor() const noexcept;
  std::size_t size() const noexcept { return values_.size(); }
  const Cyclotomic& operator[](std::size_t c) const noexcept { return values_[c]; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }

  // Value at the identity; throws Error(invalid_argument) unless it is an integer.
  std::int64_t degree() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Rational& q, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  PermGroup group_;
  std::vector<Cyclotomic> values_;
};

struct CharacterTableOptions {
  std::uint64_t prime_bound = 100000000;
  // Use the Dixon-Schneider path even for abelian groups.
  bool force_dixon = false;
};

class CharacterTable {
 public:
  CharacterTable(PermGroup group, std::vector<ClassFunction> rows, std::string method,
                 std::uint64_t prime);

  const PermGroup& group() const noexcept { return group_; }
  std::uint64_t conductor() const noexcept;
  std::size_t size() const noexcept { return rows_.size(); }
  const ClassFunction& operator[](std::size_t i) const noexcept { return rows_[i]; }
  const std::vector<ClassFunction>& characters() const noexcept { return rows_; }
  std::vector<std::int64_t> degrees() const;

  // "abelian" or "dixon"; the modular prime is 0 for the abelian path.
  const std::string& method() const noexcept { return method_; }
  std::uint64_t prime() const noexcept { return prime_; }

  // Row index of an irreducible character; throws Error(invalid_argument) if absent.
  std::size_t index_of(const ClassFunction& chi) const;

 private:
  PermGroup group_;
  std::vector<ClassFunction> rows_;
  std::string method_;
  std::uint64_t prime_;
};

// Least prime p = 1 (mod e) with p^2 > 4 |G|; Error(no_dixon_prime) above the bound.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent, std::uint64_t bound);

// Irreducible characters sorted by degree, trivial character first, then by
// descending coefficient vectors class by class. Tables computed with default
// options are cached per group generator list.
std::shared_ptr<const CharacterTable> character_table(const PermGroup& group,
                                                      const CharacterTableOptions& options = {});

// (1/|G|) sum over classes of size * phi * conj(psi); throws
// Error(invalid_argument) for different groups or a non-rational result.
Rational inner_product(const ClassFunction& phi, const ClassFunction& psi);

// fusion[d] = class of G containing H-class d. Throws Error(not_a_member)
// unless H <= G.
std::vector<std::size_t> class_fusion(const PermGroup& subgroup, const PermGroup& group);

ClassFunction induce(const ClassFunction& theta, const PermGroup& group);
ClassFunction restrict(const ClassFunction& chi, const Subgroup& subgroup);

// chi^sigma_k (g) = chi(g^k); k must be a unit modulo the conductor.
ClassFunction galois_apply(std::uint64_t k, const ClassFunction& chi);

struct FieldOfValues {
  std::uint64_t degree;
  bool is_real;
  bool is_imaginary_quadratic;
  std::vector<std::uint64_t> stabilizer;  // units k mod e with chi^sigma_k = chi
};

FieldOfValues field_of_values(const ClassFunction& chi);

// Every irreducible has a field of values Q or imaginary quadratic.
bool character_cut_criterion(const PermGroup& group, const CharacterTable& table);

// Conjugation action of G on the classes of a normal subgroup N: for each
// coset gN (g the least element of its coset), the class permutation
// c -> class of g n g^-1.
class ConjugationAction {
 public:
  ConjugationAction(const PermGroup& group, const Subgroup& normal);

  const Subgroup& normal() const noexcept { return normal_; }
  const std::vector<Index>& coset_representatives() const noexcept { return reps_; }
  const std::vector<std::size_t>& class_permutation(std::size_t coset) const noexcept {
    return perms_[coset];
  }
  std::size_t coset_of(Index g) const noexcept { return coset_of_[g]; }

  // theta^g (n) = theta(g n g^-1).
  ClassFunction conjugate(const ClassFunction& theta, Index g) const;
  Subgroup inertia_group(const ClassFunction& theta) const;
  // Members of the inertia group over the parent's element indices.
  ElementSet inertia_members(const ClassFunction& theta) const;
  // Cosets whose representative fixes theta.
  std::vector<std::size_t> stabilizing_cosets(const ClassFunction& theta) const;

 private:
  PermGroup group_;
  Subgroup normal_;
  std::vector<Index> reps_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::vector<std::size_t>> perms_;
};

// {g in G : theta^g = theta}; throws Error(not_normal) unless N is normal.
Subgroup inertia_group(const PermGroup& group, const Subgroup& normal, const ClassFunction& theta);

ClassFunction conjugate_character(const PermGroup& group, const Subgroup& normal,
                                  const ClassFunction& theta, const Permutation& g);

// Irreducible constituents of chi restricted to N, with multiplicities, in
// the row order of the table of N.
std::vector<std::pair<ClassFunction, std::int64_t>> clifford_constituents(const ClassFunction& chi,
                                                                          const Subgroup& normal);

// Conductor, class labels and rows as exact coefficient vectors.
std::string character_table_to_json(const CharacterTable& table);
std::string character_table_to_text(const CharacterTable& table);

}  // namespace cutgroup
