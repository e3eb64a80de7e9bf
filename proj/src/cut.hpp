#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "classes.hpp"
#include "perm_group.hpp"

namespace cutgroup {

enum class ClassRationality {
  rational,               // every generator of <g> is conjugate to g
  inverse_semi_rational,  // every generator is conjugate to g or g^-1, not all to g
  fails,
};

struct ClassVerdict {
  ClassRationality kind;
  std::optional<std::uint64_t> witness_k;  // least failing unit exponent when kind == fails
};

struct RationalityVerdict {
  std::vector<ClassVerdict> classes;  // indexed like the class table
  bool is_rational = true;
  bool is_cut = true;
  std::optional<std::size_t> failing_class;  // first failing class in class order
  std::optional<std::uint64_t> witness_k;
};

struct CutElementResult {
  bool is_cut;
  std::optional<std::uint64_t> witness_k;
};

// The predicate depends only on the class of g: if x g x^-1 = h then
// h^k = x g^k x^-1, so class(h^k) is class(g^k), and likewise for inverses.
ClassVerdict classify_class(const ConjugacyClassTable& table, std::size_t c);

CutElementResult is_cut_element(const PermGroup& group, const ConjugacyClassTable& table,
                                const Permutation& g);

RationalityVerdict is_cut_group(const PermGroup& group);
bool is_rational_group(const PermGroup& group);

}  // namespace cutgroup
