#include "cut.hpp"

#include <numeric>

#include "arith.hpp"

namespace cutgroup {

ClassVerdict classify_class(const ConjugacyClassTable& table, std::size_t c) {
  const std::uint64_t o = table[c].element_order;
  const std::size_t inv = table.inverse_class(c);
  bool rational = true;
  for (std::uint64_t k = 1; k <= o; ++k) {
    if (std::gcd(k, o) != 1) continue;
    const std::size_t image = table.power_class(c, static_cast<std::int64_t>(k));
    if (image == c) continue;
    if (image == inv) {
      rational = false;
      continue;
    }
    return {ClassRationality::fails, k};
  }
  return {rational ? ClassRationality::rational : ClassRationality::inverse_semi_rational, {}};
}

CutElementResult is_cut_element(const PermGroup& group, const ConjugacyClassTable& table,
                                const Permutation& g) {
  const Index gi = group.elements().index_of(g);
  const auto verdict = classify_class(table, table.class_of(gi));
  return {verdict.kind != ClassRationality::fails, verdict.witness_k};
}

RationalityVerdict is_cut_group(const PermGroup& group) {
  const auto& table = group.classes();
  RationalityVerdict out;
  out.classes.reserve(table.size());
  for (std::size_t c = 0; c < table.size(); ++c) {
    auto v = classify_class(table, c);
    if (v.kind != ClassRationality::rational) out.is_rational = false;
    if (v.kind == ClassRationality::fails) {
      out.is_cut = false;
      if (!out.failing_class) {
        out.failing_class = c;
        out.witness_k = v.witness_k;
      }
    }
    out.classes.push_back(v);
  }
  return out;
}

bool is_rational_group(const PermGroup& group) {
  const auto& table = group.classes();
  for (std::uint64_t k : units_mod(table.exponent())) {
    const auto pm = table.power_map(static_cast<std::int64_t>(k));
    for (std::size_t c = 0; c < pm.size(); ++c) {
      if (pm[c] != c) return false;
    }
  }
  return true;
}

}  // namespace cutgroup
