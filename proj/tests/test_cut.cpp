#include "arith.hpp"
#include "chartable.hpp"
#include "classes.hpp"
#include "corpus.hpp"
#include "cut.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "structure.hpp"

using namespace cutgroup;

namespace {

PermGroup corpus_group(const char* name) { return build_verified(*find_corpus_entry(name)); }

CutElementResult cut_of(const PermGroup& g, const Permutation& x) {
  return is_cut_element(g, g.classes(), x);
}

}  // namespace

TEST_CASE("element verdicts") {
  const auto c3 = cyclic(3);
  CHECK(cut_of(c3, Permutation::parse_cycles(3, "(0 1 2)")).is_cut);

  const auto c9 = cyclic(9);
  const auto g9 = Permutation::parse_cycles(9, "(0 1 2 3 4 5 6 7 8)");
  const auto r9 = cut_of(c9, g9);
  CHECK_FALSE(r9.is_cut);
  CHECK(r9.witness_k == 2);
  CHECK(oracle::least_cut_failure(c9.elements().elements(), g9) == 2);

  const auto f21 = frobenius_3_7a(1);
  const auto a = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)");
  CHECK(cut_of(f21, a).is_cut);
  CHECK(are_conjugate(f21, a.pow(2), a));
  CHECK(are_conjugate(f21, a.pow(4), a));
  for (int k : {3, 5, 6}) CHECK(are_conjugate(f21, a.pow(k), a.inverse()));
  CHECK_THROWS_AS(cut_of(f21, Permutation::parse_cycles(7, "(0 1)")), Error);
}

TEST_CASE("group verdicts") {
  CHECK(is_cut_group(elementary_abelian(3, 2)).is_cut);
  const auto v7 = is_cut_group(cyclic(7));
  CHECK_FALSE(v7.is_cut);
  CHECK(v7.witness_k == 2);
  CHECK(is_cut_group(extraspecial_27(3)).is_cut);
  CHECK(is_cut_group(frobenius_3_7a(1)).is_cut);

  CHECK(is_rational_group(corpus_group("trivial")));
  CHECK_FALSE(is_rational_group(cyclic(3)));
  CHECK(is_rational_group(symmetric(3)));
  CHECK(is_rational_group(symmetric(4)));
  CHECK_FALSE(is_rational_group(frobenius_3_7a(1)));
}

TEST_CASE("negative controls carry oracle-validated witnesses") {
  for (auto [name, k] : {std::pair{"c7", 2}, {"c9", 2}, {"ea7_1", 2}}) {
    const auto g = corpus_group(name);
    const auto v = is_cut_group(g);
    CHECK_FALSE(v.is_cut);
    REQUIRE(v.failing_class.has_value());
    CHECK(v.witness_k == static_cast<std::uint64_t>(k));
    const auto& rep = g.elements()[g.classes()[*v.failing_class].representative];
    CHECK(oracle::least_cut_failure(g.elements().elements(), rep) == static_cast<std::uint64_t>(k));
  }
}

TEST_CASE("class-based verdict equals the element-by-element oracle") {
  std::size_t checked = 0;
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000) continue;
    const auto g = build_verified(entry);
    const auto v = is_cut_group(g);
    const auto& elems = g.elements().elements();
    CHECK_MESSAGE(v.is_cut == oracle::is_cut_brute_force(elems), entry.name);
    // the per-class verdict holds for every element of the class
    const auto& cls = g.classes();
    for (Index x = 0; x < elems.size(); ++x) {
      const auto expected = v.classes[cls.class_of(x)].witness_k.value_or(0);
      CHECK(oracle::least_cut_failure(elems, elems[x]) == expected);
    }
    if (is_rational_group(g)) CHECK(v.is_cut);
    CHECK(v.is_rational == is_rational_group(g));
    ++checked;
  }
  CHECK(checked >= 12);
}

TEST_CASE("conjugacy and character criteria agree") {
  std::size_t checked = 0;
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000) continue;
    const auto g = build_verified(entry);
    CHECK_MESSAGE(is_cut_group(g).is_cut == character_cut_criterion(g, *character_table(g)), entry.name);
    ++checked;
  }
  CHECK(checked >= 12);
}

TEST_CASE("odd abelian groups are cut exactly at exponent 1 or 3") {
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000 || entry.expected_order % 2 == 0) continue;
    const auto g = build_verified(entry);
    if (!g.is_abelian()) continue;
    const auto e = g.classes().exponent();
    CHECK_MESSAGE(is_cut_group(g).is_cut == (e == 1 || e == 3), entry.name);
  }
}

TEST_CASE("quotients of cut groups are cut") {
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000) continue;
    const auto g = build_verified(entry);
    if (!is_cut_group(g).is_cut) continue;
    for (const auto& n : normal_subgroups(g)) {
      CHECK_MESSAGE(is_cut_group(quotient_group(g, n).group).is_cut, entry.name);
    }
  }
}

TEST_CASE("fields of values of cut 3-groups are Q or Q(sqrt -3)") {
  std::size_t groups = 0;
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000 || !is_power_of(entry.expected_order, 3)) continue;
    const auto g = build_verified(entry);
    if (!is_cut_group(g).is_cut) continue;
    ++groups;
    const auto t = character_table(g);
    const auto e = t->conductor();
    std::vector<std::uint64_t> one_mod_3;
    for (auto k : units_mod(e)) {
      if (k % 3 == 1) one_mod_3.push_back(k);
    }
    for (const auto& chi : t->characters()) {
      const auto f = field_of_values(chi);
      CHECK(f.degree <= 2);
      if (f.degree == 2) {
        CHECK_FALSE(f.is_real);
        CHECK(f.stabilizer == one_mod_3);
      }
    }
  }
  CHECK(groups >= 5);
}

TEST_CASE("odd-order Galois units fix characters with field degree at most 2") {
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000 || entry.expected_order % 2 == 0) continue;
    const auto g = build_verified(entry);
    const auto t = character_table(g);
    const auto e = t->conductor();
    for (auto k : units_mod(e)) {
      if (k % 3 != 1) continue;
      std::uint64_t ord = 1;
      for (std::uint64_t x = k % e; x != 1 % e; x = x * k % e) ++ord;
      if (ord % 2 == 0) continue;
      for (const auto& chi : t->characters()) {
        if (field_of_values(chi).degree <= 2) CHECK(galois_apply(k, chi) == chi);
      }
    }
  }
}
