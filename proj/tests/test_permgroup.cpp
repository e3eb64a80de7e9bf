#include <random>
#include <set>

#include "classes.hpp"
#include "doctest.h"
#include "error.hpp"
#include "oracles.hpp"
#include "perm_group.hpp"

using namespace cutgroup;

namespace {

Permutation cyc(std::size_t n, const char* s) { return Permutation::parse_cycles(n, s); }

PermGroup order21() {
  return PermGroup::from_generators({cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")}, 7, "F21");
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto g = cyc(5, "(0 1)(2 3 4)");
  CHECK(element_order(g) == 6);
  CHECK(element_order(Permutation::identity(4)) == 1);
  CHECK(element_order(cyc(3, "(0 1 2)")) == 3);
  CHECK((g * g.inverse()).is_identity());
  CHECK(g.pow(6).is_identity());
  CHECK(g.pow(-1) == g.inverse());
  CHECK(g.to_cycle_string() == "(0 1)(2 3 4)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), Error);
  CHECK_THROWS_AS(cyc(3, "(0 1)(1 2)"), Error);
}

TEST_CASE("composition is associative and inverses are unique") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> a(9), b(9), c(9);
    std::iota(a.begin(), a.end(), 0);
    b = a;
    c = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    Permutation pa(a), pb(b), pc(c);
    CHECK((pa * pb) * pc == pa * (pb * pc));
    CHECK((pa * pa.inverse()).is_identity());
    CHECK((pa.inverse() * pa).is_identity());
  }
}

TEST_CASE("group_from_generators orders") {
  CHECK(PermGroup::from_generators({cyc(3, "(0 1 2)")}, 3).order() == 3);
  CHECK(PermGroup::from_generators({}, 1).order() == 1);

  const auto g = order21();
  CHECK(g.order() == 21);
  const auto a = g.generators()[0];
  const auto b = g.generators()[1];
  CHECK(b * a * b.inverse() == a.pow(2));
  CHECK(oracle::closure(g.generators(), 7).size() == 21);

  CHECK_THROWS_AS(PermGroup::from_generators({cyc(3, "(0 1 2)")}, 4), Error);
  CHECK_THROWS_AS(PermGroup::from_generators({}, 0), Error);
}

TEST_CASE("enumeration cap disables enumeration only") {
  GroupOptions opts;
  opts.enumeration_cap = 10;
  const auto g = PermGroup::from_generators(order21().generators(), 7, "F21", opts);
  CHECK(g.order() == 21);
  CHECK_FALSE(g.is_enumerated());
  CHECK(g.contains(cyc(7, "(0 2 4 6 1 3 5)")));
  CHECK_FALSE(g.contains(cyc(7, "(0 1)")));
  CHECK_THROWS_AS(g.elements(), Error);
  CHECK_THROWS_AS(g.classes(), Error);
}

TEST_CASE("stabilizer chain order matches closure and membership is exact") {
  const std::vector<std::vector<Permutation>> cases = {
      {cyc(6, "(0 1 2 3 4 5)"), cyc(6, "(0 1)")},                  // S6
      {cyc(8, "(0 1 2 3)(4 5 6 7)"), cyc(8, "(0 4)(1 7)(2 6)(3 5)")},  // Q8-ish regular rep
      {cyc(9, "(0 1 2)"), cyc(9, "(0 3 6)(1 4 7)(2 5 8)")},        // C3 wr C3
      {cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")},
  };
  for (const auto& gens : cases) {
    const std::size_t n = gens[0].degree();
    const auto g = PermGroup::from_generators(gens, n);
    const auto elems = oracle::closure(gens, n);
    CHECK(g.order() == elems.size());
    for (const auto& x : elems) CHECK(g.contains(x));
    CHECK(g.elements().elements() == elems);  // sorted, identity first
  }
  const auto s6 = PermGroup::from_generators(cases[0], 6);
  CHECK(s6.order() == 720);
}

TEST_CASE("element store arithmetic agrees with composition") {
  const auto g = PermGroup::from_generators({cyc(9, "(0 1 2)"), cyc(9, "(0 3 6)(1 4 7)(2 5 8)")}, 9);
  const auto& st = g.elements();
  for (Index a = 0; a < st.size(); a += 3) {
    for (Index b = 0; b < st.size(); b += 5) {
      CHECK(st[st.multiply(a, b)] == st[a] * st[b]);
      CHECK(st[st.conjugate(a, b)] == st[a] * st[b] * st[a].inverse());
    }
    CHECK(st[st.inverse(a)] == st[a].inverse());
    CHECK(st[st.power(a, 5)] == st[a].pow(5));
  }
}

TEST_CASE("conjugacy classes") {
  const auto c3 = PermGroup::from_generators({cyc(3, "(0 1 2)")}, 3);
  CHECK(c3.classes().size() == 3);
  for (const auto& cls : c3.classes().classes()) CHECK(cls.size == 1);

  const auto trivial = PermGroup::from_generators({}, 1);
  CHECK(trivial.classes().size() == 1);

  const auto f21 = order21();
  const auto& t = f21.classes();
  std::multiset<std::size_t> sizes;
  std::uint64_t total = 0;
  for (const auto& cls : t.classes()) {
    sizes.insert(cls.size);
    total += cls.size;
    CHECK(f21.order() % cls.size == 0);
  }
  CHECK(total == 21);
  CHECK(sizes == oracle::class_sizes(f21.elements().elements()));
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 3, 7, 7});
  // canonical ordering: identity, then by element order and size
  CHECK(t[0].element_order == 1);
  CHECK(t[1].element_order == 3);
  CHECK(t[3].element_order == 7);
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (Index x : t.members(c)) CHECK(f21.elements().order_of(x) == t[c].element_order);
    CHECK(t.members(c).front() == t[c].representative);
  }
}

TEST_CASE("class power maps") {
  const auto c3 = PermGroup::from_generators({cyc(3, "(0 1 2)")}, 3);
  CHECK(class_power_map(c3.classes(), 1) == std::vector<std::size_t>{0, 1, 2});
  CHECK(class_power_map(c3.classes(), 2) == std::vector<std::size_t>{0, 2, 1});

  const auto f21 = order21();
  const auto& t = f21.classes();
  const auto pm = class_power_map(t, 3);
  // the two size-3 classes hold the elements of order 7
  CHECK(t[3].size == 3);
  CHECK(t[4].size == 3);
  CHECK(pm[3] == 4);
  CHECK(pm[4] == 3);
  CHECK(class_power_map(t, 1) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  // brute force: a^3 is not conjugate to a
  const auto& st = f21.elements();
  const auto a = st[t[3].representative];
  CHECK_FALSE(oracle::conjugacy_orbit(st.elements(), a).count(a.pow(3)));

  // composition property over units mod the exponent
  for (std::int64_t k : {1, 2, 4, 5, 8, 10, 11, 13, 16, 17, 19, 20}) {
    for (std::int64_t k2 : {1, 2, 4, 5, 8, 10}) {
      const auto pk = class_power_map(t, k);
      const auto pk2 = class_power_map(t, k2);
      const auto pkk = class_power_map(t, k * k2);
      for (std::size_t c = 0; c < t.size(); ++c) CHECK(pk[pk2[c]] == pkk[c]);
    }
  }
}

TEST_CASE("centralizer and conjugacy") {
  const auto f21 = order21();
  const auto a = f21.generators()[0];
  CHECK(centralizer(f21, Permutation::identity(7)).order() == 21);
  CHECK(centralizer(f21, a).order() == 7);
  CHECK(are_conjugate(f21, a, a));
  CHECK(are_conjugate(f21, a, a.pow(2)));
  CHECK_FALSE(are_conjugate(f21, a, a.pow(3)));
  CHECK_THROWS_AS(centralizer(f21, cyc(7, "(0 1)")), Error);
  CHECK_THROWS_AS(are_conjugate(f21, a, cyc(7, "(0 1)")), Error);

  const auto c3c3 = PermGroup::from_generators({cyc(6, "(0 1 2)"), cyc(6, "(3 4 5)")}, 6);
  const auto x = c3c3.generators()[0];
  CHECK(centralizer(c3c3, x).order() == 9);
  CHECK_FALSE(are_conjugate(c3c3, x, c3c3.generators()[1]));

  // |class| * |centralizer| = |G| and random conjugates are conjugate
  const auto wr = PermGroup::from_generators({cyc(9, "(0 1 2)"), cyc(9, "(0 3 6)(1 4 7)(2 5 8)")}, 9);
  const auto& st = wr.elements();
  const auto& t = wr.classes();
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Index xi = rng() % st.size();
    const Index gi = rng() % st.size();
    CHECK(are_conjugate(wr, st[xi], st[gi] * st[xi] * st[gi].inverse()));
    CHECK(t[t.class_of(xi)].size * centralizer(wr, st[xi]).order() == wr.order());
  }
}
