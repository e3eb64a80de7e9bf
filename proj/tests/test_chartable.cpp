#include <complex>
#include <numbers>
#include <random>

#include "arith.hpp"
#include "chartable.hpp"
#include "classes.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "structure.hpp"

using namespace cutgroup;
using Complex = std::complex<double>;

namespace {

PermGroup corpus_group(const char* name) { return build_verified(*find_corpus_entry(name)); }

Complex approx(const Cyclotomic& x) {
  Complex out = 0;
  const double e = static_cast<double>(x.conductor());
  for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
    const auto& q = x.coefficients()[j];
    const double v = static_cast<double>(q.num()) / static_cast<double>(q.den());
    out += v * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / e);
  }
  return out;
}

bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-9; }

Cyclotomic random_cyclotomic(std::uint64_t e, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Cyclotomic x(e);
  for (std::uint64_t j = 0; j < e; ++j) x.add_root(j, Rational(coef(rng), den(rng)));
  return x;
}

// Value of chi at an arbitrary element.
const Cyclotomic& at(const ClassFunction& chi, const Permutation& g) {
  const auto& G = chi.group();
  return chi[G.classes().class_of(G.elements().index_of(g))];
}

}  // namespace

TEST_CASE("cyclotomic polynomials and field arithmetic") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(21).size() == 13);
  const auto p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(std::count(p105.begin(), p105.end(), -2) == 2);

  std::mt19937 rng(7);
  for (std::uint64_t e : {1, 2, 3, 9, 21, 27}) {
    const Cyclotomic one = Cyclotomic::rational(e, 1);
    Cyclotomic sum(e);
    for (std::uint64_t j = 0; j < e; ++j) sum += Cyclotomic::root_of_unity(e, static_cast<std::int64_t>(j));
    if (e > 1) CHECK(sum.is_zero());
    CHECK(Cyclotomic::root_of_unity(e, static_cast<std::int64_t>(e)) == one);
    CHECK(Cyclotomic::root_of_unity(e, 1) * Cyclotomic::root_of_unity(e, -1) == one);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_cyclotomic(e, rng);
      const auto b = random_cyclotomic(e, rng);
      const auto c = random_cyclotomic(e, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(close(approx(a * b), approx(a) * approx(b)));
      CHECK(close(approx(a.complex_conjugate()), std::conj(approx(a))));
      const auto real = a + a.complex_conjugate();
      CHECK(real.complex_conjugate() == real);
      CHECK(a.embed(3 * e).descend(e) == a);
      for (auto k : units_mod(e)) CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    }
  }
  const auto z9 = Cyclotomic::root_of_unity(9, 1);
  CHECK_THROWS_AS(z9.descend(3), Error);
  CHECK(Cyclotomic::root_of_unity(9, 3).descend(3) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(3, 1).to_string() == "z");
  CHECK(Cyclotomic::root_of_unity(3, 2).to_string() == "-1 - z");
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), Error);
  CHECK(Rational(6, -4) == Rational(-3, 2));
}

TEST_CASE("dixon prime choice") {
  CHECK(dixon_prime(3, 3, 100000000) == 7);
  CHECK(dixon_prime(21, 21, 100000000) == 43);
  CHECK(dixon_prime(1, 1, 100000000) == 3);
  CHECK_THROWS_AS(dixon_prime(21, 21, 40), Error);
}

TEST_CASE("table of C3") {
  const auto g = cyclic(3);
  const auto t = character_table(g);
  REQUIRE(t->size() == 3);
  const auto one = Cyclotomic::rational(3, 1);
  const auto z = Cyclotomic::root_of_unity(3, 1);
  const auto z2 = Cyclotomic::root_of_unity(3, 2);
  const auto& cls = g.classes();
  CHECK(g.elements()[cls[1].representative] == Permutation::parse_cycles(3, "(0 1 2)"));
  CHECK((*t)[0].values() == std::vector<Cyclotomic>{one, one, one});
  CHECK((*t)[1].values() == std::vector<Cyclotomic>{one, z, z2});
  CHECK((*t)[2].values() == std::vector<Cyclotomic>{one, z2, z});
  CHECK(t->conductor() == 3);
  // forced Dixon path gives the identical table
  const auto d = character_table(g, {.force_dixon = true});
  CHECK(d->method() == "dixon");
  CHECK(d->prime() == 7);
  for (std::size_t i = 0; i < 3; ++i) CHECK((*d)[i] == (*t)[i]);
}

TEST_CASE("order-21 and S3 tables against brute force") {
  const auto g = frobenius_3_7a(1);
  const auto t = character_table(g);
  CHECK(t->method() == "dixon");
  CHECK(t->degrees() == std::vector<std::int64_t>{1, 1, 1, 3, 3});
  for (std::size_t i = 3; i < 5; ++i) {
    const auto f = field_of_values((*t)[i]);
    CHECK(f.degree == 2);
    CHECK_FALSE(f.is_real);
    CHECK(f.is_imaginary_quadratic);
  }
  // The degree-3 rows are the inductions of nontrivial linear characters of C7.
  const auto elems = g.elements().elements();
  const auto a = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)");
  std::set<Permutation> c7;
  for (int i = 0; i < 7; ++i) c7.insert(a.pow(i));
  std::vector<std::vector<Complex>> induced;
  for (int j = 1; j < 7; ++j) {
    induced.push_back(oracle::induced_values<Complex>(elems, c7, [&](const Permutation& y) {
      int i = 0;
      while (a.pow(i) != y) ++i;
      return std::polar(1.0, 2 * std::numbers::pi * i * j / 7);
    }));
  }
  for (std::size_t i = 3; i < 5; ++i) {
    bool found = false;
    for (const auto& v : induced) {
      bool same = true;
      for (std::size_t x = 0; x < elems.size(); ++x) same = same && close(v[x], approx(at((*t)[i], elems[x])));
      found = found || same;
    }
    CHECK(found);
  }

  const auto s3 = symmetric(3);
  const auto ts = character_table(s3);
  CHECK(ts->degrees() == std::vector<std::int64_t>{1, 1, 2});
  for (const auto& chi : ts->characters()) {
    for (const auto& v : chi.values()) CHECK(v.is_rational());
  }
  // sign character and permutation character minus trivial, element by element
  for (const auto& x : s3.elements().elements()) {
    CHECK(at((*ts)[1], x) == Cyclotomic::rational(ts->conductor(), oracle::sign(x)));
    std::int64_t fixed = 0;
    for (Point p = 0; p < 3; ++p) fixed += x[p] == p;
    CHECK(at((*ts)[2], x) == Cyclotomic::rational(ts->conductor(), fixed - 1));
  }
}

TEST_CASE("orthogonality and degree identity over the corpus") {
  std::size_t checked = 0;
  for (const auto& entry : default_corpus()) {
    if (entry.expected_order > 2000) continue;
    const auto g = build_verified(entry);
    const auto t = character_table(g);
    const auto& cls = g.classes();
    const std::size_t r = t->size();
    REQUIRE(r == cls.size());
    std::int64_t sum = 0;
    for (auto d : t->degrees()) {
      sum += d * d;
      CHECK(g.order() % static_cast<std::uint64_t>(d) == 0);
    }
    CHECK(sum == static_cast<std::int64_t>(g.order()));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i; j < r; ++j) {
        CHECK(inner_product((*t)[i], (*t)[j]) == Rational(i == j ? 1 : 0));
      }
    }
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = a; b < r; ++b) {
        Cyclotomic s(t->conductor());
        for (const auto& chi : t->characters()) s += chi[a] * chi[b].complex_conjugate();
        const auto expected = a == b ? static_cast<std::int64_t>(cls.centralizer_order(a)) : 0;
        CHECK(s == Cyclotomic::rational(t->conductor(), expected));
      }
    }
    const auto unique = oracle::degrees_by_sum_of_squares_candidates(g.order(), r);
    if (!unique.empty()) {
      const auto degs = t->degrees();
      CHECK(std::multiset<std::size_t>(degs.begin(), degs.end()) == unique);
    }
    ++checked;
  }
  CHECK(checked >= 12);
}

TEST_CASE("Dixon path agrees with the abelian construction") {
  for (const auto* name : {"c9xc3", "c3xc3xc3", "c21", "c15", "c27", "trivial"}) {
    const auto g = corpus_group(name);
    const auto a = character_table(g);
    const auto d = character_table(g, {.force_dixon = true});
    CHECK(a->method() == "abelian");
    REQUIRE(a->size() == d->size());
    for (std::size_t i = 0; i < a->size(); ++i) CHECK((*a)[i] == (*d)[i]);
  }
}

TEST_CASE("Galois action on rows") {
  for (const auto* name : {"frobenius21", "heisenberg27", "c9", "c3wrc3", "f39"}) {
    const auto g = corpus_group(name);
    const auto t = character_table(g);
    const std::uint64_t e = t->conductor();
    const auto units = units_mod(e);
    for (std::size_t i = 0; i < t->size(); ++i) {
      const auto& chi = (*t)[i];
      CHECK(galois_apply(1, chi) == chi);
      // power-map action equals the field automorphism on values
      for (auto k : units) {
        const auto img = galois_apply(k, chi);
        for (std::size_t c = 0; c < chi.size(); ++c) CHECK(img[c] == chi[c].galois(k));
        CHECK_NOTHROW(t->index_of(img));
        for (auto k2 : units) {
          CHECK(galois_apply(k2, img) == galois_apply(k * k2 % e, chi));
        }
      }
      if (e > 1) {
        const auto bar = galois_apply(e - 1, chi);
        for (std::size_t c = 0; c < chi.size(); ++c) CHECK(bar[c] == chi[c].complex_conjugate());
      }
    }
  }
  const auto t3 = character_table(cyclic(3));
  CHECK(galois_apply(2, (*t3)[1]) == (*t3)[2]);
  CHECK_THROWS_AS(galois_apply(3, (*t3)[1]), Error);
}

TEST_CASE("inner products, induction and restriction") {
  const auto g = frobenius_3_7a(1);
  const auto t = character_table(g);
  const auto reg = ClassFunction::regular(g);
  for (const auto& chi : t->characters()) CHECK(inner_product(reg, chi) == Rational(chi.degree()));

  const auto one = Subgroup::trivial(g);
  CHECK(induce(ClassFunction::trivial(one.group()), g) == reg);

  const auto c7 = sylow_subgroup(g, 7);
  const auto t7 = character_table(c7.group());
  const auto ind = induce((*t7)[1], g);
  CHECK(ind.degree() == 3);
  CHECK(inner_product(ind, ind) == Rational(1));
  CHECK_NOTHROW(t->index_of(ind));

  for (const auto& chi : t->characters()) {
    CHECK(restrict(chi, Subgroup::whole(g)) == chi);
    const auto r1 = restrict(chi, one);
    CHECK(r1 == Rational(chi.degree()) * ClassFunction::trivial(one.group()));
  }
  // degree-3 rows restrict to three distinct nontrivial linear characters of C7
  const auto parts = clifford_constituents((*t)[3], c7);
  CHECK(parts.size() == 3);
  for (const auto& [theta, m] : parts) {
    CHECK(m == 1);
    CHECK(theta.degree() == 1);
    CHECK_FALSE(theta == ClassFunction::trivial(c7.group()));
  }

  std::mt19937 rng(11);
  for (const auto* name : {"frobenius21", "frobenius147", "heisenberg27", "c3wrc3", "f21xc3", "s4", "f55"}) {
    const auto G = corpus_group(name);
    const auto tg = character_table(G);
    std::vector<Subgroup> subs;
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      if (G.order() % p != 0) continue;
      subs.push_back(sylow_subgroup(G, p));
      subs.push_back(p_core(G, p));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto& H = subs[rng() % subs.size()];
      const auto th = character_table(H.group());
      const auto& theta = (*th)[rng() % th->size()];
      const auto& chi = (*tg)[rng() % tg->size()];
      const auto up = induce(theta, G);
      CHECK(up.degree() == static_cast<std::int64_t>(G.order() / H.order()) * theta.degree());
      CHECK(inner_product(up, chi) == inner_product(theta, restrict(chi, H)));
    }
  }
}

TEST_CASE("fields of values and the character criterion") {
  const auto c3 = cyclic(3);
  const auto t3 = character_table(c3);
  CHECK(field_of_values((*t3)[0]).degree == 1);
  const auto f = field_of_values((*t3)[1]);
  CHECK(f.degree == 2);
  CHECK_FALSE(f.is_real);
  CHECK(character_cut_criterion(c3, *t3));

  const auto c7 = cyclic(7);
  const auto t7 = character_table(c7);
  CHECK(field_of_values((*t7)[1]).degree == 6);
  CHECK_FALSE(character_cut_criterion(c7, *t7));

  const auto f21 = frobenius_3_7a(1);
  CHECK(character_cut_criterion(f21, *character_table(f21)));
  const auto s3 = symmetric(3);
  for (const auto& chi : character_table(s3)->characters()) CHECK(field_of_values(chi).degree == 1);
}

TEST_CASE("inertia groups") {
  const auto g = frobenius_3_7a(1);
  const auto c7 = sylow_subgroup(g, 7);
  const auto t7 = character_table(c7.group());
  CHECK(inertia_group(g, c7, (*t7)[0]).order() == 21);
  const auto elems = g.elements().elements();
  const auto n_elems = c7.group().elements().elements();
  for (std::size_t i = 1; i < t7->size(); ++i) {
    const auto& lambda = (*t7)[i];
    const auto inert = inertia_group(g, c7, lambda);
    CHECK(inert == c7);
    const auto brute = oracle::inertia(elems, n_elems, [&](const Permutation& n) { return at(lambda, n); });
    CHECK(brute.size() == inert.order());
    for (const auto& x : brute) CHECK(inert.contains(x));
  }

  // central normal subgroup: every character is invariant
  const auto he = extraspecial_27(3);
  const auto z = center(he);
  for (const auto& theta : character_table(z.group())->characters()) {
    CHECK(inertia_group(he, z, theta).order() == 27);
  }
  CHECK_THROWS_AS(inertia_group(g, sylow_subgroup(g, 3), ClassFunction::trivial(sylow_subgroup(g, 3).group())),
                  Error);

  // conjugate characters agree with the element formula
  const auto b = Permutation::parse_cycles(7, "(1 2 4)(3 6 5)");
  const auto lam = (*t7)[1];
  const auto conj = conjugate_character(g, c7, lam, b);
  for (const auto& n : n_elems) CHECK(at(conj, n) == at(lam, b * n * b.inverse()));
}

TEST_CASE("Clifford constituents form one orbit") {
  for (const auto* name : {"frobenius21", "frobenius147", "heisenberg27", "c3wrc3", "f21xc3", "s4", "a4"}) {
    const auto G = corpus_group(name);
    const auto tg = character_table(G);
    for (const auto& N : normal_subgroups(G)) {
      const ConjugationAction action(G, N);
      for (const auto& chi : tg->characters()) {
        const auto parts = clifford_constituents(chi, N);
        REQUIRE_FALSE(parts.empty());
        const auto m = parts.front().second;
        for (const auto& [theta, mult] : parts) CHECK(mult == m);
        // orbit of the first constituent equals the constituent set
        std::vector<ClassFunction> orbit;
        for (Index rep : action.coset_representatives()) {
          auto img = action.conjugate(parts.front().first, rep);
          if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
        }
        CHECK(orbit.size() == parts.size());
        for (const auto& [theta, mult] : parts) {
          CHECK(std::find(orbit.begin(), orbit.end(), theta) != orbit.end());
        }
        CHECK(static_cast<std::int64_t>(parts.size()) * m * parts.front().first.degree() == chi.degree());
      }
    }
  }
  const auto g = frobenius_3_7a(1);
  const auto t = character_table(g);
  const auto whole = clifford_constituents((*t)[3], Subgroup::whole(g));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].second == 1);
  const auto triv = clifford_constituents((*t)[4], Subgroup::trivial(g));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].second == 3);
}

TEST_CASE("table JSON export") {
  const auto text = character_table_to_json(*character_table(cyclic(3)));
  CHECK(text.find("\"conductor\": 3") != std::string::npos);
  CHECK(text.find("\"-1\"") != std::string::npos);
}
