// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
// Time limits are wall-clock seconds and are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "arith.hpp"
#include "chartable.hpp"
#include "classes.hpp"
#include "corpus.hpp"
#include "cut.hpp"
#include "oracles.hpp"
#include "structure.hpp"
#include "verifier.hpp"

using namespace cutgroup;

namespace {

constexpr std::uint64_t kTableOrder = 2000;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

int failures = 0;

void criterion(const char* id, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds && out.ok) {
    out.ok = false;
    out.detail = "over time limit; " + out.detail;
  }
  char timing[64];
  if (limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s <= %.0f s", secs, limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
  }
  std::printf("%s  %-28s %s [%s]\n", out.ok ? "PASS" : "FAIL", id, out.detail.c_str(), timing);
  std::fflush(stdout);
  failures += !out.ok;
}

std::vector<PermGroup> small_corpus() {
  std::vector<PermGroup> out;
  for (const auto& e : default_corpus()) {
    if (e.expected_order <= kTableOrder) out.push_back(build_verified(e));
  }
  return out;
}

const Cyclotomic& value_at(const ClassFunction& chi, const Permutation& g) {
  const auto& G = chi.group();
  return chi[G.classes().class_of(G.elements().index_of(g))];
}

}  // namespace

int main() {
  criterion("theorem-suite", 60, [] {
    Outcome o;
    VerifyOptions opt;
    opt.suites = suite_theorem;
    const auto rep = verify_corpus(default_corpus(), opt);
    std::size_t instances = 0;
    for (const auto& r : rep.records) {
      o.require(!r.error, r.name + ": " + r.error.value_or(""));
      if (!r.odd || !r.is_cut.value_or(false)) continue;
      ++instances;
      for (const auto& c : r.checks) o.require(c.status == CheckStatus::pass, r.name + ": " + c.name + " " + c.detail);
    }
    o.require(rep.count(CheckStatus::fail) == 0, "failed checks in report");
    bool big = false;
    for (const auto& r : rep.records) big = big || (r.name == "double_frobenius_15309" && r.is_cut.value_or(false));
    if (o.ok) {
      o.detail = std::to_string(instances) + " odd cut groups, Sylow-3 and O_3 cut in each" +
                 (big ? " (order 15309 included)" : "");
    }
    return o;
  });

  const auto groups = small_corpus();

  criterion("criterion-equivalence", 30, [&] {
    Outcome o;
    std::size_t cut = 0;
    for (const auto& g : groups) {
      const bool a = is_cut_group(g).is_cut;
      const bool b = character_cut_criterion(g, *character_table(g));
      o.require(a == b, g.name() + ": criteria disagree");
      cut += a;
    }
    o.require(groups.size() >= 12, "fewer than 12 groups");
    if (o.ok) o.detail = std::to_string(groups.size()) + " groups of order <= 2000, " + std::to_string(cut) + " cut, exact agreement";
    return o;
  });

  criterion("oracle-equivalence", 30, [&] {
    Outcome o;
    for (const auto& g : groups) {
      o.require(is_cut_group(g).is_cut == oracle::is_cut_brute_force(g.elements().elements()),
                g.name() + ": class verdict differs from brute force");
    }
    if (o.ok) o.detail = std::to_string(groups.size()) + " groups, class verdict = element-by-element verdict";
    return o;
  });

  criterion("chartable-exactness", 0, [&] {
    Outcome o;
    for (const auto& g : groups) {
      const auto t = character_table(g);
      const auto& cls = g.classes();
      std::int64_t squares = 0;
      for (auto d : t->degrees()) squares += d * d;
      o.require(squares == static_cast<std::int64_t>(g.order()), g.name() + ": sum of squared degrees");
      for (std::size_t i = 0; i < t->size(); ++i) {
        for (std::size_t j = i; j < t->size(); ++j) {
          o.require(inner_product((*t)[i], (*t)[j]) == Rational(i == j ? 1 : 0), g.name() + ": row orthogonality");
        }
      }
      for (std::size_t a = 0; a < cls.size(); ++a) {
        for (std::size_t b = a; b < cls.size(); ++b) {
          Cyclotomic s(t->conductor());
          for (const auto& chi : t->characters()) s += chi[a] * chi[b].complex_conjugate();
          const auto expect = a == b ? static_cast<std::int64_t>(cls.centralizer_order(a)) : 0;
          o.require(s == Cyclotomic::rational(t->conductor(), expect), g.name() + ": column orthogonality");
        }
      }
    }
    const auto c3 = cyclic(3);
    const auto t3 = character_table(c3);
    const auto one = Cyclotomic::rational(3, 1);
    const auto z = Cyclotomic::root_of_unity(3, 1);
    const auto z2 = Cyclotomic::root_of_unity(3, 2);
    o.require(t3->size() == 3 && (*t3)[0].values() == std::vector<Cyclotomic>{one, one, one} &&
                  (*t3)[1].values() == std::vector<Cyclotomic>{one, z, z2} &&
                  (*t3)[2].values() == std::vector<Cyclotomic>{one, z2, z},
              "C3 table differs from (1,1,1), (1,z,z^2), (1,z^2,z)");
    const auto t21 = character_table(frobenius_3_7a(1));
    o.require(t21->degrees() == std::vector<std::int64_t>{1, 1, 1, 3, 3}, "order-21 degrees are not 1,1,1,3,3");
    for (std::size_t i = 0; i < t21->size(); ++i) {
      if ((*t21)[i].degree() != 3) continue;
      const auto f = field_of_values((*t21)[i]);
      o.require(f.degree == 2 && !f.is_real, "order-21 degree-3 row without a non-real quadratic field");
    }
    if (o.ok) {
      o.detail = std::to_string(groups.size()) +
                 " tables, zero-tolerance orthogonality; C3 table exact; order 21 degrees 1,1,1,3,3 with "
                 "non-real quadratic fields on the degree-3 rows";
    }
    return o;
  });

  criterion("three-group-field-fact", 0, [] {
    Outcome o;
    std::size_t tables = 0, nonrational = 0;
    for (const auto& e : default_corpus()) {
      if (!is_power_of(e.expected_order, 3) || e.expected_order > kTableOrder) continue;
      const auto g = build_verified(e);
      if (!is_cut_group(g).is_cut) continue;
      ++tables;
      const auto t = character_table(g);
      const auto exp = t->conductor();
      const auto& elems = g.elements().elements();
      for (const auto& chi : t->characters()) {
        const auto f = field_of_values(chi);
        if (f.degree == 1) continue;
        ++nonrational;
        o.require(f.degree == 2 && !f.is_real, g.name() + ": field not a non-real quadratic");
        // stabilizer by direct evaluation at k-th powers of every element
        std::vector<std::uint64_t> fixing;
        for (auto k : units_mod(exp)) {
          bool fixed = true;
          for (const auto& x : elems) fixed = fixed && value_at(chi, x.pow(static_cast<std::int64_t>(k))) == value_at(chi, x);
          if (fixed) fixing.push_back(k);
        }
        std::vector<std::uint64_t> one_mod_3;
        for (auto k : units_mod(exp)) {
          if (k % 3 == 1) one_mod_3.push_back(k);
        }
        o.require(fixing == one_mod_3 && f.stabilizer == one_mod_3, g.name() + ": stabilizer is not {k = 1 mod 3}");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(nonrational) + " non-rational characters over " + std::to_string(tables) +
                 " cut 3-groups: degree 2, non-real, stabilizer {k = 1 mod 3}";
    }
    return o;
  });

  criterion("proof-steps-15309", 120, [] {
    Outcome o;
    const auto g = build_verified(*find_corpus_entry("double_frobenius_15309"));
    VerifyOptions opt;
    opt.suites = suite_proof;
    const auto rec = verify_group(g, "double-frobenius-7-3b", opt);
    o.require(!rec.error, rec.error.value_or(""));
    std::string inertia;
    for (const auto& c : rec.checks) {
      if (c.name != "proof.minimal-normal-central" && c.name != "proof.inertia-trichotomy") continue;
      o.require(c.status == CheckStatus::pass, c.name + ": " + c.detail);
      if (c.name == "proof.inertia-trichotomy") inertia = c.detail;
    }
    o.require(inertia.rfind("728 nontrivial lambda", 0) == 0, "expected 728 nontrivial lambda: " + inertia);
    if (o.ok) o.detail = "M = O central elementary abelian; " + inertia;
    return o;
  });

  criterion("trichotomy-audit", 0, [] {
    Outcome o;
    VerifyOptions opt;
    opt.suites = suite_trichotomy;
    const auto rep = verify_corpus(default_corpus(), opt);
    std::set<std::string> shapes;
    std::size_t audited = 0;
    for (const auto& r : rep.records) {
      o.require(!r.error, r.name + ": " + r.error.value_or(""));
      if (!r.odd || !r.is_cut.value_or(false)) continue;
      ++audited;
      o.require(r.trichotomy_ok.value_or(false), r.name + ": " + r.checks.at(0).detail);
      shapes.insert(r.shape.value_or("?"));
    }
    if (o.ok) {
      std::string s;
      for (const auto& x : shapes) s += (s.empty() ? "" : ", ") + x;
      o.detail = std::to_string(audited) + " odd cut groups, shapes seen: " + s + "; zero exceptions";
    }
    return o;
  });

  criterion("negative-controls", 0, [] {
    Outcome o;
    std::string seen;
    for (const char* name : {"c7", "c9", "ea7_1"}) {
      const auto g = build_verified(*find_corpus_entry(name));
      const auto v = is_cut_group(g);
      o.require(!v.is_cut && v.witness_k.has_value(), std::string(name) + " reported cut");
      if (!v.witness_k) continue;
      const auto& elems = g.elements().elements();
      std::uint64_t least = 0;
      for (const auto& x : elems) {
        const auto k = oracle::least_cut_failure(elems, x);
        if (k != 0 && (least == 0 || k < least)) least = k;
      }
      o.require(*v.witness_k == least, std::string(name) + ": witness differs from the oracle");
      o.require(least == 2 || least == 3, std::string(name) + ": witness not 2 or 3");
      seen += std::string(seen.empty() ? "" : ", ") + name + " k=" + std::to_string(*v.witness_k);
    }
    if (o.ok) o.detail = seen + ", each equal to the brute-force least failing unit";
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
