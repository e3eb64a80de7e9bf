#include "verifier.hpp"

#include <atomic>
#include <chrono>
#include <complex>
#include <numbers>
#include <sstream>
#include <thread>

#include "arith.hpp"
#include "chartable.hpp"
#include "classes.hpp"
#include "cut.hpp"
#include "json.hpp"
#include "structure.hpp"

namespace cutgroup {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct CheckInfo {
  const char* name;
  const char* claim;
};

constexpr CheckInfo kSylowCut{"theorem.sylow3-cut",
                              "a Sylow 3-subgroup P of an odd-order cut group G is cut"};
constexpr CheckInfo kCoreCut{"theorem.core3-cut", "O_3(G) of an odd-order cut group G is cut"};
constexpr CheckInfo kShape{"trichotomy.shape",
                           "an odd-order cut group is a 3-group, a Frobenius group of order 3*7^a "
                           "with kernel its Sylow 7-subgroup, or has order 7*3^b with O_3(G)H "
                           "Frobenius with kernel O_3(G) and G/O_3(G) nonabelian of order 21"};
constexpr CheckInfo kMinimal{"proof.minimal-normal-central",
                             "some minimal normal subgroup M of G lies in Z(O) and is elementary abelian"};
constexpr CheckInfo kInertia{"proof.inertia-trichotomy",
                             "for every nontrivial lambda in Irr(M), I_G(lambda) is O or a Sylow "
                             "3-subgroup, I_P(lambda) is O or P, and H meets I_G(lambda) trivially"};
constexpr CheckInfo kClifford{"proof.clifford-induction",
                              "if I_G(lambda) = P, every phi in Irr(P) over lambda induces to an "
                              "irreducible character of G"};
constexpr CheckInfo kGalois{"proof.galois-commutes",
                            "for units k = 1 mod 3, sigma_k commutes with induction from O to P "
                            "and with conjugation by t"};
constexpr CheckInfo kOrbit{"proof.constituent-orbit",
                           "if phi in Irr(P) is reducible on O, then phi_O = theta + theta^t + "
                           "theta^(t^-1) with the three constituents distinct"};
constexpr CheckInfo kCoreInertia{"proof.core-inertia",
                                 "H meets I_G(theta) trivially for every theta in Irr(O) lying "
                                 "over a nontrivial character of M"};
constexpr CheckInfo kEquivalence{"equivalence.criteria",
                                 "G is cut by the conjugacy criterion iff every irreducible "
                                 "character has field of values Q or an imaginary quadratic field"};

class CheckScope {
 public:
  CheckScope(GroupRecord& record, const CheckInfo& info) : record_(record), start_(Clock::now()) {
    result_.name = info.name;
    result_.claim = info.claim;
  }
  ~CheckScope() {
    result_.seconds = since(start_);
    record_.checks.push_back(std::move(result_));
  }
  CheckScope(const CheckScope&) = delete;
  CheckScope& operator=(const CheckScope&) = delete;

  void pass(std::string detail) { set(CheckStatus::pass, std::move(detail)); }
  void fail(std::string detail) { set(CheckStatus::fail, std::move(detail)); }
  void skip(std::string reason) { set(CheckStatus::skipped, std::move(reason)); }

 private:
  void set(CheckStatus s, std::string detail) {
    result_.status = s;
    result_.detail = std::move(detail);
  }
  GroupRecord& record_;
  Clock::time_point start_;
  CheckResult result_;
};

void skip_all(GroupRecord& record, std::initializer_list<CheckInfo> infos, const std::string& reason) {
  for (const auto& info : infos) CheckScope(record, info).skip(reason);
}

std::string witness_text(const PermGroup& g, const RationalityVerdict& v) {
  const auto& cls = g.classes();
  const auto& rep = g.elements()[cls[*v.failing_class].representative];
  return "k = " + std::to_string(*v.witness_k) + " fails at " + rep.to_cycle_string() + " of order " +
         std::to_string(cls[*v.failing_class].element_order);
}

std::string not_cut_reason(const GroupRecord& record) {
  if (!record.odd) return "hypothesis not met: group order is even";
  std::string out = "hypothesis not met: group is not cut";
  if (record.witness) out += " (k = " + std::to_string(record.witness->k) + " fails)";
  return out;
}

Subgroup in_group(const PermGroup& host, const Subgroup& s, const std::string& label) {
  return Subgroup::generated(host, s.generators(), label);
}

bool centralizes(const Subgroup& a, const Subgroup& b) {
  const auto& store = a.parent().elements();
  for (Index x : a.generator_indices()) {
    for (Index y : b.generator_indices()) {
      if (store.multiply(x, y) != store.multiply(y, x)) return false;
    }
  }
  return true;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string prime_power(std::uint64_t n, std::uint64_t p) {
  int a = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++a;
  }
  return a == 1 ? str(p) : str(p) + "^" + std::to_string(a);
}

std::string table_cap_reason(const char* what, std::uint64_t order, std::uint64_t cap) {
  return std::string("needs ") + what + " of order " + str(order) + ", above the table cap " + str(cap);
}

// Least element of P outside O of order 3, as an index in P's store.
std::optional<Index> order3_outside(const PermGroup& p_group, const Subgroup& o_in_p) {
  const auto& store = p_group.elements();
  for (Index x = 0; x < store.size(); ++x) {
    if (!o_in_p.contains(x) && store.order_of(x) == 3) return x;
  }
  return std::nullopt;
}

std::optional<Index> any_outside(const PermGroup& p_group, const Subgroup& o_in_p) {
  const auto& store = p_group.elements();
  for (Index x = 0; x < store.size(); ++x) {
    if (!o_in_p.contains(x)) return x;
  }
  return std::nullopt;
}

using Numeric = std::vector<std::complex<double>>;

Numeric numeric(const ClassFunction& f) {
  const double e = static_cast<double>(f.conductor());
  Numeric out;
  out.reserve(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) {
    std::complex<double> v = 0;
    const auto& coeffs = f[c].coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      const double q = static_cast<double>(coeffs[j].num()) / static_cast<double>(coeffs[j].den());
      v += q * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / e);
    }
    out.push_back(v);
  }
  return out;
}

// Approximate inner product; only used to rank candidates that are then checked exactly.
double numeric_inner(const Numeric& a, const Numeric& b, const ConjugacyClassTable& table) {
  std::complex<double> sum = 0;
  for (std::size_t c = 0; c < a.size(); ++c) sum += static_cast<double>(table[c].size) * a[c] * std::conj(b[c]);
  return std::abs(sum) / static_cast<double>(table.group_order());
}

}  // namespace

unsigned parse_suite(const std::string& name) {
  if (name == "theorem") return suite_theorem;
  if (name == "trichotomy") return suite_trichotomy;
  if (name == "proof") return suite_proof;
  if (name == "equivalence") return suite_equivalence;
  if (name == "all") return suite_all;
  throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

const char* shape_name(OrderShape s) {
  switch (s) {
    case OrderShape::three_group:
      return "3^b";
    case OrderShape::three_times_seven_power:
      return "3*7^a";
    case OrderShape::seven_times_three_power:
      return "7*3^b";
    case OrderShape::other:
      return "other";
  }
  return "?";
}

OrderShape classify_order(std::uint64_t n) {
  if (is_power_of(n, 3)) return OrderShape::three_group;
  if (n % 3 == 0 && n / 3 > 1 && is_power_of(n / 3, 7)) return OrderShape::three_times_seven_power;
  if (n % 7 == 0 && n / 7 >= 9 && is_power_of(n / 7, 3)) return OrderShape::seven_times_three_power;
  return OrderShape::other;
}

bool GroupRecord::failed() const {
  if (error) return true;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return true;
  }
  return false;
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& r : records) {
    for (const auto& c : r.checks) n += c.status == s;
  }
  return n;
}

std::size_t VerificationReport::errors() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.error.has_value();
  return n;
}

bool VerificationReport::passed() const {
  for (const auto& r : records) {
    if (r.failed()) return false;
  }
  return true;
}

void verify_theorem(const PermGroup& g, GroupRecord& rec, const VerifyOptions&) {
  const auto P = sylow_subgroup(g, 3);
  const auto O = p_core(g, 3);
  const auto vp = is_cut_group(P.group());
  const auto vo = is_cut_group(O.group());
  rec.sylow3_cut = vp.is_cut;
  rec.core3_cut = vo.is_cut;
  if (!rec.odd || !*rec.is_cut) {
    skip_all(rec, {kSylowCut, kCoreCut}, not_cut_reason(rec));
    return;
  }
  {
    CheckScope c(rec, kSylowCut);
    if (vp.is_cut) {
      c.pass("P of order " + str(P.order()) + " is cut");
    } else {
      c.fail("P of order " + str(P.order()) + " is not cut: " + witness_text(P.group(), vp));
    }
  }
  CheckScope c(rec, kCoreCut);
  if (vo.is_cut) {
    c.pass("O_3(G) of order " + str(O.order()) + " is cut");
  } else {
    c.fail("O_3(G) of order " + str(O.order()) + " is not cut: " + witness_text(O.group(), vo));
  }
}

void verify_trichotomy(const PermGroup& g, GroupRecord& rec, const VerifyOptions&) {
  const auto shape = classify_order(g.order());
  rec.shape = shape_name(shape);
  if (!rec.odd || !*rec.is_cut) {
    skip_all(rec, {kShape}, not_cut_reason(rec));
    return;
  }
  CheckScope c(rec, kShape);
  switch (shape) {
    case OrderShape::three_group:
      rec.trichotomy_ok = true;
      c.pass("order " + str(g.order()) + " is a power of 3");
      return;
    case OrderShape::three_times_seven_power: {
      const auto k = sylow_subgroup(g, 7);
      const bool ok = is_normal(g, k) && is_frobenius_with_kernel(g, k);
      rec.trichotomy_ok = ok;
      if (ok) {
        c.pass("order 3*" + prime_power(k.order(), 7) + "; Frobenius with kernel the Sylow 7-subgroup");
      } else {
        c.fail("order 3*" + prime_power(k.order(), 7) + " but G is not Frobenius with kernel the Sylow 7-subgroup");
      }
      return;
    }
    case OrderShape::seven_times_three_power: {
      const auto O = p_core(g, 3);
      const auto P = sylow_subgroup(g, 3);
      const auto H = sylow_subgroup(g, 7);
      std::vector<std::string> problems;
      if (O.order() == 1) problems.push_back("O_3(G) is trivial");
      if (O.order() > 1 && O.order() < P.order()) {
        const auto oh = join(O, H);
        const auto kernel = in_group(oh.group(), O, "O");
        if (!is_frobenius_with_kernel(oh.group(), kernel)) problems.push_back("OH is not Frobenius with kernel O");
      } else if (O.order() == P.order()) {
        problems.push_back("O_3(G) is the whole Sylow 3-subgroup");
      }
      if (P.order() != 3 * O.order()) problems.push_back("[P : O_3(G)] is not 3");
      if (O.order() > 1) {
        const auto q = quotient_group(g, O);
        if (q.group.order() != 21 || center(q.group).order() != 1) {
          problems.push_back("G/O_3(G) is not nonabelian of order 21");
        }
      }
      rec.trichotomy_ok = problems.empty();
      if (problems.empty()) {
        c.pass("order 7*" + prime_power(P.order(), 3) + "; OH Frobenius with kernel O of order " + str(O.order()) +
               ", G/O nonabelian of order 21");
      } else {
        std::string d = "order 7*" + prime_power(P.order(), 3) + ":";
        for (const auto& p : problems) d += " " + p + ";";
        c.fail(d);
      }
      return;
    }
    case OrderShape::other:
      rec.trichotomy_ok = false;
      c.fail("order " + str(g.order()) + " has none of the shapes 3^b, 3*7^a, 7*3^b");
      return;
  }
}

void verify_proof_steps(const PermGroup& g, GroupRecord& rec, const VerifyOptions& opt) {
  const std::initializer_list<CheckInfo> all{kMinimal, kInertia, kClifford, kGalois, kOrbit, kCoreInertia};
  const auto O = p_core(g, 3);
  if (opt.enforce_hypotheses) {
    if (!rec.odd || !*rec.is_cut) {
      skip_all(rec, all, not_cut_reason(rec));
      return;
    }
    if (classify_order(g.order()) != OrderShape::seven_times_three_power) {
      skip_all(rec, all, std::string("hypothesis not met: order is not of shape 7*3^b with b >= 2"));
      return;
    }
  }
  if (O.order() == 1) {
    skip_all(rec, all, "hypothesis not met: O_3(G) is trivial");
    return;
  }
  const auto P = sylow_subgroup(g, 3);
  const auto H = sylow_subgroup(g, 7);
  const std::uint64_t cap = opt.table_cap;

  std::optional<Subgroup> M;
  {
    CheckScope c(rec, kMinimal);
    const auto mins = minimal_normal_subgroups(g);
    for (const auto& m : mins) {
      if (m.is_subgroup_of(O) && centralizes(m, O) && is_elementary_abelian(m)) {
        M = m;
        break;
      }
    }
    if (M) {
      c.pass("M of order " + str(M->order()) + " is minimal normal, elementary abelian and central in O of order " +
             str(O.order()) + (M->order() == O.order() ? " (M = O)" : ""));
    } else {
      std::string orders;
      for (const auto& m : mins) orders += (orders.empty() ? "" : ", ") + str(m.order());
      c.fail("no minimal normal subgroup is an elementary abelian subgroup of Z(O); minimal normal orders: " +
             orders);
    }
  }

  std::vector<std::size_t> over_p;  // rows of Irr(M) with inertia group exactly P
  std::shared_ptr<const CharacterTable> irr_m;
  {
    CheckScope c(rec, kInertia);
    if (!M) {
      c.skip("no central minimal normal subgroup M");
    } else if (M->order() > cap) {
      c.skip(table_cap_reason("Irr(M)", M->order(), cap));
    } else {
      irr_m = character_table(M->group());
      const ConjugationAction action(g, *M);
      std::size_t to_o = 0, to_p = 0, to_conj = 0;
      std::optional<std::string> failure;
      for (std::size_t i = 1; i < irr_m->size() && !failure; ++i) {
        auto inertia = action.inertia_members((*irr_m)[i]);
        if (inertia == O.members()) {
          ++to_o;
        } else if (inertia == P.members()) {
          ++to_p;
          over_p.push_back(i);
        } else if (inertia.count() == P.order() && O.members().is_subset_of(inertia)) {
          ++to_conj;
        } else {
          failure = "lambda #" + str(i) + " has inertia group of order " + str(inertia.count());
          break;
        }
        auto in_p = inertia;
        in_p &= P.members();
        if (!(in_p == O.members()) && !(in_p == P.members())) {
          failure = "lambda #" + str(i) + ": I_P(lambda) of order " + str(in_p.count()) + " is neither O nor P";
        }
        auto in_h = inertia;
        in_h &= H.members();
        if (in_h.count() != 1) {
          failure = "lambda #" + str(i) + ": H meets I_G(lambda) in " + str(in_h.count()) + " elements";
        }
      }
      if (failure) {
        c.fail(*failure);
      } else {
        c.pass(str(irr_m->size() - 1) + " nontrivial lambda: " + str(to_o) + " with I_G = O, " + str(to_p) +
               " with I_G = P, " + str(to_conj) + " with I_G a conjugate of P; H meets each trivially");
      }
    }
  }

  const bool p_is_o = P.order() == O.order();
  const PermGroup& p_group = P.group();
  const auto o_in_p = in_group(p_group, O, "O");
  std::shared_ptr<const CharacterTable> irr_p;
  std::shared_ptr<const CharacterTable> irr_o;

  {
    CheckScope c(rec, kClifford);
    if (!irr_m) {
      c.skip("inertia groups were not computed");
    } else if (over_p.empty()) {
      c.skip("hypothesis absent: no nontrivial lambda has I_G(lambda) = P");
    } else if (P.order() > cap) {
      c.skip(table_cap_reason("Irr(P)", P.order(), cap));
    } else {
      irr_p = character_table(p_group);
      const auto m_in_p = in_group(p_group, *M, "M");
      std::size_t induced = 0;
      std::optional<std::string> failure;
      for (std::size_t f = 0; f < irr_p->size() && !failure; ++f) {
        const auto& phi = (*irr_p)[f];
        const auto phi_m = restrict(phi, m_in_p);
        for (auto i : over_p) {
          if (inner_product(phi_m, (*irr_m)[i]).is_zero()) continue;
          const auto up = induce(phi, g);
          const auto norm = inner_product(up, up);
          if (!(norm == Rational(1))) {
            failure = "phi #" + str(f) + " over lambda #" + str(i) + " induces with norm " + norm.to_string();
            break;
          }
          ++induced;
          break;
        }
      }
      if (failure) {
        c.fail(*failure);
      } else if (induced == 0) {
        c.fail("no character of P lies over a lambda with I_G(lambda) = P");
      } else {
        c.pass(str(induced) + " characters of P over " + str(over_p.size()) +
               " lambda with I_G(lambda) = P induce irreducibly to G");
      }
    }
  }

  std::optional<ConjugationAction> act_p;
  std::optional<Index> t;
  if (!p_is_o) {
    act_p.emplace(p_group, o_in_p);
    t = order3_outside(p_group, o_in_p);
  }

  {
    CheckScope c(rec, kGalois);
    if (p_is_o) {
      c.skip("hypothesis absent: P = O");
    } else if (O.order() > cap) {
      c.skip(table_cap_reason("Irr(O)", O.order(), cap));
    } else {
      irr_o = character_table(O.group());
      const Index conj_by = t ? *t : *any_outside(p_group, o_in_p);
      const std::uint64_t e_p = p_group.classes().exponent();
      const std::uint64_t e_o = irr_o->conductor();
      std::vector<std::uint64_t> units;
      for (auto k : units_mod(e_p)) {
        if (k % 3 == 1) units.push_back(k);
      }
      const std::size_t stride = std::max<std::size_t>(1, irr_o->size() / 64);
      std::size_t sampled = 0;
      std::optional<std::string> failure;
      for (std::size_t i = 0; i < irr_o->size() && !failure; i += stride) {
        const auto& theta = (*irr_o)[i];
        const auto up = induce(theta, p_group);
        const auto theta_t = act_p->conjugate(theta, conj_by);
        ++sampled;
        for (auto k : units) {
          const auto theta_k = galois_apply(k % e_o, theta);
          if (!(galois_apply(k, up) == induce(theta_k, p_group))) {
            failure = "theta #" + str(i) + ", k = " + str(k) + ": sigma_k does not commute with induction";
            break;
          }
          if (!(galois_apply(k % e_o, theta_t) == act_p->conjugate(theta_k, conj_by))) {
            failure = "theta #" + str(i) + ", k = " + str(k) + ": sigma_k does not commute with conjugation";
            break;
          }
        }
      }
      if (failure) {
        c.fail(*failure);
      } else {
        c.pass(str(sampled) + " theta in Irr(O), " + str(units.size()) + " units k mod " + str(e_p) +
               " with k = 1 mod 3");
      }
    }
  }

  {
    CheckScope c(rec, kOrbit);
    if (p_is_o) {
      c.skip("hypothesis absent: P = O");
    } else if (P.order() != 3 * O.order()) {
      c.fail("[P : O] = " + str(P.order() / O.order()) + ", not 3");
    } else if (!t) {
      c.fail("no element of order 3 in P outside O");
    } else if (P.order() > cap) {
      c.skip(table_cap_reason("Irr(P)", P.order(), cap));
    } else {
      if (!irr_p) irr_p = character_table(p_group);
      if (!irr_o) irr_o = character_table(O.group());
      const Index t_inv = p_group.elements().inverse(*t);
      std::vector<Numeric> approx;
      for (const auto& theta : irr_o->characters()) approx.push_back(numeric(theta));
      const auto& o_classes = o_in_p.group().classes();
      std::size_t reducible = 0;
      std::optional<std::string> failure;
      for (std::size_t f = 0; f < irr_p->size() && !failure; ++f) {
        const auto psi = restrict((*irr_p)[f], o_in_p);
        if (inner_product(psi, psi) == Rational(1)) continue;
        ++reducible;
        const auto psi_approx = numeric(psi);
        const ClassFunction* theta = nullptr;
        for (std::size_t i = 0; i < irr_o->size() && !theta; ++i) {
          if (numeric_inner(psi_approx, approx[i], o_classes) < 0.5) continue;
          if (!inner_product(psi, (*irr_o)[i]).is_zero()) theta = &(*irr_o)[i];
        }
        if (!theta) {
          failure = "phi #" + str(f) + " has no constituent on O";
          break;
        }
        const auto th_t = act_p->conjugate(*theta, *t);
        const auto th_ti = act_p->conjugate(*theta, t_inv);
        if (*theta == th_t || *theta == th_ti || th_t == th_ti) {
          failure = "phi #" + str(f) + ": theta, theta^t, theta^(t^-1) are not distinct";
        } else if (!(psi == *theta + th_t + th_ti)) {
          failure = "phi #" + str(f) + ": phi_O differs from theta + theta^t + theta^(t^-1)";
        }
      }
      if (failure) {
        c.fail(*failure);
      } else {
        c.pass(str(reducible) + " characters of P reducible on O, each a sum of three distinct conjugates");
      }
    }
  }

  CheckScope c(rec, kCoreInertia);
  if (!M) {
    c.skip("no central minimal normal subgroup M");
  } else if (O.order() > cap) {
    c.skip(table_cap_reason("Irr(O)", O.order(), cap));
  } else {
    if (!irr_o) irr_o = character_table(O.group());
    const ConjugationAction act_o(g, O);
    const auto m_in_o = in_group(O.group(), *M, "M");
    const auto trivial_m = ClassFunction::trivial(m_in_o.group());
    std::size_t over = 0;
    std::optional<std::string> failure;
    for (std::size_t i = 0; i < irr_o->size(); ++i) {
      const auto& theta = (*irr_o)[i];
      if (restrict(theta, m_in_o) == Rational(theta.degree()) * trivial_m) continue;
      ++over;
      auto in_h = act_o.inertia_members(theta);
      in_h &= H.members();
      if (in_h.count() != 1) {
        failure = "theta #" + str(i) + ": H meets I_G(theta) in " + str(in_h.count()) + " elements";
        break;
      }
    }
    if (failure) {
      c.fail(*failure);
    } else {
      c.pass(str(over) + " theta in Irr(O) over nontrivial lambda; H meets each inertia group trivially");
    }
  }
}

void verify_equivalence(const PermGroup& g, GroupRecord& rec, const VerifyOptions& opt) {
  CheckScope c(rec, kEquivalence);
  if (g.order() > opt.table_cap) {
    c.skip(table_cap_reason("Irr(G)", g.order(), opt.table_cap));
    return;
  }
  const auto table = character_table(g);
  const bool by_chars = character_cut_criterion(g, *table);
  rec.is_cut_character = by_chars;
  const std::string both = std::string("conjugacy: ") + (*rec.is_cut ? "cut" : "not cut") +
                           ", characters: " + (by_chars ? "cut" : "not cut");
  if (by_chars == *rec.is_cut) {
    c.pass(both);
  } else {
    c.fail(both);
  }
}

GroupRecord verify_group(const PermGroup& g, const std::string& family, const VerifyOptions& opt) {
  const auto start = Clock::now();
  GroupRecord rec;
  rec.name = g.name();
  rec.family = family;
  rec.order = g.order();
  rec.odd = g.order() % 2 == 1;
  try {
    const auto v = is_cut_group(g);
    rec.is_cut = v.is_cut;
    rec.is_rational = v.is_rational;
    if (v.failing_class) {
      const auto& cls = g.classes();
      rec.witness = CutWitness{*v.failing_class,
                               g.elements()[cls[*v.failing_class].representative].to_cycle_string(),
                               cls[*v.failing_class].element_order, *v.witness_k};
    }
    if (opt.suites & suite_theorem) verify_theorem(g, rec, opt);
    if (opt.suites & suite_trichotomy) verify_trichotomy(g, rec, opt);
    if (opt.suites & suite_proof) verify_proof_steps(g, rec, opt);
    if (opt.suites & suite_equivalence) verify_equivalence(g, rec, opt);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.seconds = since(start);
  return rec;
}

VerificationReport verify_corpus(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt) {
  std::vector<const CorpusEntry*> selected;
  for (const auto& e : entries) {
    if (e.expected_order <= opt.max_order) selected.push_back(&e);
  }
  VerificationReport report;
  report.options = opt;
  report.records.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const auto& entry = *selected[i];
      try {
        report.records[i] = verify_group(build_verified(entry), family_name(entry.family), opt);
      } catch (const std::exception& e) {
        GroupRecord rec;
        rec.name = entry.name;
        rec.family = family_name(entry.family);
        rec.order = entry.expected_order;
        rec.odd = entry.expected_order % 2 == 1;
        rec.error = e.what();
        report.records[i] = std::move(rec);
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(selected.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return report;
}

namespace {

template <typename T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<std::string> suite_names(unsigned suites) {
  std::vector<std::string> out;
  if (suites & suite_theorem) out.emplace_back("theorem");
  if (suites & suite_trichotomy) out.emplace_back("trichotomy");
  if (suites & suite_proof) out.emplace_back("proof");
  if (suites & suite_equivalence) out.emplace_back("equivalence");
  return out;
}

const char* yes_no(const std::optional<bool>& v) {
  if (!v) return "-";
  return *v ? "yes" : "no";
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  const auto& opt = report.options;
  json j;
  j["schema"] = "cutgroup-report/1";
  j["suites"] = suite_names(opt.suites);
  j["options"] = {{"max_order", opt.max_order == UINT64_MAX ? json(nullptr) : json(opt.max_order)},
                  {"table_cap", opt.table_cap}};
  j["summary"] = {{"groups", report.records.size()},
                  {"passed", report.count(CheckStatus::pass)},
                  {"failed", report.count(CheckStatus::fail)},
                  {"skipped", report.count(CheckStatus::skipped)},
                  {"errors", report.errors()},
                  {"ok", report.passed()}};
  json groups = json::array();
  for (const auto& r : report.records) {
    json g;
    g["name"] = r.name;
    g["family"] = r.family;
    g["order"] = r.order;
    g["odd"] = r.odd;
    g["is_cut"] = {{"conjugacy", opt_json(r.is_cut)}, {"character", opt_json(r.is_cut_character)}};
    g["is_rational"] = opt_json(r.is_rational);
    if (r.witness) {
      g["witness"] = {{"class", r.witness->class_index},
                      {"representative", r.witness->representative},
                      {"element_order", r.witness->element_order},
                      {"k", r.witness->k}};
    } else {
      g["witness"] = nullptr;
    }
    g["sylow3_cut"] = opt_json(r.sylow3_cut);
    g["core3_cut"] = opt_json(r.core3_cut);
    g["shape"] = opt_json(r.shape);
    g["trichotomy_ok"] = opt_json(r.trichotomy_ok);
    json checks = json::array();
    for (const auto& c : r.checks) {
      json cj = {{"name", c.name}, {"claim", c.claim}, {"status", status_name(c.status)}, {"detail", c.detail}};
      if (opt.timings) cj["seconds"] = c.seconds;
      checks.push_back(std::move(cj));
    }
    g["checks"] = std::move(checks);
    g["error"] = opt_json(r.error);
    if (opt.timings) g["seconds"] = r.seconds;
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    out << r.name << " (order " << r.order << ", " << r.family << "): cut " << yes_no(r.is_cut);
    if (r.is_cut_character) out << " / characters " << yes_no(r.is_cut_character);
    out << ", Sylow-3 cut " << yes_no(r.sylow3_cut) << ", O_3 cut " << yes_no(r.core3_cut);
    if (report.options.timings) out << " [" << r.seconds << " s]";
    out << "\n";
    if (r.error) out << "  error    " << *r.error << "\n";
    for (const auto& c : r.checks) {
      std::string status = status_name(c.status);
      status.resize(8, ' ');
      out << "  " << status << " " << c.name << ": " << c.detail;
      if (report.options.timings) out << " [" << c.seconds << " s]";
      out << "\n";
    }
  }
  out << "summary: " << report.records.size() << " groups, " << report.count(CheckStatus::pass) << " passed, "
      << report.count(CheckStatus::fail) << " failed, " << report.count(CheckStatus::skipped) << " skipped, "
      << report.errors() << " errors\n";
  return out.str();
}

namespace {

json analyze(const PermGroup& g) {
  json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["generators"] = g.generators().size();
  const auto& cls = g.classes();
  const auto& store = g.elements();
  j["exponent"] = cls.exponent();
  j["abelian"] = g.is_abelian();
  const auto v = is_cut_group(g);
  j["is_cut"] = v.is_cut;
  j["is_rational"] = v.is_rational;
  if (v.failing_class) {
    j["witness"] = {{"class", *v.failing_class},
                    {"representative", store[cls[*v.failing_class].representative].to_cycle_string()},
                    {"element_order", cls[*v.failing_class].element_order},
                    {"k", *v.witness_k}};
  } else {
    j["witness"] = nullptr;
  }
  if (g.order() <= VerifyOptions{}.table_cap) {
    j["character_criterion"] = character_cut_criterion(g, *character_table(g));
  } else {
    j["character_criterion"] = nullptr;
  }
  json classes = json::array();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const char* kind = "rational";
    switch (v.classes[c].kind) {
      case ClassRationality::rational:
        break;
      case ClassRationality::inverse_semi_rational:
        kind = "inverse-semi-rational";
        break;
      case ClassRationality::fails:
        kind = "fails";
        break;
    }
    classes.push_back({{"order", cls[c].element_order},
                       {"size", cls[c].size},
                       {"representative", store[cls[c].representative].to_cycle_string()},
                       {"rationality", kind}});
  }
  j["classes"] = std::move(classes);
  j["center_order"] = center(g).order();
  json sylow = json::object();
  for (auto p : prime_divisors(g.order())) {
    sylow[std::to_string(p)] = {{"sylow_order", sylow_subgroup(g, p).order()},
                                {"core_order", p_core(g, p).order()}};
  }
  j["primes"] = std::move(sylow);
  const auto P = sylow_subgroup(g, 3);
  const auto O = p_core(g, 3);
  j["sylow3_cut"] = is_cut_group(P.group()).is_cut;
  j["core3_cut"] = is_cut_group(O.group()).is_cut;
  json mins = json::array();
  for (const auto& m : minimal_normal_subgroups(g)) mins.push_back(m.order());
  j["minimal_normal_orders"] = std::move(mins);
  j["shape"] = shape_name(classify_order(g.order()));
  return j;
}

}  // namespace

std::string analyze_to_json(const PermGroup& group) { return analyze(group).dump(2) + "\n"; }

std::string analyze_to_text(const PermGroup& group) {
  const json j = analyze(group);
  std::ostringstream out;
  out << "name: " << j["name"].get<std::string>() << "\n";
  out << "order: " << j["order"] << "\n";
  out << "degree: " << j["degree"] << "\n";
  out << "exponent: " << j["exponent"] << "\n";
  out << "classes: " << j["classes"].size() << "\n";
  out << "abelian: " << j["abelian"] << "\n";
  out << "is_cut: " << j["is_cut"] << "\n";
  if (!j["witness"].is_null()) {
    out << "witness: k = " << j["witness"]["k"] << " at " << j["witness"]["representative"].get<std::string>()
        << " (order " << j["witness"]["element_order"] << ")\n";
  }
  out << "is_rational: " << j["is_rational"] << "\n";
  out << "character_criterion: " << (j["character_criterion"].is_null() ? "-" : j["character_criterion"].dump())
      << "\n";
  out << "center_order: " << j["center_order"] << "\n";
  for (const auto& [p, info] : j["primes"].items()) {
    out << "sylow_" << p << ": order " << info["sylow_order"] << ", core order " << info["core_order"] << "\n";
  }
  out << "sylow3_cut: " << j["sylow3_cut"] << "\n";
  out << "core3_cut: " << j["core3_cut"] << "\n";
  out << "minimal_normal_orders: " << j["minimal_normal_orders"].dump() << "\n";
  out << "shape: " << j["shape"].get<std::string>() << "\n";
  return out.str();
}

std::string corpus_to_json(const std::vector<CorpusEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    arr.push_back({{"name", e.name},
                   {"construction", e.parameters},
                   {"family", family_name(e.family)},
                   {"order", e.expected_order},
                   {"odd", e.expected_order % 2 == 1}});
  }
  return arr.dump(2) + "\n";
}

std::string corpus_to_text(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    std::string name = e.name;
    name.resize(std::max<std::size_t>(name.size() + 1, 24), ' ');
    std::string fam = family_name(e.family);
    fam.resize(std::max<std::size_t>(fam.size() + 1, 22), ' ');
    std::string order = std::to_string(e.expected_order);
    order.resize(std::max<std::size_t>(order.size() + 1, 8), ' ');
    out << name << fam << order << e.parameters << "\n";
  }
  return out.str();
}

}  // namespace cutgroup
