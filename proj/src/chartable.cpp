#include "chartable.hpp"

#include <algorithm>

#include "json.hpp"

#include "arith.hpp"
#include "classes.hpp"
#include "structure.hpp"

namespace cutgroup {

namespace {

bool same_group(const PermGroup& a, const PermGroup& b) { return a.equals(b); }

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (!same_group(a.group(), b.group())) {
    throw Error(ErrorCode::invalid_argument, "class functions belong to different groups");
  }
}

}  // namespace

ClassFunction::ClassFunction(PermGroup group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  const auto& table = group_.classes();
  if (values_.size() != table.size()) {
    throw Error(ErrorCode::invalid_argument, "class function needs one value per class");
  }
  for (const auto& v : values_) {
    if (v.conductor() != table.exponent()) {
      throw Error(ErrorCode::invalid_argument, "class function values must use the group exponent as conductor");
    }
  }
}

ClassFunction ClassFunction::trivial(const PermGroup& group) {
  const auto& table = group.classes();
  return {group, std::vector<Cyclotomic>(table.size(), Cyclotomic::rational(table.exponent(), 1))};
}

ClassFunction ClassFunction::regular(const PermGroup& group) {
  const auto& table = group.classes();
  std::vector<Cyclotomic> values(table.size(), Cyclotomic(table.exponent()));
  values[0] = Cyclotomic::rational(table.exponent(), static_cast<std::int64_t>(table.group_order()));
  return {group, std::move(values)};
}

std::uint64_t ClassFunction::conductor() const noexcept { return values_[0].conductor(); }

std::int64_t ClassFunction::degree() const {
  const Rational d = values_[0].rational_value();
  if (!d.is_integer()) throw Error(ErrorCode::invalid_argument, "value at the identity is not an integer");
  return d.num();
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  auto values = a.values_;
  for (std::size_t c = 0; c < values.size(); ++c) values[c] += b.values_[c];
  return {a.group_, std::move(values)};
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  auto values = a.values_;
  for (std::size_t c = 0; c < values.size(); ++c) values[c] -= b.values_[c];
  return {a.group_, std::move(values)};
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  auto values = a.values_;
  for (std::size_t c = 0; c < values.size(); ++c) values[c] *= b.values_[c];
  return {a.group_, std::move(values)};
}

ClassFunction operator*(const Rational& q, const ClassFunction& a) {
  auto values = a.values_;
  for (auto& v : values) v = v * q;
  return {a.group_, std::move(values)};
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.values_ == b.values_ && same_group(a.group_, b.group_);
}

CharacterTable::CharacterTable(PermGroup group, std::vector<ClassFunction> rows, std::string method,
                               std::uint64_t prime)
    : group_(std::move(group)), rows_(std::move(rows)), method_(std::move(method)), prime_(prime) {}

std::uint64_t CharacterTable::conductor() const noexcept { return rows_.front().conductor(); }

std::vector<std::int64_t> CharacterTable::degrees() const {
  std::vector<std::int64_t> out;
  out.reserve(rows_.size());
  for (const auto& chi : rows_) out.push_back(chi.degree());
  return out;
}

std::size_t CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].values() == chi.values()) return i;
  }
  throw Error(ErrorCode::invalid_argument, "class function is not an irreducible character of this table");
}

Rational inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  require_same_group(phi, psi);
  const auto& table = phi.group().classes();
  Cyclotomic sum(phi.conductor());
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (phi[c].is_zero() || psi[c].is_zero()) continue;
    sum += phi[c] * psi[c].complex_conjugate() * Rational(static_cast<std::int64_t>(table[c].size));
  }
  if (!sum.is_rational()) throw Error(ErrorCode::invalid_argument, "inner product is not rational");
  return sum.rational_value() / Rational(static_cast<std::int64_t>(table.group_order()));
}

std::vector<std::size_t> class_fusion(const PermGroup& subgroup, const PermGroup& group) {
  const auto& sub_store = subgroup.elements();
  const auto& sub_table = subgroup.classes();
  const auto& store = group.elements();
  const auto& table = group.classes();
  std::vector<std::size_t> fusion(sub_table.size());
  for (std::size_t d = 0; d < sub_table.size(); ++d) {
    const Permutation& rep = sub_store[sub_table[d].representative];
    auto idx = store.find(rep);
    if (!idx) throw Error(ErrorCode::not_a_member, "subgroup is not contained in the group");
    fusion[d] = table.class_of(*idx);
  }
  for (const auto& g : subgroup.generators()) {
    if (!store.find(g)) throw Error(ErrorCode::not_a_member, "subgroup is not contained in the group");
  }
  return fusion;
}

ClassFunction induce(const ClassFunction& theta, const PermGroup& group) {
  const PermGroup& sub = theta.group();
  const auto fusion = class_fusion(sub, group);
  const auto& sub_table = sub.classes();
  const auto& table = group.classes();
  const std::uint64_t e = table.exponent();
  std::vector<Cyclotomic> values(table.size(), Cyclotomic(e));
  for (std::size_t d = 0; d < sub_table.size(); ++d) {
    if (theta[d].is_zero()) continue;
    values[fusion[d]] += theta[d].embed(e) * Rational(static_cast<std::int64_t>(sub_table[d].size));
  }
  const auto h = static_cast<std::int64_t>(sub_table.group_order());
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (values[c].is_zero()) continue;
    values[c] = values[c] * Rational(static_cast<std::int64_t>(table.centralizer_order(c)), h);
  }
  return {group, std::move(values)};
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& subgroup) {
  if (!same_group(chi.group(), subgroup.parent())) {
    throw Error(ErrorCode::invalid_argument, "subgroup does not belong to the character's group");
  }
  const PermGroup& sub = subgroup.group();
  const auto fusion = class_fusion(sub, chi.group());
  const std::uint64_t e = sub.classes().exponent();
  std::vector<Cyclotomic> values;
  values.reserve(fusion.size());
  for (auto c : fusion) values.push_back(chi[c].descend(e));
  return {sub, std::move(values)};
}

ClassFunction galois_apply(std::uint64_t k, const ClassFunction& chi) {
  const auto& table = chi.group().classes();
  const std::uint64_t e = table.exponent();
  if (e > 1 && std::gcd(k % e, e) != 1) {
    throw Error(ErrorCode::invalid_argument, std::to_string(k) + " is not a unit modulo " + std::to_string(e));
  }
  std::vector<Cyclotomic> values;
  values.reserve(table.size());
  for (std::size_t c = 0; c < table.size(); ++c) {
    values.push_back(chi[table.power_class(c, static_cast<std::int64_t>(k % std::max<std::uint64_t>(e, 1)))]);
  }
  return {chi.group(), std::move(values)};
}

FieldOfValues field_of_values(const ClassFunction& chi) {
  const auto& table = chi.group().classes();
  const std::uint64_t e = table.exponent();
  const auto units = units_mod(e);
  FieldOfValues out{};
  for (auto k : units) {
    bool fixed = true;
    for (std::size_t c = 0; c < table.size() && fixed; ++c) {
      fixed = chi[table.power_class(c, static_cast<std::int64_t>(k))] == chi[c];
    }
    if (fixed) out.stabilizer.push_back(k);
  }
  out.degree = units.size() / out.stabilizer.size();
  out.is_real = e <= 2 || std::find(out.stabilizer.begin(), out.stabilizer.end(), e - 1) != out.stabilizer.end();
  out.is_imaginary_quadratic = out.degree == 2 && !out.is_real;
  return out;
}

bool character_cut_criterion(const PermGroup& group, const CharacterTable& table) {
  if (!same_group(group, table.group())) {
    throw Error(ErrorCode::invalid_argument, "character table belongs to a different group");
  }
  for (const auto& chi : table.characters()) {
    const auto f = field_of_values(chi);
    if (f.degree > 2 || (f.degree == 2 && f.is_real)) return false;
  }
  return true;
}

ConjugationAction::ConjugationAction(const PermGroup& group, const Subgroup& normal)
    : group_(group), normal_(normal) {
  if (!same_group(group, normal.parent())) {
    throw Error(ErrorCode::invalid_argument, "subgroup does not belong to the group");
  }
  if (!is_normal(group, normal)) throw Error(ErrorCode::not_normal, "subgroup is not normal");
  const auto& store = group.elements();
  const PermGroup& n_group = normal.group();
  const auto& n_store = n_group.elements();
  const auto& n_table = n_group.classes();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> n_class(store.size(), kNone);
  std::vector<Index> class_rep(n_table.size());
  for (Index i = 0; i < n_store.size(); ++i) n_class[store.index_of(n_store[i])] = n_table.class_of(i);
  for (std::size_t c = 0; c < n_table.size(); ++c) {
    class_rep[c] = store.index_of(n_store[n_table[c].representative]);
  }
  const auto n_members = normal.members().to_vector();
  coset_of_.assign(store.size(), kNone);
  for (Index g = 0; g < store.size(); ++g) {
    if (coset_of_[g] != kNone) continue;
    const std::size_t id = reps_.size();
    reps_.push_back(g);
    for (Index n : n_members) coset_of_[store.multiply(g, n)] = id;
    std::vector<std::size_t> perm(n_table.size());
    for (std::size_t c = 0; c < n_table.size(); ++c) perm[c] = n_class[store.conjugate(g, class_rep[c])];
    perms_.push_back(std::move(perm));
  }
}

ClassFunction ConjugationAction::conjugate(const ClassFunction& theta, Index g) const {
  if (!same_group(theta.group(), normal_.group())) {
    throw Error(ErrorCode::invalid_argument, "character is not a class function of the normal subgroup");
  }
  const auto& perm = perms_[coset_of_[g]];
  std::vector<Cyclotomic> values;
  values.reserve(perm.size());
  for (auto c : perm) values.push_back(theta[c]);
  return {theta.group(), std::move(values)};
}

std::vector<std::size_t> ConjugationAction::stabilizing_cosets(const ClassFunction& theta) const {
  if (!same_group(theta.group(), normal_.group())) {
    throw Error(ErrorCode::invalid_argument, "character is not a class function of the normal subgroup");
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    const auto& perm = perms_[k];
    bool fixed = true;
    for (std::size_t c = 0; c < perm.size() && fixed; ++c) fixed = theta[perm[c]] == theta[c];
    if (fixed) out.push_back(k);
  }
  return out;
}

ElementSet ConjugationAction::inertia_members(const ClassFunction& theta) const {
  std::vector<bool> fixed(reps_.size(), false);
  for (auto k : stabilizing_cosets(theta)) fixed[k] = true;
  ElementSet members(coset_of_.size());
  for (Index g = 0; g < coset_of_.size(); ++g) {
    if (fixed[coset_of_[g]]) members.insert(g);
  }
  return members;
}

Subgroup ConjugationAction::inertia_group(const ClassFunction& theta) const {
  return Subgroup::from_members(group_, inertia_members(theta), "inertia");
}

Subgroup inertia_group(const PermGroup& group, const Subgroup& normal, const ClassFunction& theta) {
  return ConjugationAction(group, normal).inertia_group(theta);
}

ClassFunction conjugate_character(const PermGroup& group, const Subgroup& normal, const ClassFunction& theta,
                                  const Permutation& g) {
  const Index gi = group.elements().index_of(g);
  return ConjugationAction(group, normal).conjugate(theta, gi);
}

std::vector<std::pair<ClassFunction, std::int64_t>> clifford_constituents(const ClassFunction& chi,
                                                                          const Subgroup& normal) {
  if (!is_normal(chi.group(), normal)) throw Error(ErrorCode::not_normal, "subgroup is not normal");
  const ClassFunction psi = restrict(chi, normal);
  const auto table = character_table(normal.group());
  std::vector<std::pair<ClassFunction, std::int64_t>> out;
  for (const auto& theta : table->characters()) {
    const Rational m = inner_product(psi, theta);
    if (!m.is_integer() || m.num() < 0) {
      throw Error(ErrorCode::invalid_argument, "restriction is not a character");
    }
    if (m.num() > 0) out.emplace_back(theta, m.num());
  }
  return out;
}

std::string character_table_to_json(const CharacterTable& table) {
  const PermGroup& group = table.group();
  const auto& classes = group.classes();
  const auto& store = group.elements();
  nlohmann::json j;
  j["group"] = group.name();
  j["order"] = classes.group_order();
  j["conductor"] = table.conductor();
  j["method"] = table.method();
  if (table.prime() != 0) j["prime"] = table.prime();
  j["classes"] = nlohmann::json::array();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    j["classes"].push_back({{"order", classes[c].element_order},
                            {"size", classes[c].size},
                            {"representative", store[classes[c].representative].to_cycle_string()}});
  }
  j["characters"] = nlohmann::json::array();
  for (const auto& chi : table.characters()) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : chi.values()) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& q : v.coefficients()) coeffs.push_back(q.to_string());
      values.push_back(std::move(coeffs));
    }
    j["characters"].push_back({{"degree", chi.degree()}, {"values", std::move(values)}});
  }
  return j.dump(2);
}

std::string character_table_to_text(const CharacterTable& table) {
  const PermGroup& group = table.group();
  const auto& classes = group.classes();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"class"});
  rows.push_back({"order"});
  rows.push_back({"size"});
  for (std::size_t c = 0; c < classes.size(); ++c) {
    rows[0].push_back(std::to_string(c + 1));
    rows[1].push_back(std::to_string(classes[c].element_order));
    rows[2].push_back(std::to_string(classes[c].size));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    rows.push_back({"X." + std::to_string(i + 1)});
    for (const auto& v : table[i].values()) rows.back().push_back(v.to_string());
  }
  std::vector<std::size_t> width(classes.size() + 1, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out = "group " + group.name() + ", order " + std::to_string(classes.group_order()) + ", method " +
                    table.method();
  if (table.prime() != 0) out += " (p = " + std::to_string(table.prime()) + ")";
  out += "\nz = exp(2 pi i / " + std::to_string(table.conductor()) + ")\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace cutgroup
