#include <algorithm>
#include <map>
#include <mutex>

#include "arith.hpp"
#include "chartable.hpp"
#include "classes.hpp"

namespace cutgroup {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;
using Poly = std::vector<u64>;  // low degree first, no trailing zeros

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p); }
  u64 inv(u64 a) const { return inv_mod_prime(a, p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
};

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Fp& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

// Returns remainder; quotient written to *quot when given.
Poly poly_divmod(const Fp& F, Poly a, const Poly& b, Poly* quot = nullptr) {
  const std::size_t db = b.size() - 1;
  const u64 lead_inv = F.inv(b.back());
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const u64 q = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    if (quot) (*quot)[shift] = q;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(q, b[j]));
    trim(a);
  }
  return a;
}

Poly poly_monic(const Fp& F, Poly f) {
  if (f.empty()) return f;
  const u64 inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

Poly poly_gcd(const Fp& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_powmod(const Fp& F, Poly base, u64 exp, const Poly& mod) {
  Poly result{1};
  result = poly_divmod(F, result, mod);
  base = poly_divmod(F, base, mod);
  while (exp > 0) {
    if (exp & 1U) result = poly_divmod(F, poly_mul(F, result, base), mod);
    base = poly_divmod(F, poly_mul(F, base, base), mod);
    exp >>= 1U;
  }
  return result;
}

void split_roots(const Fp& F, const Poly& g, std::vector<u64>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(F.neg(g[0]));
    return;
  }
  for (u64 a = 0; a < F.p; ++a) {
    Poly s = poly_powmod(F, Poly{a, 1}, (F.p - 1) / 2, g);
    if (s.empty()) s.push_back(0);
    s[0] = F.sub(s[0], 1);
    trim(s);
    Poly d = poly_gcd(F, g, s);
    if (d.size() > 1 && d.size() < g.size()) {
      Poly q;
      poly_divmod(F, g, d, &q);
      split_roots(F, d, roots);
      split_roots(F, poly_monic(F, q), roots);
      return;
    }
  }
  throw Error(ErrorCode::splitting_failure, "could not split a polynomial into linear factors");
}

// Distinct roots in F_p of a monic polynomial, sorted.
std::vector<u64> distinct_roots(const Fp& F, const Poly& f) {
  Poly xp = poly_powmod(F, Poly{0, 1}, F.p, f);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = F.sub(xp[1], 1);
  trim(xp);
  Poly g = xp.empty() ? f : poly_gcd(F, f, xp);
  std::vector<u64> roots;
  split_roots(F, g, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly char_poly(const Fp& F, Mat h) {
  const std::size_t n = h.size();
  // Reduce to upper Hessenberg form by similarity transformations.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t r = c + 1;
    while (r < n && h[r][c] == 0) ++r;
    if (r == n) continue;
    if (r != c + 1) {
      std::swap(h[r], h[c + 1]);
      for (auto& row : h) std::swap(row[r], row[c + 1]);
    }
    const u64 inv = F.inv(h[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h[i][c] == 0) continue;
      const u64 u = F.mul(h[i][c], inv);
      for (std::size_t k = 0; k < n; ++k) h[i][k] = F.sub(h[i][k], F.mul(u, h[c + 1][k]));
      for (std::size_t k = 0; k < n; ++k) h[k][c + 1] = F.add(h[k][c + 1], F.mul(u, h[k][i]));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = poly_mul(F, Poly{F.neg(h[m - 1][m - 1]), 1}, p[m - 1]);
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = F.mul(t, h[i][i - 1]);
      const u64 coef = F.mul(t, h[i - 1][m - 1]);
      if (coef != 0) {
        const Poly& q = p[i - 1];
        if (cur.size() < q.size()) cur.resize(q.size(), 0);
        for (std::size_t j = 0; j < q.size(); ++j) cur[j] = F.sub(cur[j], F.mul(coef, q[j]));
        trim(cur);
      }
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Fp& F, Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const u64 inv = F.inv(m[row][c]);
    for (auto& x : m[row]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = F.sub(m[i][k], F.mul(f, m[row][k]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Mat nullspace(const Fp& F, Mat m) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  const auto pivots = rref(F, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

struct Space {
  Mat basis;  // rows in reduced echelon form
  std::vector<std::size_t> pivots;
};

class DixonSolver {
 public:
  DixonSolver(const PermGroup& group, u64 prime)
      : store_(group.elements()), table_(group.classes()), F_{prime}, r_(table_.size()) {
    mats_.resize(r_);
  }

  std::vector<Vec> central_characters() {
    Space all;
    all.basis.assign(r_, Vec(r_, 0));
    for (std::size_t i = 0; i < r_; ++i) all.basis[i][i] = 1;
    all.pivots.resize(r_);
    for (std::size_t i = 0; i < r_; ++i) all.pivots[i] = i;
    std::vector<Space> spaces{std::move(all)};
    for (std::size_t cls = 1; cls < r_; ++cls) {
      if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) {
        break;
      }
      std::vector<Space> next;
      for (auto& s : spaces) {
        if (s.basis.size() == 1) {
          next.push_back(std::move(s));
          continue;
        }
        for (auto& part : split(s, matrix(cls))) next.push_back(std::move(part));
      }
      spaces = std::move(next);
    }
    std::vector<Vec> out;
    for (auto& s : spaces) {
      if (s.basis.size() != 1) {
        throw Error(ErrorCode::splitting_failure, "common eigenspaces of class matrices are not one-dimensional");
      }
      Vec v = s.basis[0];
      if (v[0] == 0) throw Error(ErrorCode::splitting_failure, "eigenvector vanishes on the identity class");
      const u64 inv = F_.inv(v[0]);
      for (auto& x : v) x = F_.mul(x, inv);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  // A[k][j] = #{x in C_cls : class(x^-1 g_j) = k} mod p. A central character
  // omega satisfies A omega = omega(C_cls) omega.
  const Mat& matrix(std::size_t cls) {
    if (!mats_[cls].empty()) return mats_[cls];
    Mat a(r_, Vec(r_, 0));
    const auto& members = table_.members(cls);
    for (std::size_t j = 0; j < r_; ++j) {
      const Index gj = table_[j].representative;
      for (Index x : members) {
        const std::size_t k = table_.class_of(store_.multiply(store_.inverse(x), gj));
        a[k][j] = F_.add(a[k][j], 1);
      }
    }
    mats_[cls] = std::move(a);
    return mats_[cls];
  }

  std::vector<Space> split(const Space& s, const Mat& a) {
    const std::size_t d = s.basis.size();
    // ct[t][s] = coordinate of A b_s along b_t, so ct acts on coordinate columns.
    Mat ct(d, Vec(d, 0));
    for (std::size_t si = 0; si < d; ++si) {
      const Vec& b = s.basis[si];
      for (std::size_t t = 0; t < d; ++t) {
        const auto& row = a[s.pivots[t]];
        u64 acc = 0;
        for (std::size_t j = 0; j < r_; ++j) {
          if (b[j] != 0 && row[j] != 0) acc = F_.add(acc, F_.mul(row[j], b[j]));
        }
        ct[t][si] = acc;
      }
    }
    bool scalar = true;
    for (std::size_t i = 0; i < d && scalar; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i != j && ct[i][j] != 0) {
          scalar = false;
          break;
        }
        if (ct[i][i] != ct[0][0]) {
          scalar = false;
          break;
        }
      }
    }
    if (scalar) return {s};
    const auto roots = distinct_roots(F_, char_poly(F_, ct));
    std::vector<Space> parts;
    std::size_t total = 0;
    for (u64 lambda : roots) {
      Mat shifted = ct;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = F_.sub(shifted[i][i], lambda);
      Space part;
      for (const auto& y : nullspace(F_, std::move(shifted))) {
        Vec v(r_, 0);
        for (std::size_t si = 0; si < d; ++si) {
          if (y[si] == 0) continue;
          for (std::size_t j = 0; j < r_; ++j) v[j] = F_.add(v[j], F_.mul(y[si], s.basis[si][j]));
        }
        part.basis.push_back(std::move(v));
      }
      part.pivots = rref(F_, part.basis);
      total += part.basis.size();
      parts.push_back(std::move(part));
    }
    if (total != d) {
      throw Error(ErrorCode::splitting_failure, "class matrix is not diagonalizable modulo the chosen prime");
    }
    return parts;
  }

  const ElementStore& store_;
  const ConjugacyClassTable& table_;
  Fp F_;
  std::size_t r_;
  std::vector<Mat> mats_;
};

std::vector<ClassFunction> dixon_rows(const PermGroup& group, u64 p) {
  const auto& table = group.classes();
  const u64 n = table.group_order();
  const u64 e = table.exponent();
  const std::size_t r = table.size();
  const Fp F{p};
  DixonSolver solver(group, p);
  const auto omegas = solver.central_characters();
  if (omegas.size() != r) throw Error(ErrorCode::splitting_failure, "wrong number of central characters");

  const u64 root = least_primitive_root(p);
  const u64 z = pow_mod(root, (p - 1) / e, p);  // image of zeta_e
  std::vector<ClassFunction> rows;
  rows.reserve(r);
  for (const auto& omega : omegas) {
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 term = F.mul(omega[k], omega[table.inverse_class(k)]);
      s = F.add(s, F.mul(term, F.inv(table[k].size % p)));
    }
    if (s == 0) throw Error(ErrorCode::lifting_failure, "degree equation has no solution");
    const u64 target = F.mul(n % p, F.inv(s));
    u64 degree = 0;
    for (u64 d = 1; d * d <= n; ++d) {
      if (n % d == 0 && F.mul(d, d) == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::lifting_failure, "no character degree matches modulo p");
    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = F.mul(F.mul(omega[k], degree), F.inv(table[k].size % p));
    }
    std::vector<Cyclotomic> values;
    values.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = table[k].element_order;
      const u64 zo_inv = F.inv(pow_mod(z, e / o, p));
      const u64 o_inv = F.inv(o % p);
      Vec powers(o);
      for (u64 l = 0; l < o; ++l) powers[l] = chi[table.power_class(k, static_cast<std::int64_t>(l))];
      Cyclotomic value(e);
      u64 total = 0;
      u64 step = 1;  // zo^-j
      for (u64 j = 0; j < o; ++j) {
        u64 acc = 0;
        u64 w = 1;  // zo^-jl
        for (u64 l = 0; l < o; ++l) {
          acc = F.add(acc, F.mul(powers[l], w));
          w = F.mul(w, step);
        }
        const u64 m = F.mul(acc, o_inv);
        if (m > degree) throw Error(ErrorCode::lifting_failure, "eigenvalue multiplicity out of range");
        total += m;
        value.add_root(j * (e / o), Rational(static_cast<std::int64_t>(m)));
        step = F.mul(step, zo_inv);
      }
      if (total != degree) throw Error(ErrorCode::lifting_failure, "eigenvalue multiplicities do not sum to the degree");
      values.push_back(std::move(value));
    }
    rows.emplace_back(group, std::move(values));
  }
  return rows;
}

std::vector<ClassFunction> abelian_rows(const PermGroup& group) {
  const auto& store = group.elements();
  const auto& table = group.classes();
  const u64 e = table.exponent();
  const std::size_t n = store.size();
  std::vector<Index> members{0};
  ElementSet in_h(n);
  in_h.insert(0);
  std::vector<std::vector<std::uint32_t>> chars{std::vector<std::uint32_t>(n, 0)};
  for (const auto& gen : group.generators()) {
    const Index g = store.index_of(gen);
    if (in_h.contains(g)) continue;
    u64 m = 1;
    Index gm = g;
    while (!in_h.contains(gm)) {
      gm = store.multiply(gm, g);
      ++m;
    }
    const std::size_t old = members.size();
    Index gi = 0;
    for (u64 i = 1; i < m; ++i) {
      gi = store.multiply(gi, g);
      for (std::size_t h = 0; h < old; ++h) {
        const Index x = store.multiply(members[h], gi);
        members.push_back(x);
        in_h.insert(x);
      }
    }
    std::vector<std::vector<std::uint32_t>> next;
    next.reserve(chars.size() * m);
    for (const auto& chi : chars) {
      const u64 a = chi[gm];
      u64 c0 = 0;
      while (c0 < e && m * c0 % e != a) ++c0;
      if (c0 == e) throw Error(ErrorCode::internal, "character does not extend");
      for (u64 t = 0; t < m; ++t) {
        const u64 c = (c0 + t * (e / m)) % e;
        auto ext = chi;
        for (u64 i = 1; i < m; ++i) {
          for (std::size_t h = 0; h < old; ++h) {
            ext[members[i * old + h]] = static_cast<std::uint32_t>((chi[members[h]] + i * c) % e);
          }
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
  }
  std::vector<ClassFunction> rows;
  rows.reserve(chars.size());
  for (const auto& chi : chars) {
    std::vector<Cyclotomic> values;
    values.reserve(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) {
      values.push_back(Cyclotomic::root_of_unity(e, chi[table[c].representative]));
    }
    rows.emplace_back(group, std::move(values));
  }
  return rows;
}

bool row_before(const ClassFunction& a, const ClassFunction& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  for (std::size_t c = 1; c < a.size(); ++c) {
    if (a[c] != b[c]) return a[c] > b[c];
  }
  return false;
}

bool is_trivial_row(const ClassFunction& chi) {
  const Cyclotomic one = Cyclotomic::rational(chi.conductor(), 1);
  return std::all_of(chi.values().begin(), chi.values().end(), [&](const Cyclotomic& v) { return v == one; });
}

std::shared_ptr<const CharacterTable> compute_table(const PermGroup& group,
                                                    const CharacterTableOptions& options) {
  const auto& table = group.classes();
  std::vector<ClassFunction> rows;
  std::string method;
  u64 prime = 0;
  if (group.is_abelian() && !options.force_dixon) {
    rows = abelian_rows(group);
    method = "abelian";
  } else {
    prime = dixon_prime(table.group_order(), table.exponent(), options.prime_bound);
    rows = dixon_rows(group, prime);
    method = "dixon";
  }
  std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const bool ta = is_trivial_row(a);
    const bool tb = is_trivial_row(b);
    if (ta != tb) return ta;
    return row_before(a, b);
  });
  u64 sum = 0;
  for (const auto& chi : rows) {
    const auto d = static_cast<u64>(chi.degree());
    sum += d * d;
  }
  if (rows.size() != table.size() || sum != table.group_order()) {
    throw Error(ErrorCode::internal, "computed characters fail the degree identity");
  }
  return std::make_shared<const CharacterTable>(group, std::move(rows), method, prime);
}

std::mutex g_cache_mutex;
std::map<std::string, std::shared_ptr<const CharacterTable>> g_cache;

}  // namespace

u64 dixon_prime(u64 group_order, u64 exponent, u64 bound) {
  // p^2 > 4 |G|, i.e. p > 2 sqrt|G|.
  const unsigned __int128 four_n = static_cast<unsigned __int128>(group_order) * 4;
  for (u64 p = exponent + 1; p <= bound; p += exponent) {
    if (static_cast<unsigned __int128>(p) * p <= four_n) continue;
    if (is_prime(p)) return p;
  }
  throw Error(ErrorCode::no_dixon_prime,
              "no prime p = 1 mod " + std::to_string(exponent) + " with p > 2 sqrt(" +
                  std::to_string(group_order) + ") below " + std::to_string(bound));
}

std::shared_ptr<const CharacterTable> character_table(const PermGroup& group,
                                                      const CharacterTableOptions& options) {
  const bool cacheable = !options.force_dixon && options.prime_bound == CharacterTableOptions{}.prime_bound;
  if (!cacheable) return compute_table(group, options);
  const std::string key = group.canonical_key();
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto table = compute_table(group, options);
  std::lock_guard lock(g_cache_mutex);
  return g_cache.emplace(key, table).first->second;
}

}  // namespace cutgroup
