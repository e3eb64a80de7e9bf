#include "corpus.hpp"

#include <array>
#include <numeric>

#include "arith.hpp"
#include "error.hpp"
#include "structure.hpp"

namespace cutgroup {

namespace {

Permutation from_map(std::size_t n, const std::function<std::uint64_t(std::uint64_t)>& f) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

std::string join_names(const std::vector<PermGroup>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    out += f.name();
  }
  return out;
}

}  // namespace

PermGroup cyclic(std::uint64_t n) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::invalid_argument, "cyclic order out of range");
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(from_map(n, [n](std::uint64_t i) { return (i + 1) % n; }));
  return PermGroup::from_generators(std::move(gens), n, "c" + std::to_string(n));
}

PermGroup elementary_abelian(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "elementary abelian: p must be prime");
  if (k < 1 || p * k > kMaxDegree) {
    throw Error(ErrorCode::invalid_argument, "elementary abelian: rank out of range");
  }
  std::vector<PermGroup> factors(k, cyclic(p));
  return direct_product(factors, "ea" + std::to_string(p) + "_" + std::to_string(k));
}

PermGroup direct_product(const std::vector<PermGroup>& factors, std::string name) {
  if (factors.empty()) throw Error(ErrorCode::invalid_argument, "direct product of no factors");
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree(); ++i) {
        images[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
      }
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
  }
  if (name.empty()) name = join_names(factors);
  return PermGroup::from_generators(std::move(gens), degree, std::move(name));
}

PermGroup symmetric(std::uint64_t n) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::invalid_argument, "symmetric degree out of range");
  std::vector<Permutation> gens;
  if (n > 1) {
    gens.push_back(from_map(n, [n](std::uint64_t i) { return (i + 1) % n; }));
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  }
  return PermGroup::from_generators(std::move(gens), n, "s" + std::to_string(n));
}

PermGroup alternating(std::uint64_t n) {
  if (n < 3 || n > kMaxDegree) throw Error(ErrorCode::invalid_argument, "alternating degree out of range");
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup::from_generators(std::move(gens), n, "a" + std::to_string(n));
}

PermGroup affine_cyclic(std::uint64_t q, std::uint64_t a, std::string name) {
  if (q < 2 || q > kMaxDegree || std::gcd(a, q) != 1) {
    throw Error(ErrorCode::invalid_argument, "affine_cyclic needs q >= 2 and a unit a mod q");
  }
  std::vector<Permutation> gens;
  gens.push_back(from_map(q, [q](std::uint64_t x) { return (x + 1) % q; }));
  if (a % q != 1) gens.push_back(from_map(q, [q, a](std::uint64_t x) { return (a * x) % q; }));
  if (name.empty()) name = "aff" + std::to_string(q) + "_" + std::to_string(a);
  return PermGroup::from_generators(std::move(gens), q, std::move(name));
}

PermGroup extraspecial_27(int exponent) {
  if (exponent == 3) {
    // points (x, y) of Z/3 x Z/3, index 3x + y
    auto pt = [](std::uint64_t x, std::uint64_t y) { return 3 * (x % 3) + (y % 3); };
    auto shift_x = from_map(9, [&](std::uint64_t i) { return pt(i / 3 + 1, i % 3); });
    auto shear = from_map(9, [&](std::uint64_t i) { return pt(i / 3, i % 3 + i / 3); });
    auto shift_y = from_map(9, [&](std::uint64_t i) { return pt(i / 3, i % 3 + 1); });
    return PermGroup::from_generators({shift_x, shear, shift_y}, 9, "heisenberg27");
  }
  if (exponent == 9) return affine_cyclic(9, 4, "extraspecial27_exp9");
  throw Error(ErrorCode::invalid_argument, "extraspecial_27: exponent must be 3 or 9");
}

PermGroup frobenius_3_7a(int a) {
  if (a < 1 || a > 2) throw Error(ErrorCode::invalid_argument, "frobenius_3_7a: a must be 1 or 2");
  const std::uint64_t n = a == 1 ? 7 : 49;
  std::vector<Permutation> gens;
  // point (x_0, ..., x_{a-1}) has index sum x_i 7^i
  for (int i = 0; i < a; ++i) {
    const std::uint64_t unit = i == 0 ? 1 : 7;
    gens.push_back(from_map(n, [=](std::uint64_t v) {
      const std::uint64_t digit = (v / unit) % 7;
      return v - digit * unit + ((digit + 1) % 7) * unit;
    }));
  }
  gens.push_back(from_map(n, [=](std::uint64_t v) {
    std::uint64_t out = 0;
    std::uint64_t unit = 1;
    for (int i = 0; i < a; ++i, unit *= 7) out += ((2 * ((v / unit) % 7)) % 7) * unit;
    return out;
  }));
  return PermGroup::from_generators(std::move(gens), n, a == 1 ? "frobenius21" : "frobenius147");
}

std::uint32_t GF729::add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  std::uint32_t unit = 1;
  for (int i = 0; i < 6; ++i, unit *= 3) out += ((a / unit % 3 + b / unit % 3) % 3) * unit;
  return out;
}

std::uint32_t GF729::mul(std::uint32_t a, std::uint32_t b) {
  std::array<int, 11> prod{};
  std::array<int, 6> ca{}, cb{};
  for (int i = 0; i < 6; ++i) {
    ca[i] = static_cast<int>(a % 3);
    cb[i] = static_cast<int>(b % 3);
    a /= 3;
    b /= 3;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) prod[i + j] += ca[i] * cb[j];
  for (int d = 10; d >= 6; --d) {
    const int c = prod[d] % 3;
    if (c == 0) continue;
    // x^d = x^(d-6) * x^6 and x^6 = -(lower terms of the modulus)
    for (int i = 0; i < 6; ++i) prod[d - 6 + i] += 3 * 3 - c * kModulus[i];
    prod[d] = 0;
  }
  std::uint32_t out = 0;
  std::uint32_t unit = 1;
  for (int i = 0; i < 6; ++i, unit *= 3) out += static_cast<std::uint32_t>(prod[i] % 3) * unit;
  return out;
}

std::uint32_t GF729::pow(std::uint32_t a, std::uint64_t k) {
  std::uint32_t result = 1;
  while (k > 0) {
    if (k & 1U) result = mul(result, a);
    a = mul(a, a);
    k >>= 1U;
  }
  return result;
}

std::uint64_t GF729::multiplicative_order(std::uint32_t a) {
  if (a == 0) return 0;
  std::uint32_t x = a;
  for (std::uint64_t n = 1; n <= kSize; ++n) {
    if (x == 1) return n;
    x = mul(x, a);
  }
  return 0;
}

bool GF729::modulus_is_irreducible() {
  // trial division by every monic polynomial of degree 1..3 over F_3
  for (int deg = 1; deg <= 3; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= 3;
    for (int code = 0; code < count; ++code) {
      std::array<int, 4> d{};
      int c = code;
      for (int i = 0; i < deg; ++i) {
        d[i] = c % 3;
        c /= 3;
      }
      d[deg] = 1;
      std::array<int, 7> r{};
      for (int i = 0; i < 7; ++i) r[i] = kModulus[i];
      for (int top = 6; top >= deg; --top) {
        const int q = r[top] % 3;
        if (q == 0) continue;
        for (int i = 0; i <= deg; ++i) r[top - deg + i] = ((r[top - deg + i] - q * d[i]) % 3 + 3) % 3;
      }
      bool zero = true;
      for (int i = 0; i < deg; ++i) zero = zero && (r[i] % 3 == 0);
      if (zero) return false;
    }
  }
  return true;
}

std::uint32_t GF729::order7_element() {
  for (std::uint32_t a = 1; a < kSize; ++a) {
    if (multiplicative_order(a) == 7) return a;
  }
  throw Error(ErrorCode::internal, "no element of order 7 in GF(729)");
}

PermGroup double_frobenius_15309() {
  if (!GF729::modulus_is_irreducible()) {
    throw Error(ErrorCode::internal, "GF(729) modulus is reducible");
  }
  // every nonzero element must have order dividing 728
  for (std::uint32_t a = 1; a < GF729::kSize; ++a) {
    if (GF729::pow(a, 728) != 1) throw Error(ErrorCode::internal, "GF(729) arithmetic self-check failed");
  }
  const std::uint32_t mu = GF729::order7_element();
  if (GF729::pow(mu, 9) != GF729::mul(mu, mu)) {
    throw Error(ErrorCode::internal, "x -> x^9 does not conjugate mu to mu^2");
  }
  const std::size_t n = GF729::kSize;
  auto translate = from_map(n, [](std::uint64_t x) { return GF729::add(static_cast<std::uint32_t>(x), 1); });
  auto scale = from_map(n, [mu](std::uint64_t x) { return GF729::mul(mu, static_cast<std::uint32_t>(x)); });
  auto frob = from_map(n, [](std::uint64_t x) { return GF729::pow(static_cast<std::uint32_t>(x), 9); });
  return PermGroup::from_generators({translate, scale, frob}, n, "double_frobenius_15309");
}

PermGroup wreath_c3_c3() {
  return PermGroup::from_generators({Permutation::parse_cycles(9, "(0 1 2)"),
                                     Permutation::parse_cycles(9, "(0 3 6)(1 4 7)(2 5 8)")},
                                    9, "c3wrc3");
}

PermGroup quaternion8() {
  return PermGroup::from_generators({Permutation::parse_cycles(8, "(0 1 2 3)(4 5 6 7)"),
                                     Permutation::parse_cycles(8, "(0 4 2 6)(1 7 3 5)")},
                                    8, "q8");
}

PermGroup dihedral(std::uint64_t n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "dihedral needs n >= 3");
  auto rot = from_map(n, [n](std::uint64_t i) { return (i + 1) % n; });
  auto refl = from_map(n, [n](std::uint64_t i) { return (n - i) % n; });
  return PermGroup::from_generators({rot, refl}, n, "d" + std::to_string(2 * n));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::three_group: return "3-group";
    case Family::frobenius_3_7a: return "frobenius-3-7a";
    case Family::double_frobenius_7_3b: return "double-frobenius-7-3b";
    case Family::abelian: return "abelian";
    case Family::odd_control: return "odd-control";
    case Family::sanity_even_order: return "sanity-even-order";
  }
  return "unknown";
}

namespace {

PermGroup named(PermGroup g, const char* name) { return g.renamed(name); }

PermGroup c9_semidirect_c9() {
  // x acts as n -> n+1 on the first Z/9 block; y as n -> 4n on the first
  // block and n -> n+1 on the second; y x y^-1 = x^4.
  std::vector<Point> x(18), y(18);
  for (Point i = 0; i < 9; ++i) {
    x[i] = (i + 1) % 9;
    x[9 + i] = 9 + i;
    y[i] = (4 * i) % 9;
    y[9 + i] = 9 + (i + 1) % 9;
  }
  return PermGroup::from_generators({Permutation(x), Permutation(y)}, 18, "c9sdc9");
}

std::vector<CorpusEntry> make_corpus() {
  using F = Family;
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, std::string params, F fam, std::uint64_t order,
                 std::function<PermGroup()> build) {
    c.push_back({std::move(name), std::move(params), fam, order, std::move(build)});
  };
  add("trivial", "cyclic(1)", F::three_group, 1, [] { return named(cyclic(1), "trivial"); });
  add("c3", "cyclic(3)", F::three_group, 3, [] { return cyclic(3); });
  add("c9", "cyclic(9)", F::three_group, 9, [] { return cyclic(9); });
  add("c3xc3", "elementary_abelian(3,2)", F::three_group, 9,
      [] { return named(elementary_abelian(3, 2), "c3xc3"); });
  add("c27", "cyclic(27)", F::three_group, 27, [] { return cyclic(27); });
  add("c9xc3", "direct_product(c9,c3)", F::three_group, 27,
      [] { return direct_product({cyclic(9), cyclic(3)}, "c9xc3"); });
  add("c3xc3xc3", "elementary_abelian(3,3)", F::three_group, 27,
      [] { return named(elementary_abelian(3, 3), "c3xc3xc3"); });
  add("heisenberg27", "extraspecial_27(3)", F::three_group, 27, [] { return extraspecial_27(3); });
  add("extraspecial27_exp9", "extraspecial_27(9)", F::three_group, 27,
      [] { return extraspecial_27(9); });
  add("c81", "cyclic(81)", F::three_group, 81, [] { return cyclic(81); });
  add("c27xc3", "direct_product(c27,c3)", F::three_group, 81,
      [] { return direct_product({cyclic(27), cyclic(3)}, "c27xc3"); });
  add("c9xc9", "direct_product(c9,c9)", F::three_group, 81,
      [] { return direct_product({cyclic(9), cyclic(9)}, "c9xc9"); });
  add("c9xc3xc3", "direct_product(c9,c3,c3)", F::three_group, 81,
      [] { return direct_product({cyclic(9), cyclic(3), cyclic(3)}, "c9xc3xc3"); });
  add("c3^4", "elementary_abelian(3,4)", F::three_group, 81,
      [] { return named(elementary_abelian(3, 4), "c3^4"); });
  add("heisenberg27xc3", "direct_product(extraspecial_27(3),c3)", F::three_group, 81,
      [] { return direct_product({extraspecial_27(3), cyclic(3)}, "heisenberg27xc3"); });
  add("extraspecial27_exp9xc3", "direct_product(extraspecial_27(9),c3)", F::three_group, 81,
      [] { return direct_product({extraspecial_27(9), cyclic(3)}, "extraspecial27_exp9xc3"); });
  add("c3wrc3", "wreath(c3,c3)", F::three_group, 81, [] { return wreath_c3_c3(); });
  add("c27sdc3", "affine_cyclic(27,10)", F::three_group, 81,
      [] { return affine_cyclic(27, 10, "c27sdc3"); });
  add("c9sdc9", "c9 semidirect c9, y x y^-1 = x^4", F::three_group, 81, [] { return c9_semidirect_c9(); });

  add("c5", "cyclic(5)", F::abelian, 5, [] { return cyclic(5); });
  add("c7", "cyclic(7)", F::abelian, 7, [] { return cyclic(7); });
  add("ea7_1", "elementary_abelian(7,1)", F::abelian, 7, [] { return elementary_abelian(7, 1); });
  add("c15", "cyclic(15)", F::abelian, 15, [] { return cyclic(15); });
  add("c21", "cyclic(21)", F::abelian, 21, [] { return cyclic(21); });
  add("c3xc7", "direct_product(c3,c7)", F::abelian, 21,
      [] { return direct_product({cyclic(3), cyclic(7)}, "c3xc7"); });

  add("frobenius21", "frobenius_3_7a(1)", F::frobenius_3_7a, 21, [] { return frobenius_3_7a(1); });
  add("frobenius147", "frobenius_3_7a(2)", F::frobenius_3_7a, 147, [] { return frobenius_3_7a(2); });
  add("double_frobenius_15309", "double_frobenius_15309()", F::double_frobenius_7_3b, 15309,
      [] { return double_frobenius_15309(); });

  add("f21xc3", "direct_product(frobenius_3_7a(1),c3)", F::odd_control, 63,
      [] { return direct_product({frobenius_3_7a(1), cyclic(3)}, "f21xc3"); });
  add("f39", "affine_cyclic(13,3)", F::odd_control, 39, [] { return affine_cyclic(13, 3, "f39"); });
  add("f55", "affine_cyclic(11,3)", F::odd_control, 55, [] { return affine_cyclic(11, 3, "f55"); });

  add("s3", "symmetric(3)", F::sanity_even_order, 6, [] { return symmetric(3); });
  add("d8", "dihedral(4)", F::sanity_even_order, 8, [] { return dihedral(4); });
  add("q8", "quaternion8()", F::sanity_even_order, 8, [] { return quaternion8(); });
  add("a4", "alternating(4)", F::sanity_even_order, 12, [] { return alternating(4); });
  add("s4", "symmetric(4)", F::sanity_even_order, 24, [] { return symmetric(4); });
  return c;
}

void verify_family(const CorpusEntry& entry, const PermGroup& g) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::internal, "corpus entry " + entry.name + ": " + why);
  };
  switch (entry.family) {
    case Family::three_group:
      if (!is_power_of(g.order(), 3)) fail("order is not a power of 3");
      break;
    case Family::abelian:
      if (!g.is_abelian()) fail("group is not abelian");
      break;
    case Family::odd_control:
      if (g.order() % 2 == 0) fail("order is even");
      break;
    case Family::sanity_even_order:
      if (g.order() % 2 != 0) fail("order is odd");
      break;
    case Family::frobenius_3_7a: {
      const auto kernel = sylow_subgroup(g, 7);
      if (!is_normal(g, kernel) || !is_frobenius_with_kernel(g, kernel)) {
        fail("not Frobenius with kernel the Sylow 7-subgroup");
      }
      break;
    }
    case Family::double_frobenius_7_3b: {
      const auto core = p_core(g, 3);
      const auto h = sylow_subgroup(g, 7);
      const auto oh = join(core, h);
      const auto kernel = Subgroup::generated(oh.group(), core.generators(), "O");
      if (!is_frobenius_with_kernel(oh.group(), kernel)) fail("O_3 H is not Frobenius with kernel O_3");
      const auto q = quotient_group(g, core);
      if (q.group.order() != 21 || center(q.group).order() != 1) {
        fail("G/O_3 is not nonabelian of order 21");
      }
      break;
    }
  }
}

}  // namespace

const std::vector<CorpusEntry>& default_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const auto& e : default_corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

PermGroup build_verified(const CorpusEntry& entry) {
  PermGroup g = entry.build().renamed(entry.name);
  if (g.order() != entry.expected_order) {
    throw Error(ErrorCode::internal, "corpus entry " + entry.name + " has order " +
                                         std::to_string(g.order()) + ", expected " +
                                         std::to_string(entry.expected_order));
  }
  verify_family(entry, g);
  return g;
}

}  // namespace cutgroup
