#include "cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "arith.hpp"

namespace cutgroup {

namespace {

std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint64_t e) {
  // x^e - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (std::uint64_t d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    const auto div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t q = num[i];  // divisor is monic
      quot[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

struct Descent {
  std::vector<std::size_t> rows;           // independent coordinates in the big field
  std::vector<std::vector<Rational>> inv;  // inverse of the square submatrix
};

std::mutex g_field_mutex;
std::map<std::uint64_t, std::unique_ptr<CyclotomicField>> g_fields;
std::map<std::uint64_t, std::vector<std::int64_t>> g_polys;
std::mutex g_descent_mutex;
std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<Descent>> g_descents;

const Descent& descent_data(std::uint64_t big, std::uint64_t small) {
  std::lock_guard lock(g_descent_mutex);
  auto& slot = g_descents[{big, small}];
  if (slot) return *slot;
  const auto& fb = cyclotomic_field(big);
  const auto& fs = cyclotomic_field(small);
  const std::size_t n = fs.dimension();
  const std::size_t m = fb.dimension();
  // columns[i] = coordinates of zeta_small^i in the big field
  std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [pos, v] : fb.reduction(i * (big / small))) cols[i][pos] = v;
  }
  // Row echelon of the n x m matrix whose rows are the columns above; the
  // pivot positions index an invertible square submatrix.
  auto work = cols;
  auto d = std::make_unique<Descent>();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && work[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(work[piv], work[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (work[r][col].is_zero()) continue;
      const Rational f = work[r][col] / work[rank][col];
      for (std::size_t c = col; c < m; ++c) work[r][c] -= f * work[rank][c];
    }
    d->rows.push_back(col);
    ++rank;
  }
  if (rank != n) throw Error(ErrorCode::internal, "subfield basis is not independent");
  // Invert S[r][i] = cols[i][rows[r]] by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) a[r][i] = cols[i][d->rows[r]];
    a[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c].is_zero()) ++piv;
    std::swap(a[piv], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  d->inv.assign(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) d->inv[r][k] = a[r][n + k];
  }
  slot = std::move(d);
  return *slot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw Error(ErrorCode::invalid_argument, "conductor must be positive");
  {
    std::lock_guard lock(g_field_mutex);
    auto it = g_polys.find(e);
    if (it != g_polys.end()) return it->second;
  }
  auto poly = compute_cyclotomic_polynomial(e);
  std::lock_guard lock(g_field_mutex);
  return g_polys.emplace(e, std::move(poly)).first->second;
}

CyclotomicField::CyclotomicField(std::uint64_t e) : e_(e) {
  if (e == 0) throw Error(ErrorCode::invalid_argument, "conductor must be positive");
  poly_ = cyclotomic_polynomial(e);
  phi_ = poly_.size() - 1;
  red_.resize(e);
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < e; ++j) {
    if (j > 0) {
      const std::int64_t top = cur[phi_ - 1];
      for (std::size_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t i = 0; i < phi_; ++i) cur[i] -= top * poly_[i];
      }
    }
    for (std::size_t i = 0; i < phi_; ++i) {
      if (cur[i] != 0) red_[j].emplace_back(static_cast<std::uint32_t>(i), cur[i]);
    }
  }
}

const CyclotomicField& cyclotomic_field(std::uint64_t e) {
  {
    std::lock_guard lock(g_field_mutex);
    auto it = g_fields.find(e);
    if (it != g_fields.end()) return *it->second;
  }
  auto field = std::make_unique<CyclotomicField>(e);
  std::lock_guard lock(g_field_mutex);
  auto& slot = g_fields[e];
  if (!slot) slot = std::move(field);
  return *slot;
}

Cyclotomic::Cyclotomic(std::uint64_t conductor) : field_(&cyclotomic_field(conductor)) {
  c_.assign(field_->dimension(), Rational{});
}

Cyclotomic Cyclotomic::rational(std::uint64_t conductor, const Rational& q) {
  Cyclotomic out(conductor);
  out.c_[0] = q;
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t conductor, std::int64_t j) {
  Cyclotomic out(conductor);
  const auto e = static_cast<std::int64_t>(conductor);
  out.add_root(static_cast<std::uint64_t>(((j % e) + e) % e), 1);
  return out;
}

Cyclotomic Cyclotomic::from_coefficients(std::uint64_t conductor, std::vector<Rational> coefficients) {
  Cyclotomic out(conductor);
  if (coefficients.size() != out.c_.size()) {
    throw Error(ErrorCode::invalid_argument, "coefficient vector length must equal phi(conductor)");
  }
  out.c_ = std::move(coefficients);
  return out;
}

bool Cyclotomic::is_zero() const noexcept {
  for (const auto& q : c_) {
    if (!q.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::invalid_argument, "value is not rational: " + to_string());
  return c_[0];
}

void Cyclotomic::require_same(const Cyclotomic& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::invalid_argument, "cyclotomic conductor mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic out = a;
  out += b;
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same(b);
  Cyclotomic out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    if (!b.c_[i].is_zero()) out.c_[i] -= b.c_[i];
  }
  return out;
}

void Cyclotomic::add_root(std::uint64_t j, const Rational& q) {
  if (q.is_zero()) return;
  for (auto [pos, v] : field_->reduction(j)) c_[pos] += q * Rational(v);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same(b);
  std::vector<std::uint32_t> nb;
  for (std::uint32_t j = 0; j < b.c_.size(); ++j) {
    if (!b.c_[j].is_zero()) nb.push_back(j);
  }
  Cyclotomic out(a.field_, std::vector<Rational>(a.c_.size()));
  if (nb.empty()) return out;
  for (std::uint32_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (auto j : nb) out.add_root(i + j, a.c_[i] * b.c_[j]);
  }
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
  Cyclotomic out = a;
  for (auto& x : out.c_) {
    if (!x.is_zero()) x *= q;
  }
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Rational& q) {
  return a * (Rational(1) / q);
}

Cyclotomic Cyclotomic::galois(std::uint64_t k) const {
  const std::uint64_t e = conductor();
  k %= e;
  if (std::gcd(k, e) != 1 && e > 1) {
    throw Error(ErrorCode::invalid_argument,
                "Galois exponent " + std::to_string(k) + " is not a unit modulo " + std::to_string(e));
  }
  Cyclotomic out(field_, std::vector<Rational>(c_.size()));
  for (std::uint64_t j = 0; j < c_.size(); ++j) out.add_root(j * k % e, c_[j]);
  return out;
}

Cyclotomic Cyclotomic::embed(std::uint64_t m) const {
  const std::uint64_t e = conductor();
  if (m == e) return *this;
  if (m == 0 || m % e != 0) {
    throw Error(ErrorCode::invalid_argument, "cannot embed conductor " + std::to_string(e) + " into " +
                                                 std::to_string(m));
  }
  Cyclotomic out(m);
  for (std::uint64_t j = 0; j < c_.size(); ++j) out.add_root(j * (m / e), c_[j]);
  return out;
}

Cyclotomic Cyclotomic::descend(std::uint64_t m) const {
  const std::uint64_t e = conductor();
  if (m == e) return *this;
  if (m == 0 || e % m != 0) {
    throw Error(ErrorCode::invalid_argument, "conductor " + std::to_string(m) + " does not divide " +
                                                 std::to_string(e));
  }
  if (is_rational()) return rational(m, c_[0]);
  const auto& d = descent_data(e, m);
  const std::size_t n = d.rows.size();
  std::vector<Rational> y(n);
  for (std::size_t r = 0; r < n; ++r) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = c_[d.rows[k]];
      if (!x.is_zero() && !d.inv[r][k].is_zero()) acc += d.inv[r][k] * x;
    }
    y[r] = acc;
  }
  Cyclotomic out = from_coefficients(m, std::move(y));
  if (!(out.embed(e) == *this)) {
    throw Error(ErrorCode::invalid_argument,
                to_string() + " does not lie in the field of conductor " + std::to_string(m));
  }
  return out;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor() <=> b.conductor(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (q.is_zero()) continue;
    const bool neg = q < Rational(0);
    const Rational mag = neg ? -q : q;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!(mag == Rational(1))) out += mag.to_string() + "*";
    out += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cutgroup
