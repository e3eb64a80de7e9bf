#include "permutation.hpp"

#include <cctype>

#include "arith.hpp"
#include "error.hpp"

namespace cutgroup {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw Error(ErrorCode::invalid_argument,
                "degree " + std::to_string(images_.size()) + " exceeds the maximum of " +
                    std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point p = images_[i];
    if (p >= images_.size()) {
      throw Error(ErrorCode::not_a_permutation,
                  "image " + std::to_string(p) + " of point " + std::to_string(i) +
                      " is out of range for degree " + std::to_string(images_.size()));
    }
    if (seen[p]) {
      throw Error(ErrorCode::not_a_permutation,
                  "point " + std::to_string(p) + " appears twice as an image (at " +
                      std::to_string(i) + ")");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point a = cycle[k];
      const Point b = cycle[(k + 1) % cycle.size()];
      if (a >= degree || b >= degree) {
        throw Error(ErrorCode::not_a_permutation,
                    "cycle point out of range for degree " + std::to_string(degree));
      }
      if (used[a]) {
        throw Error(ErrorCode::not_a_permutation,
                    "point " + std::to_string(a) + " occurs in two cycles");
      }
      used[a] = true;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point>* current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (current != nullptr) throw Error(ErrorCode::parse_error, "nested '(' in cycle string");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (current == nullptr) throw Error(ErrorCode::parse_error, "unmatched ')' in cycle string");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (current == nullptr) throw Error(ErrorCode::parse_error, "point outside of a cycle");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > kMaxDegree) throw Error(ErrorCode::parse_error, "point index too large");
        ++i;
      }
      current->push_back(static_cast<Point>(value));
    } else if (c == ' ' || c == ',' || c == '\t') {
      ++i;
    } else {
      throw Error(ErrorCode::parse_error,
                  std::string("unexpected character '") + c + "' in cycle string");
    }
  }
  if (current != nullptr) throw Error(ErrorCode::parse_error, "unterminated cycle");
  std::erase_if(cycles, [](const auto& cyc) { return cyc.empty(); });
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -(k + 1) + 1 : k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    Point p = static_cast<Point>(start);
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::degree_mismatch, "cannot compose permutations of degree " +
                                                std::to_string(a.degree()) + " and " +
                                                std::to_string(b.degree()));
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Point p = static_cast<Point>(start);
    while (!seen[p]) {
      seen[p] = true;
      p = g[p];
      ++len;
    }
    order = checked_lcm(order, len);
  }
  return order;
}

}  // namespace cutgroup
