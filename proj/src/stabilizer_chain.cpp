#include "stabilizer_chain.hpp"

#include "arith.hpp"
#include "error.hpp"

namespace cutgroup {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree), levels_(degree) {}

StabilizerChain::Level& StabilizerChain::level(Point k) {
  auto& slot = levels_[k];
  if (!slot) {
    slot = std::make_unique<Level>();
    slot->reps.push_back(Permutation::identity(degree_));
    slot->rep_inverses.push_back(Permutation::identity(degree_));
    slot->rep_of.emplace(k, 0);
  }
  return *slot;
}

Permutation StabilizerChain::sift(Permutation g, Point from) const {
  for (std::size_t k = from; k < degree_; ++k) {
    const Point j = g[static_cast<Point>(k)];
    if (j == k) continue;
    const Level* lvl = levels_[k].get();
    if (lvl == nullptr) return g;
    auto it = lvl->rep_of.find(j);
    if (it == lvl->rep_of.end()) return g;
    g = lvl->rep_inverses[it->second] * g;
  }
  return g;
}

void StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) {
    throw Error(ErrorCode::degree_mismatch, "generator has degree " + std::to_string(g.degree()) +
                                                ", expected " + std::to_string(degree_));
  }
  if (degree_ == 0 || g.is_identity()) return;
  add_at(0, g);
}

// g fixes 0..k-1. Adds g to G^(k) unless already a member.
void StabilizerChain::add_at(Point k, const Permutation& g) {
  if (sift(g, k).is_identity()) return;
  Level& lvl = level(k);
  lvl.gens.push_back(g);
  const std::size_t count = lvl.reps.size();
  for (std::size_t i = 0; i < count; ++i) {
    // Copy: extend() may reallocate reps.
    const Permutation rep = levels_[k]->reps[i];
    extend(k, g * rep);
  }
}

// g fixes 0..k-1; either records a new coset representative or pushes the
// Schreier element down one level.
void StabilizerChain::extend(Point k, const Permutation& g) {
  Level& lvl = level(k);
  const Point j = g[k];
  auto it = lvl.rep_of.find(j);
  if (it == lvl.rep_of.end()) {
    lvl.rep_of.emplace(j, static_cast<std::uint32_t>(lvl.reps.size()));
    lvl.reps.push_back(g);
    lvl.rep_inverses.push_back(g.inverse());
    const std::size_t ngens = lvl.gens.size();
    for (std::size_t t = 0; t < ngens; ++t) {
      const Permutation gen = levels_[k]->gens[t];
      extend(k, gen * g);
    }
  } else {
    const Permutation residue = lvl.rep_inverses[it->second] * g;
    if (k + 1 < degree_) add_at(k + 1, residue);
  }
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).is_identity();
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const auto& lvl : levels_) {
    if (lvl) order = checked_mul(order, lvl->reps.size());
  }
  return order;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (std::size_t k = 0; k < degree_; ++k) {
    if (levels_[k] && levels_[k]->reps.size() > 1) out.push_back(static_cast<Point>(k));
  }
  return out;
}

const std::vector<Permutation>& StabilizerChain::transversal(Point k) const {
  if (k >= degree_ || !levels_[k]) {
    throw Error(ErrorCode::invalid_argument, "no transversal stored at point " + std::to_string(k));
  }
  return levels_[k]->reps;
}

}  // namespace cutgroup
