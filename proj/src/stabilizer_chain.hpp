#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "permutation.hpp"

namespace cutgroup {

// Sims table over the base 0, 1, ..., degree-1 (Knuth's incremental
// construction). Level k holds coset representatives of G^(k+1) in G^(k),
// where G^(k) is the pointwise stabilizer of {0, ..., k-1}. Fully
// deterministic: the table depends only on the generator sequence.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);

  void add_generator(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  bool contains(const Permutation& g) const;
  std::uint64_t order() const;

  // Points whose level has more than one coset representative, increasing.
  std::vector<Point> base() const;
  // Coset representatives at a base point; the identity comes first.
  const std::vector<Permutation>& transversal(Point level) const;

 private:
  struct Level {
    std::vector<Permutation> gens;
    std::vector<Permutation> reps;
    std::vector<Permutation> rep_inverses;
    std::unordered_map<Point, std::uint32_t> rep_of;
  };

  Level& level(Point k);
  // Residue of g after sifting through levels >= from; identity iff member.
  Permutation sift(Permutation g, Point from) const;
  void add_at(Point k, const Permutation& g);
  void extend(Point k, const Permutation& g);

  std::size_t degree_;
  std::vector<std::unique_ptr<Level>> levels_;
};

}  // namespace cutgroup
