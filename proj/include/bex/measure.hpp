#pragma once

#include <cstddef>
#include <vector>

#include "bex/core.hpp"

namespace bex {

// Finite measure space: a list of atoms with strictly positive weights.
// Strict positivity rules out null atoms, so semi-finiteness holds for free.
class MeasureSpace {
public:
  explicit MeasureSpace(Vec weights);

  std::size_t atoms() const { return weights_.size(); }
  double weight(std::size_t a) const { return weights_[a]; }
  const Vec& weights() const { return weights_; }
  double total_mass() const;

  bool operator==(const MeasureSpace& o) const { return weights_ == o.weights_; }

private:
  Vec weights_;
};

// Sub-sigma-algebra of a finite atomic space = partition of the atoms.
// Stored in canonical form: indices sorted within blocks, blocks sorted by
// least element.
class Partition {
public:
  Partition(std::vector<std::vector<std::size_t>> blocks, const MeasureSpace& space);

  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t k) const { return blocks_[k]; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t atom) const { return block_of_[atom]; }
  std::size_t atom_count() const { return block_of_.size(); }
  double block_mass(const MeasureSpace& space, std::size_t k) const;

  bool operator==(const Partition& o) const { return blocks_ == o.blocks_; }

private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// True iff every block of `fine` is contained in a block of `coarse`.
bool is_coarser(const Partition& coarse, const Partition& fine);

Partition discrete_partition(const MeasureSpace& space);
Partition trivial_partition(const MeasureSpace& space);

}  // namespace bex
