#include "bex/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace bex {

MeasureSpace::MeasureSpace(Vec weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("MeasureSpace: no atoms");
  for (double w : weights_)
    if (!(w > 0.0)) throw std::invalid_argument("MeasureSpace: weights must be strictly positive");
}

double MeasureSpace::total_mass() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

Partition::Partition(std::vector<std::vector<std::size_t>> blocks, const MeasureSpace& space) {
  const std::size_t n = space.atoms();
  block_of_.assign(n, n);  // n = unassigned sentinel
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("Partition: empty block");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("Partition: repeated atom within a block");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t a : blocks[k]) {
      if (a >= n) throw std::invalid_argument("Partition: atom index out of range");
      if (block_of_[a] != n) throw std::invalid_argument("Partition: overlapping blocks");
      block_of_[a] = k;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (block_of_[a] == n) throw std::invalid_argument("Partition: atom not covered by any block");
  blocks_ = std::move(blocks);
}

double Partition::block_mass(const MeasureSpace& space, std::size_t k) const {
  double s = 0.0;
  for (std::size_t a : blocks_[k]) s += space.weight(a);
  return s;
}

bool is_coarser(const Partition& coarse, const Partition& fine) {
  if (coarse.atom_count() != fine.atom_count()) return false;
  for (const auto& b : fine.blocks()) {
    const std::size_t target = coarse.block_of(b.front());
    for (std::size_t a : b)
      if (coarse.block_of(a) != target) return false;
  }
  return true;
}

Partition discrete_partition(const MeasureSpace& space) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t a = 0; a < space.atoms(); ++a) blocks.push_back({a});
  return Partition(std::move(blocks), space);
}

Partition trivial_partition(const MeasureSpace& space) {
  std::vector<std::size_t> all(space.atoms());
  for (std::size_t a = 0; a < space.atoms(); ++a) all[a] = a;
  return Partition({all}, space);
}

}  // namespace bex
