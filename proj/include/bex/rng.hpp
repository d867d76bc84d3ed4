#pragma once

#include <cstdint>
#include <random>

#include "bex/core.hpp"

namespace bex {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream derivation: the stream for trial k depends only on
// (master, k), so results do not depend on evaluation order.
inline std::mt19937_64 trial_stream(std::uint64_t master, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(master) ^ splitmix64(trial)));
}

inline Vec random_vec(std::mt19937_64& g, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  Vec v(n);
  for (auto& x : v) x = d(g);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols,
                            double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(g);
  return m;
}

// Gaussian direction, l2-normalized.
inline Vec random_unit_vec(std::mt19937_64& g, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  Vec v(n);
  double s2 = 0.0;
  do {
    s2 = 0.0;
    for (auto& x : v) {
      x = d(g);
      s2 += x * x;
    }
  } while (s2 < 1e-30);
  const double inv = 1.0 / std::sqrt(s2);
  for (auto& x : v) x *= inv;
  return v;
}

}  // namespace bex
