#pragma once

#include <cstddef>

#include "bex/core.hpp"

namespace bex {

// Cesaro window approximant of a Banach limit. True Banach limits are
// non-constructive; the window length N controls the shift defect, which is
// bounded by 2 sup|x| / N.
struct CesaroFunctional {
  std::size_t window;  // N >= 1
};

// (1/N) sum_{k<N} x_k on a bounded-sequence prefix.
double cesaro_apply(const CesaroFunctional& L, const Vec& prefix);

struct C0Diagnostic {
  Vec values;       // values[k] = Lambda_N(1_{{k,k+1,...}}) = (N-k)/N, k <= K
  double min_head;  // min over k <= K; tends to 1 as N grows with K fixed
};

// Tail-indicator diagnostic: the candidate c_0-valued extension output heads
// towards the constant-one sequence, which stays at sup-distance 1 from c_0.
C0Diagnostic c0_counterexample(std::size_t N, std::size_t K);

struct L1Diagnostic {
  double head_mass;      // sum_{k<K} Lambda_N(1_{{k}}) = K/N
  double total_pairing;  // Lambda_N(1) = 1
  double gap;            // 1 - K/N: mass escaping to infinity
};

// Coordinate-indicator diagnostic quantifying the broken pairing identity
// <1, T_{l^1} f> = T<1, f> in the l^1 case.
L1Diagnostic l1_counterexample(std::size_t N, std::size_t K);

}  // namespace bex
