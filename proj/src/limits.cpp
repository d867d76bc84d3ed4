#include "bex/limits.hpp"

#include <algorithm>
#include <stdexcept>

namespace bex {

double cesaro_apply(const CesaroFunctional& L, const Vec& prefix) {
  if (L.window < 1) throw std::invalid_argument("cesaro_apply: window must be >= 1");
  if (prefix.size() < L.window) throw std::invalid_argument("cesaro_apply: prefix too short");
  double s = 0.0;
  for (std::size_t k = 0; k < L.window; ++k) s += prefix[k];
  return s / static_cast<double>(L.window);
}

C0Diagnostic c0_counterexample(std::size_t N, std::size_t K) {
  if (K > N) throw std::invalid_argument("c0_counterexample: K must be <= N");
  CesaroFunctional L{N};
  C0Diagnostic diag;
  diag.values.reserve(K + 1);
  Vec tail(N, 1.0);  // starts as 1_{{0,1,...}}
  for (std::size_t k = 0; k <= K; ++k) {
    diag.values.push_back(cesaro_apply(L, tail));
    if (k < N) tail[k] = 0.0;  // drop to 1_{{k+1,k+2,...}}
  }
  diag.min_head = *std::min_element(diag.values.begin(), diag.values.end());
  return diag;
}

L1Diagnostic l1_counterexample(std::size_t N, std::size_t K) {
  if (K > N) throw std::invalid_argument("l1_counterexample: K must be <= N");
  CesaroFunctional L{N};
  L1Diagnostic diag;
  diag.head_mass = 0.0;
  Vec coord(N, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    coord[k] = 1.0;  // 1_{{k}}
    diag.head_mass += cesaro_apply(L, coord);
    coord[k] = 0.0;
  }
  diag.total_pairing = cesaro_apply(L, Vec(N, 1.0));
  diag.gap = diag.total_pairing - diag.head_mass;
  return diag;
}

}  // namespace bex
