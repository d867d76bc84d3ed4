#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "bex/limits.hpp"
#include "bex/rng.hpp"

using namespace bex;

TEST_CASE("cesaro functional basics") {
  CesaroFunctional L{4};
  CHECK(cesaro_apply(L, {1.0, 2.0, 3.0, 4.0}) == doctest::Approx(2.5));
  CHECK(cesaro_apply(L, {1.0, 2.0, 3.0, 4.0, 99.0}) == doctest::Approx(2.5));  // extra tail ignored
  CHECK(cesaro_apply(CesaroFunctional{1}, {7.0}) == doctest::Approx(7.0));
  CHECK_THROWS_AS(cesaro_apply(L, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(cesaro_apply(CesaroFunctional{0}, {}), std::invalid_argument);
}

TEST_CASE("shift defect bound 2 sup|x| / N") {
  for (int t = 0; t < 200; ++t) {
    auto g = trial_stream(0x5f17, t);
    const std::size_t N = 1 + static_cast<std::size_t>(splitmix64(t) % 500);
    Vec x = random_vec(g, N + 1, -3.0, 3.0);
    double sup = 0.0;
    for (double v : x) sup = std::max(sup, std::abs(v));
    CesaroFunctional L{N};
    Vec shifted(x.begin() + 1, x.end());
    const double defect = std::abs(cesaro_apply(L, x) - cesaro_apply(L, shifted));
    CHECK(defect <= 2.0 * sup / static_cast<double>(N) + 1e-15);
  }
}

TEST_CASE("c0 diagnostic: frozen values and monotone escape") {
  C0Diagnostic d = c0_counterexample(10000, 100);
  CHECK(d.values.size() == 101);
  CHECK(d.values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.values[100] == doctest::Approx(0.99).epsilon(1e-15));
  CHECK(d.min_head == doctest::Approx(0.99).epsilon(1e-12));

  // min_head increases with N at fixed K
  double prev = 0.0;
  for (std::size_t N : {200u, 1000u, 5000u, 10000u}) {
    const double cur = c0_counterexample(N, 100).min_head;
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(prev == doctest::Approx(0.99).epsilon(1e-12));
}

TEST_CASE("l1 diagnostic: head mass, total pairing, gap") {
  L1Diagnostic d = l1_counterexample(10000, 100);
  CHECK(d.total_pairing == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.head_mass == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(d.gap == doctest::Approx(0.99).epsilon(1e-12));

  // gap + head_mass = total_pairing by construction
  for (std::size_t N : {500u, 2000u, 10000u}) {
    L1Diagnostic e = l1_counterexample(N, 100);
    CHECK(e.gap + e.head_mass == doctest::Approx(e.total_pairing).epsilon(1e-12));
  }
}
