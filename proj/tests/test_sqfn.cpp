#include <stdexcept>
#include <cmath>

#include <doctest.h>

#include "bex/quadrature.hpp"
#include "bex/rng.hpp"
#include "bex/sqfn.hpp"

using namespace bex;

namespace {

FunctionSpace counting(std::size_t n, double p) {
  return FunctionSpace(MeasureSpace(Vec(n, 1.0)), p);
}

}  // namespace

TEST_CASE("quadrature rules on polynomial fixtures") {
  // Gauss-Legendre with n nodes is exact up to degree 2n-1
  QuadRule gl = gauss_legendre(8);
  double s0 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    s0 += gl.weights[i];
    s2 += gl.weights[i] * gl.nodes[i] * gl.nodes[i];
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

  // Gauss-Hermite: integral of exp(-x^2) = sqrt(pi), of x^2 exp(-x^2) = sqrt(pi)/2
  QuadRule gh = gauss_hermite(20);
  double h0 = 0.0, h2 = 0.0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    h0 += gh.weights[i];
    h2 += gh.weights[i] * gh.nodes[i] * gh.nodes[i];
  }
  CHECK(h0 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  CHECK(h2 == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));

  // dyadic mesh handles a kink at the origin: int_0^1 sqrt(x) dx = 2/3
  CHECK(integrate_dyadic([](double x) { return std::sqrt(x); }, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("gaussian moments: frozen values, quadrature agreement, Lyapunov monotonicity") {
  CHECK(gaussian_moment(2.0) == doctest::Approx(1.0).epsilon(1e-13));
  // ||gamma||_1 = sqrt(2/pi)
  CHECK(gaussian_moment(1.0) == doctest::Approx(0.7978845608028654).epsilon(1e-12));
  // ||gamma||_4 = 3^{1/4}
  CHECK(gaussian_moment(4.0) == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-12));

  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0})
    CHECK(std::abs(gaussian_moment(p) - gaussian_moment_quadrature(p)) <= 1e-10);

  double prev = 0.0;
  for (double p : {1.0, 1.3, 2.0, 2.7, 4.0, 5.5}) {
    const double cur = gaussian_moment(p);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("mz constant fixtures") {
  CHECK(mz_constant(2.0, 2.0) == 1.0);
  CHECK(mz_constant(1.0, 2.0) == 1.0);  // ||gamma||_1 < ||gamma||_2, clamped at 1
  CHECK(mz_constant(2.0, 1.0) ==
        doctest::Approx(1.0 / 0.7978845608028654).epsilon(1e-12));
  CHECK(mz_constant(4.0, 1.0) ==
        doctest::Approx(std::pow(3.0, 0.25) / 0.7978845608028654).epsilon(1e-12));
}

TEST_CASE("square function and krivine ratio fixtures") {
  FunctionSpace E = counting(3, kInfExponent);
  std::vector<Vec> es = {{3.0, 0.0, 0.0}, {4.0, 1.0, 0.0}};
  CHECK(square_function(E, es) == doctest::Approx(5.0).epsilon(1e-13));

  // identity on l^inf_3 with the standard basis attains ratio 1
  MatrixOperator I3(Matrix::identity(3), E, counting(3, kInfExponent));
  std::vector<Vec> basis = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  CHECK(krivine_ratio(I3, basis) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(krivine_ratio(I3, {}), std::invalid_argument);
}

TEST_CASE("krivine ratio stays under the Grothendieck bound") {
  for (int t = 0; t < 300; ++t) {
    auto g = trial_stream(0x6b72, t);
    const std::size_t n = 2 + t % 4, m = 2 + (t / 4) % 4, k = 1 + t % 3;
    MatrixOperator S(random_matrix(g, m, n), counting(n, kInfExponent), counting(m, 1.0));
    std::vector<Vec> es;
    for (std::size_t j = 0; j < k; ++j) es.push_back(random_vec(g, n));
    const double r = krivine_ratio(S, es);
    CHECK(r <= kGrothendieckBound + 1e-6);
    CHECK(r >= 0.0);
  }
}

TEST_CASE("mz ratio check across exponent pairs") {
  const std::vector<std::pair<double, double>> pairs = {{1.0, 2.0}, {2.0, 1.0}, {2.0, 2.0}, {4.0, 2.0}};
  for (const auto& [p1, p2] : pairs) {
    for (int t = 0; t < 40; ++t) {
      auto g = trial_stream(0x6d7a ^ static_cast<std::uint64_t>(100 * p1 + p2), t);
      const std::size_t n = 2 + t % 3, m = 2 + (t / 3) % 3;
      MatrixOperator S(random_matrix(g, m, n), counting(n, p1), counting(m, p2));
      std::vector<Vec> es = {random_vec(g, n), random_vec(g, n)};
      MzCheck chk = mz_ratio_check(S, es, p1, p2);
      CHECK(chk.pass);
      CHECK(chk.lhs <= chk.rhs);
    }
  }

  // exponent mismatch is rejected
  MatrixOperator S(Matrix::identity(2), counting(2, 2.0), counting(2, 2.0));
  CHECK_THROWS_AS(mz_ratio_check(S, {{1.0, 0.0}}, 1.0, 2.0), std::invalid_argument);
}
