#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "bex/operator.hpp"
#include "bex/rng.hpp"

using namespace bex;

namespace {

FunctionSpace counting(std::size_t n, double p) {
  return FunctionSpace(MeasureSpace(Vec(n, 1.0)), p);
}

MatrixOperator hadamard_l2() {
  return MatrixOperator(Matrix{{1.0, 1.0}, {1.0, -1.0}}, counting(2, 2.0), counting(2, 2.0));
}

}  // namespace

TEST_CASE("apply / least_dominant / dominates") {
  MatrixOperator T(Matrix{{1.0, -2.0}, {0.0, 3.0}}, counting(2, 2.0), counting(2, 2.0));
  Vec out = apply(T, {1.0, 1.0});
  CHECK(out[0] == doctest::Approx(-1.0));
  CHECK(out[1] == doctest::Approx(3.0));

  MatrixOperator A = least_dominant(T);
  CHECK(A.matrix()(0, 1) == doctest::Approx(2.0));
  CHECK(dominates(A, T));
  CHECK(!dominates(T, A));  // T has a negative entry, so it dominates nothing

  // shrinking any entry of |T| breaks domination
  Matrix shaved = A.matrix();
  shaved(1, 1) -= 1e-6;
  CHECK(!dominates(MatrixOperator(shaved, T.source(), T.target()), T));
}

TEST_CASE("frozen norm fixtures") {
  // Hadamard on l^2_2: ||T|| = sqrt(2), ||T||_M = || |T| || = 2.
  MatrixOperator H = hadamard_l2();
  NormEstimate est = operator_norm(H);
  CHECK(est.exact);
  CHECK(est.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(m_norm(H) == doctest::Approx(2.0).epsilon(1e-9));

  // row functional (1,1) on l^inf_2 has norm exactly 2
  MatrixOperator R(Matrix{{1.0, 1.0}}, counting(2, kInfExponent), counting(1, 1.0));
  NormEstimate rest = operator_norm(R);
  CHECK(rest.exact);
  CHECK(rest.value == 2.0);

  // identity l^1 -> l^1 with weights (2,1) on the source: columns scale by 1/mu
  MatrixOperator S(Matrix::identity(2), FunctionSpace(MeasureSpace({2.0, 1.0}), 1.0),
                   counting(2, 1.0));
  CHECK(operator_norm(S).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("witness invariant across methods") {
  auto check_witness = [](const MatrixOperator& T, const NormEstimate& est) {
    const double wn = norm(T.source(), est.witness);
    REQUIRE(wn > 0.0);
    CHECK(norm(T.target(), apply(T, est.witness)) / wn == doctest::Approx(est.value).epsilon(1e-9));
  };
  std::vector<std::pair<double, double>> pqs = {
      {1.0, 2.0}, {2.0, kInfExponent}, {kInfExponent, 2.0}, {2.0, 2.0}, {2.0, 1.0}, {3.0, 1.5}};
  for (int t = 0; t < 60; ++t) {
    auto g = trial_stream(0x0b17, t);
    const auto [p, q] = pqs[t % pqs.size()];
    const std::size_t n = 2 + t % 4, m = 2 + (t / 2) % 4;
    MatrixOperator T(random_matrix(g, m, n), FunctionSpace(MeasureSpace(random_vec(g, n, 0.5, 2.0)), p),
                     FunctionSpace(MeasureSpace(random_vec(g, m, 0.5, 2.0)), q));
    NormEstimate est = operator_norm(T);
    if (est.value > 1e-12) check_witness(T, est);
    CHECK(est.exact == (p == 1.0 || p == kInfExponent || q == kInfExponent || q == 1.0 ||
                        (p == 2.0 && q == 2.0)));
  }
}

TEST_CASE("ascent lower bound never exceeds an exact norm") {
  for (int t = 0; t < 40; ++t) {
    auto g = trial_stream(0xa5ce, t);
    const std::size_t n = 2 + t % 3, m = 2 + (t / 3) % 3;
    MatrixOperator T(random_matrix(g, m, n), FunctionSpace(MeasureSpace(random_vec(g, n, 0.5, 2.0)), 2.0),
                     FunctionSpace(MeasureSpace(random_vec(g, m, 0.5, 2.0)), 2.0));
    const double exact = operator_norm(T).value;
    NormEstimate asc = operator_norm(T, NormMethod::Ascent);
    CHECK(!asc.exact);
    CHECK(asc.value <= exact + 1e-9);
    CHECK(asc.value >= exact - 1e-6);  // l^2 -> l^2 ascent should converge
  }
}

TEST_CASE("norm dominated by m-norm") {
  for (int t = 0; t < 100; ++t) {
    auto g = trial_stream(0x4d4e, t);
    const double ps[] = {1.0, 2.0, kInfExponent};
    MatrixOperator T(random_matrix(g, 3, 3),
                     FunctionSpace(MeasureSpace(random_vec(g, 3, 0.5, 2.0)), ps[t % 3]),
                     FunctionSpace(MeasureSpace(random_vec(g, 3, 0.5, 2.0)), ps[(t / 3) % 3]));
    CHECK(operator_norm(T).value <= m_norm(T) + 1e-9);
  }
}

TEST_CASE("adjoint: fixture, involution, pairing identity, norm preservation") {
  // T = I : L^1(mu) -> L^1(nu) with mu=(2,1), nu=(1,1): S[a][b] = M[b][a] nu_b / mu_a
  MatrixOperator T(Matrix::identity(2), FunctionSpace(MeasureSpace({2.0, 1.0}), 1.0),
                   FunctionSpace(MeasureSpace({1.0, 1.0}), 1.0));
  MatrixOperator S = adjoint(T);
  CHECK(S.matrix()(0, 0) == doctest::Approx(0.5));
  CHECK(S.matrix()(1, 1) == doctest::Approx(1.0));
  CHECK(S.matrix()(0, 1) == 0.0);
  CHECK(S.source().p() == kInfExponent);

  for (int t = 0; t < 100; ++t) {
    auto g = trial_stream(0xad70, t);
    const double ps[] = {1.0, 1.5, 2.0, 4.0, kInfExponent};
    const std::size_t n = 2 + t % 3, m = 2 + (t / 3) % 3;
    MatrixOperator Tt(random_matrix(g, m, n),
                      FunctionSpace(MeasureSpace(random_vec(g, n, 0.5, 2.0)), ps[t % 5]),
                      FunctionSpace(MeasureSpace(random_vec(g, m, 0.5, 2.0)), ps[(t / 5) % 5]));
    MatrixOperator St = adjoint(Tt);
    CHECK(St.source().p() == conjugate_exponent(Tt.target().p()));
    CHECK(adjoint(St).matrix().max_abs_diff(Tt.matrix()) <= 1e-12);

    Vec gv = random_vec(g, m), hv = random_vec(g, n);
    const double lhs = pairing(Tt.target().space(), gv, apply(Tt, hv));
    const double rhs = pairing(Tt.source().space(), apply(St, gv), hv);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }

  // ||S|| = ||T|| when both sides are computed exactly
  for (int t = 0; t < 40; ++t) {
    auto g = trial_stream(0xad71, t);
    const std::vector<std::pair<double, double>> pqs = {
        {1.0, 1.0}, {2.0, 2.0}, {kInfExponent, kInfExponent}, {1.0, 2.0}, {2.0, kInfExponent}};
    const auto [p, q] = pqs[t % pqs.size()];
    MatrixOperator Tt(random_matrix(g, 3, 3),
                      FunctionSpace(MeasureSpace(random_vec(g, 3, 0.5, 2.0)), p),
                      FunctionSpace(MeasureSpace(random_vec(g, 3, 0.5, 2.0)), q));
    CHECK(operator_norm(adjoint(Tt)).value ==
          doctest::Approx(operator_norm(Tt).value).epsilon(1e-8));
  }
}

TEST_CASE("buhvalov ratio: Hadamard fixture and lower-bound property") {
  MatrixOperator H = hadamard_l2();
  std::vector<std::vector<Vec>> tuples = {{Vec{1.0, 0.0}, Vec{0.0, 1.0}}};
  const double ratio = buhvalov_ratio(H, tuples);
  // |Te_1|+|Te_2| = (2,2): ratio = ||(2,2)||_2 / ||(1,1)||_2 = 2 = ||H||_M
  CHECK(ratio == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ratio <= m_norm(H) + 1e-12);
  CHECK(ratio > operator_norm(H).value + 0.05);

  for (int t = 0; t < 50; ++t) {
    auto g = trial_stream(0xb4b4, t);
    MatrixOperator T(random_matrix(g, 3, 3),
                     FunctionSpace(MeasureSpace(random_vec(g, 3, 0.5, 2.0)), 2.0),
                     FunctionSpace(MeasureSpace(random_vec(g, 3, 0.5, 2.0)), 2.0));
    std::vector<std::vector<Vec>> tp;
    for (int k = 0; k < 3; ++k)
      tp.push_back({random_vec(g, 3), random_vec(g, 3), random_vec(g, 3)});
    CHECK(buhvalov_ratio(T, tp) <= m_norm(T) + 1e-9);
  }

  CHECK_THROWS_AS(buhvalov_ratio(H, {}), std::invalid_argument);
}

TEST_CASE("sign enumeration cap raises, ascent path still works") {
  const std::size_t n = kSignEnumCap + 1;
  MatrixOperator big(Matrix(2, n, 1.0), counting(n, kInfExponent), counting(2, 2.0));
  CHECK_THROWS_AS(operator_norm(big), std::domain_error);
  NormEstimate asc = operator_norm(big, NormMethod::Ascent);
  CHECK(!asc.exact);
  CHECK(asc.value > 0.0);
}
