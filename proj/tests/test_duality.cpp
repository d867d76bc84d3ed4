#include <stdexcept>
#include <cmath>

#include <doctest.h>

#include "bex/duality.hpp"
#include "bex/rng.hpp"

using namespace bex;

TEST_CASE("y_norm fixtures") {
  CHECK(y_norm(FiniteBanachSpace(2, 2.0), {3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(y_norm(FiniteBanachSpace(2, kInfExponent), {3.0, -4.0}) == doctest::Approx(4.0));
  CHECK(y_norm(FiniteBanachSpace(3, 1.0), {1.0, 1.0, 1.0}) == doctest::Approx(3.0));
  CHECK_THROWS_AS(y_norm(FiniteBanachSpace(3, 1.0), {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("dual pair validation") {
  FiniteBanachSpace X(2, 2.0), Y(2, 2.0);
  CHECK_NOTHROW(DualPair::identity_pair(X, Y));
  CHECK_THROWS_AS(DualPair(X, Y, Matrix{{1.0, 1.0}, {1.0, 1.0}}), std::invalid_argument);  // rank 1
  CHECK_THROWS_AS(DualPair(X, FiniteBanachSpace(3, 2.0), Matrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("is_norming: conjugate pairs, scaled pairing, random report") {
  for (double p : {1.0, 2.0, kInfExponent}) {
    DualPair P(FiniteBanachSpace(3, conjugate_exponent(p)), FiniteBanachSpace(3, p),
               Matrix::identity(3));
    auto rep = is_norming(P, 1e-9, 512);
    CHECK(rep.norming);
    CHECK(rep.max_defect <= 1e-9);
  }
  // shrinking B_X by half recovers only half the norm
  {
    Matrix half = Matrix::identity(2);
    half(0, 0) = half(1, 1) = 0.5;
    DualPair P(FiniteBanachSpace(2, 2.0), FiniteBanachSpace(2, 2.0), half);
    auto rep = is_norming(P, 1e-9, 512);
    CHECK(!rep.norming);
    CHECK(rep.max_defect == doctest::Approx(0.5).epsilon(1e-9));
  }
  // random full-rank pairing: report only, defect finite
  {
    auto g = trial_stream(0x6e72, 1);
    Matrix M = random_matrix(g, 3, 3);
    M(0, 0) += 3.0;  // keep it comfortably full-rank
    M(1, 1) += 3.0;
    M(2, 2) += 3.0;
    DualPair P(FiniteBanachSpace(3, 2.0), FiniteBanachSpace(3, 2.0), M);
    auto rep = is_norming(P, 1e-9, 256);
    CHECK(std::isfinite(rep.max_defect));
  }
}

TEST_CASE("bochner norm fixtures and cross-norm property") {
  FiniteBanachSpace Y(2, 2.0);
  VectorFunction f(Matrix{{3.0, 4.0}, {1.0, 0.0}});
  CHECK(bochner_norm(FunctionSpace(MeasureSpace({1.0, 1.0}), kInfExponent), Y, f) ==
        doctest::Approx(5.0));
  CHECK(bochner_norm(FunctionSpace(MeasureSpace({1.0, 1.0}), 1.0), Y, f) == doctest::Approx(6.0));
  CHECK(bochner_norm(FunctionSpace(MeasureSpace({1.0, 1.0}), 2.0), Y,
                     VectorFunction(Matrix(2, 2, 0.0))) == 0.0);

  // || e (x) y || = ||e||_E ||y||_Y on sampled elementary tensors
  for (int t = 0; t < 100; ++t) {
    auto g = trial_stream(0xc505, t);
    const std::size_t n = 1 + t % 5, d = 1 + t % 4;
    MeasureSpace space(random_vec(g, n, 0.5, 2.0));
    FunctionSpace E(space, std::vector<double>{1.0, 2.0, kInfExponent}[t % 3]);
    FiniteBanachSpace Yt(d, std::vector<double>{1.0, 2.0, kInfExponent}[(t / 3) % 3]);
    Vec e = random_vec(g, n), y = random_vec(g, d);
    CHECK(bochner_norm(E, Yt, VectorFunction::tensor(e, y)) ==
          doctest::Approx(norm(E, e) * y_norm(Yt, y)).epsilon(1e-12));
  }
}

TEST_CASE("bochner pairing: tensors, identity fixture, Bochner-Holder") {
  MeasureSpace space({1.0, 1.0});
  FiniteBanachSpace X(2, 2.0), Y(2, 2.0);
  DualPair XY = DualPair::identity_pair(X, Y);

  VectorFunction e(Matrix{{1.0, 0.0}, {0.0, 1.0}});
  CHECK(bochner_pairing(space, XY, e, e) == doctest::Approx(2.0));
  CHECK(bochner_pairing(space, XY, VectorFunction(Matrix(2, 2, 0.0)), e) == 0.0);

  // separability over elementary tensors
  for (int t = 0; t < 100; ++t) {
    auto g = trial_stream(0xb0c8, t);
    const std::size_t n = 1 + t % 5, d = 1 + t % 4;
    MeasureSpace sp(random_vec(g, n, 0.5, 2.0));
    DualPair pr = DualPair::identity_pair(FiniteBanachSpace(d, 2.0), FiniteBanachSpace(d, 2.0));
    Vec ef = random_vec(g, n), ff = random_vec(g, n);
    Vec x = random_vec(g, d), y = random_vec(g, d);
    CHECK(bochner_pairing(sp, pr, VectorFunction::tensor(ef, x), VectorFunction::tensor(ff, y)) ==
          doctest::Approx(pairing(sp, ef, ff) * dot(x, y)).epsilon(1e-12));
  }

  // Bochner-Holder for identity pairing with conjugate norms
  for (int t = 0; t < 200; ++t) {
    auto g = trial_stream(0xb48c, t);
    const std::size_t n = 1 + t % 5, d = 1 + t % 4;
    MeasureSpace sp(random_vec(g, n, 0.5, 2.0));
    const double pE = std::vector<double>{1.0, 2.0, kInfExponent}[t % 3];
    const double pY = std::vector<double>{1.0, 2.0, kInfExponent}[(t / 3) % 3];
    FunctionSpace E(sp, pE);
    FiniteBanachSpace Yt(d, pY), Xt(d, conjugate_exponent(pY));
    DualPair pr = DualPair::identity_pair(Xt, Yt);
    VectorFunction ex(random_matrix(g, n, d)), fy(random_matrix(g, n, d));
    CHECK(std::abs(bochner_pairing(sp, pr, ex, fy)) <=
          bochner_norm(kothe_dual(E), Xt, ex) * bochner_norm(E, Yt, fy) + 1e-10);
  }
}

TEST_CASE("make_basis: biorthogonality and basis constant") {
  FiniteBanachSpace Y(3, 2.0);
  auto g = trial_stream(0xba51, 0);
  Matrix V = random_matrix(g, 3, 3);
  V(0, 0) += 2.0;
  V(1, 1) += 2.0;
  V(2, 2) += 2.0;
  Basis B = make_basis(V, Y);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(dot(B.functionals.row(i), B.vectors.row(j)) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
  CHECK(B.constant >= 1.0);

  Basis std3 = standard_basis(3);
  CHECK(std3.constant == doctest::Approx(1.0));
  Basis std_built = make_basis(Matrix::identity(3), Y);
  CHECK(std_built.constant == doctest::Approx(1.0).epsilon(1e-12));
}
