// Copyright 2026 The Lindkraus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "linalg.hpp"

using namespace lindkraus;
using namespace lindkraus::linalg;

namespace {

Matrix cascade_gamma0(double gamma) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = gamma;
  m(1, 1) = -gamma;
  m(1, 2) = gamma;
  m(2, 2) = -gamma;
  return m;
}

Matrix cascade_gamma1(double gamma) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = gamma;
  m(0, 1) = gamma;
  m(1, 2) = gamma;
  return m;
}

// Closed forms for the cascade exponentials, as functions of u = gamma*t.
Matrix cascade_expm0(double u) {
  const double e = std::exp(-u);
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(0, 1) = 1.0 - e;
  m(0, 2) = 1.0 - e - u * e;
  m(1, 1) = e;
  m(1, 2) = u * e;
  m(2, 2) = e;
  return m;
}

Matrix cascade_expm1(double u) {
  const double e = std::exp(u);
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = e;
  m(0, 1) = e - 1.0;
  m(0, 2) = e - 1.0 - u;
  m(1, 1) = 1.0;
  m(1, 2) = u;
  m(2, 2) = 1.0;
  return m;
}

// Two-level relaxation generators and their rank-one spectral closed forms.
Matrix two_level_gamma0(double gp, double gm) {
  Matrix m(2, 2);
  m << 0.0, gp, gm, gm - gp;
  return m;
}

Matrix two_level_gamma1(double gp, double gm) {
  Matrix m(2, 2);
  m << gp - gm, gp, gm, 0.0;
  return m;
}

Matrix two_level_expm0(double gp, double gm, double t) {
  const double gb = gp + gm;
  const double grow = std::exp(gm * t);
  const double decay = std::exp(-gp * t);
  Matrix m(2, 2);
  m << gp * grow + gm * decay, gp * (grow - decay), gm * (grow - decay),
      gm * grow + gp * decay;
  return m / gb;
}

Matrix two_level_expm1(double gp, double gm, double t) {
  const double gb = gp + gm;
  const double grow = std::exp(gp * t);
  const double decay = std::exp(-gm * t);
  Matrix m(2, 2);
  m << gp * grow + gm * decay, gp * (grow - decay), gm * (grow - decay),
      gm * grow + gp * decay;
  return m / gb;
}

}  // namespace

TEST_CASE("expm reproduces the cascade closed forms") {
  const double gamma = 1.0;
  for (const double u : {0.1, 1.0, 5.0}) {
    const Matrix e0 = expm(cascade_gamma0(gamma), u / gamma);
    CHECK(max_abs(e0 - cascade_expm0(u)) <= 1e-12);
    const Matrix e1 = expm(cascade_gamma1(gamma), u / gamma);
    CHECK(max_abs(e1 - cascade_expm1(u)) <= 1e-12);
  }
  // Same fixtures with the rate folded into the matrix instead of the time.
  const Matrix e0 = expm(cascade_gamma0(2.5), 2.0);
  CHECK(max_abs(e0 - cascade_expm0(5.0)) <= 1e-12);
}

TEST_CASE("expm reproduces the two level relaxation closed forms") {
  // Rates chosen so the largest entry stays O(10) at t = 5; the 1e-12
  // absolute contract would otherwise demand better-than-double relative
  // accuracy on e^{gamma_+ t}.
  const double gp = 0.6;
  const double gm = 0.25;
  for (const double t : {0.1, 1.0, 5.0}) {
    CHECK(max_abs(expm(two_level_gamma0(gp, gm), t) -
                  two_level_expm0(gp, gm, t)) <= 1e-12);
    CHECK(max_abs(expm(two_level_gamma1(gp, gm), t) -
                  two_level_expm1(gp, gm, t)) <= 1e-12);
  }
}

TEST_CASE("expm basics") {
  CHECK(max_abs(expm(Matrix::Zero(3, 3), 1.0) - Matrix::Identity(3, 3)) <=
        1e-15);

  const ExpmResult small = expm_result(0.5 * Matrix::Identity(2, 2), 1.0);
  CHECK(small.scaling_squarings == 0);
  CHECK(max_abs(small.value - std::exp(0.5) * Matrix::Identity(2, 2)) <=
        1e-13);

  const ExpmResult big = expm_result(20.0 * Matrix::Identity(2, 2), 1.0);
  CHECK(big.scaling_squarings == 2);
  CHECK(std::abs(big.value(0, 0).real() - std::exp(20.0)) /
            std::exp(20.0) <=
        1e-13);

  CHECK_THROWS_AS(expm(Matrix::Zero(2, 3), 1.0), Error);
}

TEST_CASE("expm satisfies the semigroup property on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix m = testing::random_complex(rng, 6, 6);
    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
    m *= 5.0 / norm;
    const Matrix lhs = expm(m, 0.7) * expm(m, 0.4);
    const Matrix rhs = expm(m, 1.1);
    CHECK(max_abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("expm_integral of the zero matrix is t times identity") {
  const Matrix f = expm_integral(Matrix::Zero(3, 3), 2.5);
  CHECK(max_abs(f - 2.5 * Matrix::Identity(3, 3)) <= 1e-13);
  CHECK(max_abs(expm_integral(cascade_gamma0(1.0), 0.0)) == 0.0);
  CHECK_THROWS_AS(expm_integral(Matrix::Zero(2, 2), -0.1), Error);
}

TEST_CASE("expm_integral matches the inverse formula when M is invertible") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    // Diagonal shift keeps the matrix comfortably invertible.
    Matrix m = testing::random_complex(rng, 5, 5);
    m += 4.0 * Matrix::Identity(5, 5);
    m *= 0.5;
    const Matrix direct = expm_integral(m, 1.3);
    const Matrix via_inverse =
        m.partialPivLu().solve(expm(m, 1.3) - Matrix::Identity(5, 5));
    CHECK(max_abs(direct - via_inverse) <= 1e-9);
  }
}

TEST_CASE("expm_integral agrees with adaptive quadrature on a singular M") {
  // The cascade generator has eigenvalue zero, so the inverse route is
  // unavailable; quadrature is the independent check.
  const Matrix m = cascade_gamma0(1.0);
  for (const double t : {0.3, 1.0, 4.0}) {
    const Matrix block = expm_integral(m, t);
    const Matrix quad = testing::simpson_quadrature(
        [&](double s) { return expm(m, s); }, 0.0, t);
    CHECK(max_abs(block - quad) <= 1e-9);
  }
}

TEST_CASE("expm_integral derivative is the exponential") {
  const Matrix m = two_level_gamma0(1.3, 0.4);
  const double t = 0.8;
  const double h = 1e-6;
  const Matrix fd =
      (expm_integral(m, t + h) - expm_integral(m, t - h)) / (2.0 * h);
  CHECK(max_abs(fd - expm(m, t)) <= 1e-6);
}

TEST_CASE("vec stacks columns") {
  Matrix m(2, 2);
  m << Complex(1, 0), Complex(3, 0), Complex(2, 0), Complex(4, 0);
  const Vector v = vec(m);
  CHECK(v(0) == Complex(1, 0));
  CHECK(v(1) == Complex(2, 0));
  CHECK(v(2) == Complex(3, 0));
  CHECK(v(3) == Complex(4, 0));
  CHECK(max_abs(unvec(v, 2) - m) == 0.0);
}

TEST_CASE("vec unvec round trip and kron identity") {
  std::mt19937_64 rng(17);
  const Matrix rho = testing::random_complex(rng, 3, 3);
  CHECK(max_abs(unvec(vec(rho), 3) - rho) == 0.0);

  const Matrix x = testing::random_complex(rng, 3, 3);
  const Matrix y = testing::random_complex(rng, 3, 3);
  const Vector lhs = vec((x * rho * y).eval());
  const Vector rhs = kron(y.transpose(), x) * vec(rho);
  CHECK(max_abs(Matrix(lhs - rhs)) <= 1e-12);

  CHECK_THROWS_AS(unvec(Vector::Zero(3), 2), Error);
}

TEST_CASE("hermitian_eigs sorts ascending and reconstructs") {
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.8;
  diag(1, 1) = 0.2;
  const HermitianEigs eigs = hermitian_eigs(diag);
  CHECK(eigs.values(0) == doctest::Approx(0.2));
  CHECK(eigs.values(1) == doctest::Approx(0.8));

  std::mt19937_64 rng(19);
  const Matrix h = testing::random_hermitian(rng, 5);
  const HermitianEigs he = hermitian_eigs(h);
  const Matrix rebuilt =
      he.vectors * he.values.cast<Complex>().asDiagonal() *
      he.vectors.adjoint();
  CHECK(max_abs(rebuilt - h) <= 1e-10);
  for (int i = 1; i < 5; ++i) CHECK(he.values(i - 1) <= he.values(i));

  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigs(skew), Error);
}
