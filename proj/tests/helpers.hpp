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

#pragma once

#include <functional>
#include <random>

#include "linalg.hpp"
#include "model.hpp"
#include "types.hpp"

namespace lindkraus::testing {

// Cascade |2> -> |1> -> |0> with equal rates, energies (-omega, g, omega).
inline LindbladModel three_level_model(double gamma, double omega = 1.0,
                                       double g = 0.3) {
  RealVector energies(3);
  energies << -omega, g, omega;
  RealMatrix rates = RealMatrix::Zero(3, 3);
  rates(0, 1) = gamma;
  rates(1, 2) = gamma;
  return LindbladModel::create(energies, rates);
}

inline LindbladModel two_level_model(double omega, double gamma_plus,
                                     double gamma_minus,
                                     double dephasing = 0.0) {
  RealVector energies(2);
  energies << -0.5 * omega, 0.5 * omega;
  RealMatrix rates = RealMatrix::Zero(2, 2);
  rates(0, 1) = gamma_plus;
  rates(1, 0) = gamma_minus;
  return LindbladModel::create(energies, rates, dephasing);
}

inline Matrix random_complex(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n) {
  const Matrix g = random_complex(rng, n, n);
  return 0.5 * (g + g.adjoint()).eval();
}

// Adaptive Simpson quadrature on a matrix-valued integrand; deliberately an
// independent route to the augmented-block integral.
inline Matrix simpson_quadrature(const std::function<Matrix(double)>& f,
                                 double a, double b, double tol = 1e-12,
                                 int depth = 24) {
  const std::function<Matrix(double, double, const Matrix&, const Matrix&,
                             const Matrix&, const Matrix&, double, int)>
      recurse = [&](double lo, double hi, const Matrix& flo, const Matrix& fhi,
                    const Matrix& fmid, const Matrix& whole, double eps,
                    int level) -> Matrix {
    const double mid = 0.5 * (lo + hi);
    const double h = hi - lo;
    const Matrix fl = f(0.5 * (lo + mid));
    const Matrix fr = f(0.5 * (mid + hi));
    const Matrix left = (h / 12.0) * (flo + 4.0 * fl + fmid);
    const Matrix right = (h / 12.0) * (fmid + 4.0 * fr + fhi);
    const Matrix sum = left + right;
    if (level <= 0 || max_abs(sum - whole) < 15.0 * eps) {
      return sum + (sum - whole) / 15.0;
    }
    return recurse(lo, mid, flo, fmid, fl, left, 0.5 * eps, level - 1) +
           recurse(mid, hi, fmid, fhi, fr, right, 0.5 * eps, level - 1);
  };
  const Matrix fa = f(a);
  const Matrix fb = f(b);
  const Matrix fm = f(0.5 * (a + b));
  const Matrix whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return recurse(a, b, fa, fb, fm, whole, tol, depth);
}

}  // namespace lindkraus::testing
