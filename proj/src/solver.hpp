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

#include <vector>

#include "density.hpp"
#include "model.hpp"
#include "types.hpp"

// Closed-form Lindblad evolution through small per-target matrices. The
// no-jump part is diagonal (complex energies), and for each target state m
// the jump weights solve a linear ODE of dimension |I|, never N^2. All
// returned quantities live in the Schrodinger picture.
namespace lindkraus::kraus {

struct EffectiveGenerator {
  // E_n - (i/2) sum_m rates(m, n); the imaginary part is half the total
  // escape rate of n, so it never lies above the real axis.
  Vector complex_energies;
};

struct GammaMatrix {
  int target;               // m
  std::vector<int> states;  // channel set, ascending; indexes rows and cols
  RealMatrix mat;
};

struct JumpCoefficients {
  double time;
  std::vector<int> states;  // channel set, ascending
  // coeffs(a, b) is the weight of X_{m n'} rho X_{m n'}^dag with
  // m = states[a], n' = states[b]. Nonnegative for valid models; entries in
  // [-1e-10, 0) are rounding noise and get clipped, anything lower throws.
  RealMatrix coeffs;
};

struct KrausOperator {
  double weight;  // kept at 1 by convention, operators are pre-scaled
  Matrix op;
};

struct KrausSet {
  int dim;
  std::vector<KrausOperator> operators;
  double completeness_residual;  // max norm of sum K^dag K - 1
};

EffectiveGenerator effective_generator(const LindbladModel& model);

// Requires m in the channel set.
GammaMatrix gamma_matrix(const LindbladModel& model, int m);

JumpCoefficients jump_coefficients(const LindbladModel& model, double t);

// Linear extension of the evolution map to arbitrary square matrices; this
// is what the Choi construction feeds.
Matrix evolve_matrix(const LindbladModel& model, const Matrix& rho0, double t);

DensityMatrix evolve(const LindbladModel& model, const DensityMatrix& rho0,
                     double t);

// {e^{At}} plus one scaled jump operator per positive coefficient.
KrausSet kraus_set(const LindbladModel& model, double t);

// Residual of sum K^dag K = 1 for an arbitrary operator list.
double completeness_residual(const KrausSet& set);

}  // namespace lindkraus::kraus
