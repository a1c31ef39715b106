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

#include "density.hpp"
#include "types.hpp"

// Fully worked analytic solutions for the cascade and two-level systems.
// They double as ground truth for the general solver and as fast paths.
// Basis convention throughout: state 0 is the ground state, sigma_z is
// diag(-1, +1), sigma_+ = |1><0|, sigma_- = |0><1|.
namespace lindkraus::closed {

struct TwoLevelParams {
  double omega = 0.0;        // level splitting E_1 - E_0
  double gamma_plus = 0.0;   // decay |1> -> |0>
  double gamma_minus = 0.0;  // excitation |0> -> |1>
  double gamma_0 = 0.0;      // pure dephasing

  double gamma_beta() const { return gamma_plus + gamma_minus; }
  double gamma() const { return gamma_plus - gamma_minus; }
};

// Three-level cascade |2> -> |1> -> |0> with equal rate gamma on both steps
// and energies (e0, e1, e2).
DensityMatrix three_level_solution(double e0, double e1, double e2,
                                   double gamma, const DensityMatrix& rho0,
                                   double t);

// Thermal two-level system without dephasing (gamma_0 ignored).
DensityMatrix two_level_solution(const TwoLevelParams& params,
                                 const DensityMatrix& rho0, double t);

// Two-level system with decay, excitation and pure dephasing. Valid for any
// gamma_0 >= 0 and reduces to two_level_solution at gamma_0 = 0.
DensityMatrix two_level_dephasing_solution(const TwoLevelParams& params,
                                           const DensityMatrix& rho0,
                                           double t);

// Linear extension of the dephasing evolution to arbitrary 2x2 matrices,
// needed to build Choi matrices of the dephasing channel.
Matrix two_level_dephasing_map(const TwoLevelParams& params,
                               const Matrix& rho0, double t);

// Verifies the superoperator identities used to derive the dephasing
// solution (P_z^2 = 1, P_pm^2 = 0, P_z P_pm = P_pm = P_pm P_z,
// P_mp P_pm P_mp = P_mp) on a full matrix basis, to 1e-14.
bool superop_p_algebra_check();

}  // namespace lindkraus::closed
