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

#include "dispatch.hpp"

#include "choi.hpp"

namespace lindkraus {

closed::TwoLevelParams two_level_params_of(const LindbladModel& model) {
  if (model.dim() != 2) {
    throw Error(ErrorCode::dimension_mismatch,
                "two-level parameters need a two-level model");
  }
  closed::TwoLevelParams p;
  // Only the splitting enters; a common energy offset cancels from the
  // evolution of rho.
  p.omega = model.energies()[1] - model.energies()[0];
  p.gamma_plus = model.rates()(0, 1);
  p.gamma_minus = model.rates()(1, 0);
  p.gamma_0 = model.dephasing_rate();
  return p;
}

Matrix evolve_map(const LindbladModel& model, const Matrix& rho0, double t) {
  if (model.dephasing_rate() > 0.0) {
    ensure_valid(model);
    return closed::two_level_dephasing_map(two_level_params_of(model), rho0,
                                           t);
  }
  return kraus::evolve_matrix(model, rho0, t);
}

DensityMatrix evolve_state(const LindbladModel& model,
                           const DensityMatrix& rho0, double t) {
  return DensityMatrix::create(evolve_map(model, rho0.mat(), t));
}

kraus::KrausSet kraus_of(const LindbladModel& model, double t) {
  if (model.dephasing_rate() > 0.0) {
    return kraus::kraus_from_choi(choi_of(model, t));
  }
  return kraus::kraus_set(model, t);
}

Matrix choi_of(const LindbladModel& model, double t) {
  return kraus::choi_matrix(
      [&](const Matrix& e) { return evolve_map(model, e, t); }, model.dim());
}

}  // namespace lindkraus
