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

#include "closed_forms.hpp"
#include "density.hpp"
#include "model.hpp"
#include "solver.hpp"
#include "types.hpp"

// Entry points that pick the right solution path for a model: the general
// jump solver for pure rate models, the dedicated closed form when a
// two-level model carries dephasing.
namespace lindkraus {

DensityMatrix evolve_state(const LindbladModel& model,
                           const DensityMatrix& rho0, double t);

// Linear extension to arbitrary square matrices.
Matrix evolve_map(const LindbladModel& model, const Matrix& rho0, double t);

// Jump-form operators when available, Choi decomposition otherwise.
kraus::KrausSet kraus_of(const LindbladModel& model, double t);

// Choi matrix of the evolution map at time t.
Matrix choi_of(const LindbladModel& model, double t);

// Reads a validated two-level model into closed-form parameters.
closed::TwoLevelParams two_level_params_of(const LindbladModel& model);

}  // namespace lindkraus
