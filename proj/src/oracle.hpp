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

#include <cstdint>

#include "density.hpp"
#include "model.hpp"
#include "types.hpp"

// Brute-force ground truth: materialize the full N^2 x N^2 Liouvillian and
// exponentiate it. Everything the rest of the library computes in small
// pieces is checked against this.
namespace lindkraus::oracle {

struct Superoperator {
  int dim;     // N; mat acts on column-stacked N x N matrices
  Matrix mat;  // N^2 x N^2
};

// Memory grows as N^4; past this, callers must opt in explicitly.
inline constexpr int kDefaultDimLimit = 64;

Superoperator liouvillian(const LindbladModel& model);

// unvec(e^{Lt} vec(rho0)). Density invariants are enforced at 1e-9, the
// accuracy the dense exponential actually delivers.
DensityMatrix oracle_evolve(const LindbladModel& model,
                            const DensityMatrix& rho0, double t,
                            int max_dim = kDefaultDimLimit);

// Same propagation on an arbitrary matrix, no state checks.
Matrix oracle_evolve_matrix(const LindbladModel& model, const Matrix& rho0,
                            double t, int max_dim = kDefaultDimLimit);

// Process-wide count of Liouvillian constructions. The closed-form paths
// must leave it untouched; the benchmark asserts exactly that.
std::uint64_t superop_build_count();

}  // namespace lindkraus::oracle
