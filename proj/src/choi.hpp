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

#include "solver.hpp"
#include "types.hpp"

// Channel canonicalization. Any linear map on N x N matrices has a Choi
// matrix; if that matrix is positive semidefinite the map is completely
// positive and its eigendecomposition hands back a Kraus set. This is the
// route for channels that are not already in jump form, like the dephasing
// solution with its sigma_z rho and rho sigma_z cross terms.
namespace lindkraus::kraus {

using MatrixMap = std::function<Matrix(const Matrix&)>;

// sum_ij E_ij kron map(E_ij), an N^2 x N^2 matrix.
Matrix choi_matrix(const MatrixMap& map, int dim);

// Eigenvectors with eigenvalues above 1e-12 become operators; an eigenvalue
// below -1e-8 means the map is not completely positive and throws.
KrausSet kraus_from_choi(const Matrix& choi);

}  // namespace lindkraus::kraus
