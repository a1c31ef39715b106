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

#include "types.hpp"

namespace lindkraus {

struct StateDiagnostics {
  double trace_deviation;  // |tr - 1|
  double min_eigenvalue;
  double purity;           // tr(rho^2), real part
};

// Hermitian, unit-trace, positive semidefinite matrix. The tolerances decide
// what "is" means; they default to the library-wide contract values but can
// be relaxed for outputs of approximate paths (the oracle uses 1e-9).
class DensityMatrix {
 public:
  static DensityMatrix create(Matrix mat,
                              double hermitian_tol = kHermitianTol,
                              double trace_tol = kUnitTraceTol,
                              double positivity_tol = kPositivityTol);

  static DensityMatrix basis_state(int dim, int k);   // |k><k|
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix uniform_superposition(int dim);  // |+><+|

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }

 private:
  explicit DensityMatrix(Matrix mat) : mat_(std::move(mat)) {}

  Matrix mat_;
};

// Works on arbitrary square matrices; used for output reporting.
StateDiagnostics state_diagnostics(const Matrix& rho);

}  // namespace lindkraus
