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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lindkraus {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;    // dense complex, column-major
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Units: hbar = 1. Energies are angular frequencies, rates share their
// dimension, time is their inverse.

// Validity thresholds. These are contract values, not tuning knobs.
inline constexpr double kHermitianTol = 1e-12;       // density matrices
inline constexpr double kUnitTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;      // min eigenvalue >= -tol
inline constexpr double kDegeneracyRelTol = 1e-9;    // energy / frequency clashes
inline constexpr double kJumpCoeffNegTol = 1e-10;    // below this a map is not CP
inline constexpr double kKrausCompletenessTol = 1e-10;
inline constexpr double kChoiRankTol = 1e-12;        // eigenvalues kept as Kraus ops
inline constexpr double kChoiNegativityTol = 1e-8;   // below -tol the Choi is not CP
inline constexpr double kSuperopTraceTol = 1e-12;

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  parse_error,
  model_invalid,
  not_completely_positive,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

// Largest entrywise deviation from Hermiticity.
inline double hermiticity_residual(const Matrix& m) {
  return max_abs(m - m.adjoint().eval());
}

}  // namespace lindkraus
