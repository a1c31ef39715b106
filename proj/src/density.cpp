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

#include "density.hpp"

#include <cmath>
#include <sstream>

namespace lindkraus {

DensityMatrix DensityMatrix::create(Matrix mat, double hermitian_tol,
                                    double trace_tol, double positivity_tol) {
  if (mat.rows() != mat.cols() || mat.rows() < 1) {
    throw Error(ErrorCode::dimension_mismatch, "density matrix must be square");
  }
  if (!mat.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "non-finite density entries");
  }
  const double herm = hermiticity_residual(mat);
  if (herm > hermitian_tol) {
    std::ostringstream os;
    os << "density matrix not Hermitian, residual " << herm;
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  const double trace_dev = std::abs(mat.trace() - Complex(1.0, 0.0));
  if (trace_dev > trace_tol) {
    std::ostringstream os;
    os << "density matrix trace deviates from 1 by " << trace_dev;
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mat,
                                               Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -positivity_tol) {
    std::ostringstream os;
    os << "density matrix indefinite, min eigenvalue " << min_eig;
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  return DensityMatrix(std::move(mat));
}

DensityMatrix DensityMatrix::basis_state(int dim, int k) {
  if (dim < 1 || k < 0 || k >= dim) {
    throw Error(ErrorCode::invalid_argument, "basis index out of range");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_argument, "dim must be >= 1");
  return DensityMatrix(Matrix::Identity(dim, dim) / double(dim));
}

DensityMatrix DensityMatrix::uniform_superposition(int dim) {
  if (dim < 1) throw Error(ErrorCode::invalid_argument, "dim must be >= 1");
  return DensityMatrix(Matrix::Constant(dim, dim, 1.0 / double(dim)));
}

StateDiagnostics state_diagnostics(const Matrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "state must be square");
  }
  StateDiagnostics d;
  d.trace_deviation = std::abs(rho.trace() - Complex(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  d.purity = (rho * rho).trace().real();
  return d;
}

}  // namespace lindkraus
