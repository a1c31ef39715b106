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

#include "linalg.hpp"

#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace lindkraus::linalg {

Vector vec(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "vec needs a square matrix");
  }
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int n) {
  if (n < 1 || v.size() != Eigen::Index(n) * n) {
    std::ostringstream os;
    os << "unvec needs a length " << n << "*" << n << " vector, got "
       << v.size();
    throw Error(ErrorCode::dimension_mismatch, os.str());
  }
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

HermitianEigs hermitian_eigs(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch,
                "hermitian_eigs needs a square matrix");
  }
  const double herm = hermiticity_residual(m);
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "hermitian_eigs given a non-Hermitian matrix, residual " << herm;
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::invalid_argument, "eigen decomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace lindkraus::linalg
