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

#include "choi.hpp"

#include <cmath>
#include <sstream>

#include "linalg.hpp"

namespace lindkraus::kraus {

Matrix choi_matrix(const MatrixMap& map, int dim) {
  if (dim < 1) {
    throw Error(ErrorCode::invalid_argument, "choi_matrix needs dim >= 1");
  }
  Matrix choi(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Matrix e = Matrix::Zero(dim, dim);
      e(i, j) = 1.0;
      choi.block(i * dim, j * dim, dim, dim) = map(e);
    }
  }
  return choi;
}

KrausSet kraus_from_choi(const Matrix& choi) {
  const Eigen::Index sq = choi.rows();
  const int n = static_cast<int>(std::lround(std::sqrt(double(sq))));
  if (choi.cols() != sq || Eigen::Index(n) * n != sq) {
    throw Error(ErrorCode::dimension_mismatch,
                "choi matrix must be square with a square dimension");
  }
  const linalg::HermitianEigs eigs = linalg::hermitian_eigs(choi);
  if (eigs.values.minCoeff() < -kChoiNegativityTol) {
    std::ostringstream os;
    os << "choi eigenvalue " << eigs.values.minCoeff()
       << "; the map is not completely positive";
    throw Error(ErrorCode::not_completely_positive, os.str());
  }

  KrausSet set;
  set.dim = n;
  // Largest weight first; tiny and slightly negative eigenvalues are noise.
  for (Eigen::Index k = sq - 1; k >= 0; --k) {
    const double lambda = eigs.values[k];
    if (lambda <= kChoiRankTol) break;
    const Vector col = std::sqrt(lambda) * eigs.vectors.col(k);
    set.operators.push_back({1.0, linalg::unvec(col, n)});
  }
  set.completeness_residual = completeness_residual(set);
  return set;
}

}  // namespace lindkraus::kraus
