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

#include <cmath>

#include "linalg.hpp"

namespace lindkraus::linalg {

namespace {

// Pade(13,13) numerator coefficients, Higham's scaling-and-squaring values.
constexpr double kB[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

// Largest 1-norm handled by the (13,13) approximant without scaling.
constexpr double kTheta13 = 5.371920351148152;

double one_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

ExpmResult expm_result(const Matrix& m, double t) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "expm needs a square matrix");
  }
  if (!m.allFinite() || !std::isfinite(t)) {
    throw Error(ErrorCode::invalid_argument, "expm needs finite input");
  }
  const Eigen::Index d = m.rows();
  const Matrix id = Matrix::Identity(d, d);

  Matrix a = m * t;
  const double eta = one_norm(a);
  int squarings = 0;
  if (eta > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(eta / kTheta13)));
    a *= std::exp2(double(-squarings));
  }

  ExpmResult out;
  out.scaling_squarings = squarings;
  {
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    Matrix u;
    {
      Matrix w = kB[13] * a6 + kB[11] * a4 + kB[9] * a2;
      w = a6 * w;
      w += kB[7] * a6 + kB[5] * a4 + kB[3] * a2 + kB[1] * id;
      u = a * w;
    }
    Matrix v = kB[12] * a6 + kB[10] * a4 + kB[8] * a2;
    v = a6 * v;
    v += kB[6] * a6 + kB[4] * a4 + kB[2] * a2 + kB[0] * id;

    // (V - U) R = V + U, the rational approximant of e^a.
    Matrix vmu = v - u;
    v += u;
    out.value = vmu.partialPivLu().solve(v);
  }
  for (int k = 0; k < squarings; ++k) {
    out.value = out.value * out.value;
  }
  return out;
}

Matrix expm_integral(const Matrix& m, double t) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch,
                "expm_integral needs a square matrix");
  }
  if (t < 0.0) {
    throw Error(ErrorCode::invalid_argument, "expm_integral needs t >= 0");
  }
  const Eigen::Index d = m.rows();
  Matrix block = Matrix::Zero(2 * d, 2 * d);
  block.topLeftCorner(d, d) = m;
  block.topRightCorner(d, d) = Matrix::Identity(d, d);
  return expm(block, t).topRightCorner(d, d);
}

}  // namespace lindkraus::linalg
