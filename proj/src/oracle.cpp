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

#include "oracle.hpp"

#include <atomic>
#include <sstream>

#include "linalg.hpp"

namespace lindkraus::oracle {

namespace {

std::atomic<std::uint64_t> g_build_count{0};

}  // namespace

std::uint64_t superop_build_count() { return g_build_count.load(); }

Superoperator liouvillian(const LindbladModel& model) {
  g_build_count.fetch_add(1);

  const int n = model.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix h = model.energies().cast<Complex>().asDiagonal();

  // Column stacking turns X rho Y into (Y^T kron X) vec(rho).
  Matrix l = Complex(0.0, -1.0) *
             (linalg::kron(id, h) - linalg::kron(h.transpose(), id));

  const RealMatrix& g = model.rates();
  for (int m = 0; m < n; ++m) {
    for (int src = 0; src < n; ++src) {
      const double rate = g(m, src);
      if (rate == 0.0) continue;
      Matrix x = Matrix::Zero(n, n);
      x(m, src) = 1.0;
      const Matrix xdx = x.adjoint() * x;
      l += rate * linalg::kron(x.conjugate(), x);
      l -= 0.5 * rate * linalg::kron(id, xdx);
      l -= 0.5 * rate * linalg::kron(xdx.transpose(), id);
    }
  }

  if (model.dephasing_rate() > 0.0) {
    if (n != 2) {
      throw Error(ErrorCode::unsupported,
                  "dephasing is only defined for two-level models");
    }
    Matrix sz(2, 2);
    sz << -1.0, 0.0, 0.0, 1.0;
    l += model.dephasing_rate() *
         (linalg::kron(sz, sz) - Matrix::Identity(4, 4));
  }
  return {n, std::move(l)};
}

Matrix oracle_evolve_matrix(const LindbladModel& model, const Matrix& rho0,
                            double t, int max_dim) {
  const int n = model.dim();
  if (rho0.rows() != n || rho0.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch,
                "state dimension does not match the model");
  }
  if (t < 0.0) {
    throw Error(ErrorCode::invalid_argument, "oracle needs t >= 0");
  }
  if (n > max_dim) {
    std::ostringstream os;
    os << "oracle dimension " << n << " exceeds the limit " << max_dim
       << " (raise max_dim to opt in; memory grows as N^4)";
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  const Superoperator l = liouvillian(model);
  const Vector v = linalg::expm(l.mat, t) * linalg::vec(rho0);
  return linalg::unvec(v, n);
}

DensityMatrix oracle_evolve(const LindbladModel& model,
                            const DensityMatrix& rho0, double t,
                            int max_dim) {
  ensure_valid(model);
  Matrix out = oracle_evolve_matrix(model, rho0.mat(), t, max_dim);
  return DensityMatrix::create(std::move(out), 1e-9, 1e-9, 1e-9);
}

}  // namespace lindkraus::oracle
