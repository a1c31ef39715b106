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

namespace lindkraus::linalg {

struct ExpmResult {
  Matrix value;
  int scaling_squarings;  // diagnostic, number of squaring steps
};

// e^{Mt} by Pade order-13 scaling and squaring. Deliberately not an
// eigendecomposition: the gamma matrices this library lives on are often
// defective (not diagonalizable), sometimes singular.
ExpmResult expm_result(const Matrix& m, double t);

inline Matrix expm(const Matrix& m, double t) {
  return expm_result(m, t).value;
}

// int_0^t e^{Ms} ds via the augmented block trick: exp([[M,1],[0,0]] t) has
// the integral as its upper right block. Exact for singular and defective M,
// where M^{-1}(e^{Mt}-1) is unavailable.
Matrix expm_integral(const Matrix& m, double t);

// Column stacking. vec([[a,b],[c,d]]) = (a,c,b,d).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int n);

Matrix kron(const Matrix& a, const Matrix& b);

struct HermitianEigs {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};

// Rejects inputs farther than 1e-10 from Hermitian.
HermitianEigs hermitian_eigs(const Matrix& m);

}  // namespace lindkraus::linalg
