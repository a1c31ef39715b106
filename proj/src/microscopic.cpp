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

#include "microscopic.hpp"

#include <cmath>
#include <sstream>

namespace lindkraus::micro {

SpectralFunction SpectralFunction::make_flat(double g) {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw Error(ErrorCode::invalid_argument,
                "spectral coupling must be finite and nonnegative");
  }
  return {Form::flat, g, 0.0};
}

SpectralFunction SpectralFunction::make_ohmic(double g, double omega_c) {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw Error(ErrorCode::invalid_argument,
                "spectral coupling must be finite and nonnegative");
  }
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
    throw Error(ErrorCode::invalid_argument,
                "ohmic cutoff must be finite and positive");
  }
  return {Form::ohmic, g, omega_c};
}

double SpectralFunction::operator()(double omega) const {
  if (omega <= 0.0) return 0.0;
  switch (form) {
    case Form::flat:
      return g;
    case Form::ohmic:
      return g * omega * std::exp(-omega / omega_c);
  }
  return 0.0;
}

double SpectralFunction::slope_at_zero() const {
  return form == Form::ohmic ? g : 0.0;
}

double bose_occupation(double omega, double beta) {
  if (!(omega > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "bose_occupation needs omega > 0");
  }
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "beta must be positive");
  }
  if (std::isinf(beta)) return 0.0;
  return 1.0 / std::expm1(beta * omega);
}

RealMatrix rates_from_spectral(const RealVector& energies,
                               const ChannelSpectral& spectral, double beta) {
  const int n = static_cast<int>(energies.size());
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "beta must be positive");
  }
  const double tol =
      kDegeneracyRelTol *
      std::max(1.0, energies.size() ? energies.cwiseAbs().maxCoeff() : 0.0);

  RealMatrix rates = RealMatrix::Zero(n, n);
  for (const auto& [pair, gamma] : spectral) {
    const auto [a, b] = pair;
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      std::ostringstream os;
      os << "spectral channel (" << a << "," << b << ") out of range";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
    const int lo = energies[a] <= energies[b] ? a : b;
    const int hi = lo == a ? b : a;
    const double w = energies[hi] - energies[lo];
    if (w < tol) {
      std::ostringstream os;
      os << "coupled pair (" << a << "," << b
         << ") has a degenerate energy difference " << w;
      throw Error(ErrorCode::invalid_argument, os.str());
    }
    const double occupation = bose_occupation(w, beta);
    rates(lo, hi) += (1.0 + occupation) * gamma(w);  // emission
    rates(hi, lo) += occupation * gamma(w);          // absorption
  }
  return rates;
}

LindbladModel two_qubit_triplet_model(double omega, double g,
                                      const SpectralFunction& spectral,
                                      double delta1, double delta2) {
  if (!(omega > g) || !(g >= 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "two_qubit_triplet_model needs omega > g >= 0");
  }
  RealVector energies(3);
  energies << -omega, g + delta1, omega + delta2;
  RealMatrix rates = RealMatrix::Zero(3, 3);
  // One factor 2 per step: both qubits couple to the same reservoir and the
  // triplet states are symmetric combinations.
  rates(0, 1) = 2.0 * spectral(omega + g);
  rates(1, 2) = 2.0 * spectral(omega - g);
  return LindbladModel::create(std::move(energies), std::move(rates));
}

LindbladModel spin_boson_model(double omega, const SpectralFunction& spectral0,
                               const SpectralFunction& spectral1,
                               double beta) {
  if (!(omega > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "spin_boson_model needs omega > 0");
  }
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "beta must be positive");
  }
  const double occupation = bose_occupation(omega, beta);
  RealVector energies(2);
  energies << -0.5 * omega, 0.5 * omega;
  RealMatrix rates = RealMatrix::Zero(2, 2);
  rates(0, 1) = (1.0 + occupation) * spectral1(omega);  // gamma_plus
  rates(1, 0) = occupation * spectral1(omega);          // gamma_minus
  const double dephasing =
      std::isinf(beta) ? 0.0 : spectral0.slope_at_zero() / beta;
  return LindbladModel::create(std::move(energies), std::move(rates),
                               dephasing, beta);
}

}  // namespace lindkraus::micro
