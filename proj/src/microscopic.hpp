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

#include <map>
#include <utility>

#include "model.hpp"
#include "types.hpp"

// Rate matrices from microscopic reservoir data: an on-shell coupling
// strength per channel and a temperature. Only two parametric spectral
// families are supported; both have analytic values and slopes, so no
// delta-function integrals ever need to be done numerically.
namespace lindkraus::micro {

struct SpectralFunction {
  enum class Form { flat, ohmic };

  Form form = Form::flat;
  double g = 0.0;        // coupling strength, rate units
  double omega_c = 0.0;  // ohmic cutoff, ignored for flat

  static SpectralFunction make_flat(double g);
  static SpectralFunction make_ohmic(double g, double omega_c);

  // Zero for omega <= 0: the reservoir has no negative-frequency modes.
  double operator()(double omega) const;

  // Right derivative at 0, which is what the dephasing rate needs.
  double slope_at_zero() const;
};

// Mean thermal occupation 1/(e^{beta omega} - 1). beta may be infinity
// (zero temperature, returns 0). Requires omega > 0.
double bose_occupation(double omega, double beta);

using ChannelSpectral = std::map<std::pair<int, int>, SpectralFunction>;

// Emission and absorption rates for each coupled pair:
// downhill (1 + N(w)) Gamma(w), uphill N(w) Gamma(w), with w the positive
// level splitting of the pair. Detailed balance holds by construction.
RealMatrix rates_from_spectral(const RealVector& energies,
                               const ChannelSpectral& spectral, double beta);

// Triplet sector of two coupled qubits in a shared zero-temperature
// reservoir: energies (-omega, g + delta1, omega + delta2), decay
// 2 Gamma(omega + g) on the lower step and 2 Gamma(omega - g) on the upper.
// The singlet state is dark and not part of the model. Requires omega > g.
LindbladModel two_qubit_triplet_model(double omega, double g,
                                      const SpectralFunction& spectral,
                                      double delta1 = 0.0,
                                      double delta2 = 0.0);

// Spin-boson system at inverse temperature beta: thermal rates from
// spectral1 on the splitting, plus pure dephasing
// gamma_0 = spectral0'(0+) / beta from the longitudinal coupling.
LindbladModel spin_boson_model(double omega, const SpectralFunction& spectral0,
                               const SpectralFunction& spectral1, double beta);

}  // namespace lindkraus::micro
