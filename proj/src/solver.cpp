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

#include "solver.hpp"

#include <cmath>
#include <sstream>

#include "linalg.hpp"

namespace lindkraus::kraus {

namespace {

void require_no_dephasing(const LindbladModel& model) {
  if (model.dephasing_rate() > 0.0) {
    throw Error(ErrorCode::unsupported,
                "the jump solver handles rate channels only; route dephasing "
                "models through the two-level closed form");
  }
}

GammaMatrix build_gamma(const LindbladModel& model, int m) {
  const auto& states = model.channel_set();
  const int k = static_cast<int>(states.size());
  const RealMatrix& g = model.rates();

  // Total escape rate of a state: column sum of the rate matrix. Rates only
  // connect channel states, so summing every row equals summing over I.
  const RealVector escape = g.colwise().sum();

  GammaMatrix out;
  out.target = m;
  out.states = states;
  out.mat.resize(k, k);
  for (int a = 0; a < k; ++a) {
    const int n = states[a];
    for (int b = 0; b < k; ++b) {
      const int np = states[b];
      double entry = g(n, np);
      if (a == b) entry += escape[m] - escape[n];
      out.mat(a, b) = entry;
    }
  }
  return out;
}

}  // namespace

EffectiveGenerator effective_generator(const LindbladModel& model) {
  ensure_valid(model);
  require_no_dephasing(model);
  const RealVector escape = model.rates().colwise().sum();
  EffectiveGenerator gen;
  gen.complex_energies.resize(model.dim());
  for (int n = 0; n < model.dim(); ++n) {
    gen.complex_energies[n] = Complex(model.energies()[n], -0.5 * escape[n]);
  }
  return gen;
}

GammaMatrix gamma_matrix(const LindbladModel& model, int m) {
  ensure_valid(model);
  if (!model.in_channel_set(m)) {
    std::ostringstream os;
    os << "state " << m << " is not in the channel set";
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  return build_gamma(model, m);
}

JumpCoefficients jump_coefficients(const LindbladModel& model, double t) {
  ensure_valid(model);
  require_no_dephasing(model);
  if (t < 0.0) {
    throw Error(ErrorCode::invalid_argument, "jump coefficients need t >= 0");
  }
  const auto& states = model.channel_set();
  const int k = static_cast<int>(states.size());
  const RealMatrix& g = model.rates();
  const RealVector escape = g.colwise().sum();

  JumpCoefficients jc;
  jc.time = t;
  jc.states = states;
  jc.coeffs = RealMatrix::Zero(k, k);

  for (int a = 0; a < k; ++a) {
    const int m = states[a];
    const GammaMatrix gamma = build_gamma(model, m);
    // Complex arithmetic on a real matrix keeps imaginary parts exactly
    // zero, so taking the real part is lossless.
    const RealMatrix integral =
        linalg::expm_integral(gamma.mat.cast<Complex>(), t).real();
    // Back to the Schrodinger picture: the jump outcome |m><m| picks up the
    // no-jump decay of state m.
    const double decay = std::exp(-escape[m] * t);
    for (int b = 0; b < k; ++b) {
      double c = 0.0;
      for (int idx = 0; idx < k; ++idx) {
        c += g(m, states[idx]) * integral(idx, b);
      }
      c *= decay;
      if (c < 0.0) {
        if (c < -kJumpCoeffNegTol) {
          std::ostringstream os;
          os << "jump coefficient c(" << m << "," << states[b] << ") = " << c
             << " at t = " << t << "; the map is not completely positive";
          throw Error(ErrorCode::not_completely_positive, os.str());
        }
        c = 0.0;
      }
      jc.coeffs(a, b) = c;
    }
  }
  return jc;
}

Matrix evolve_matrix(const LindbladModel& model, const Matrix& rho0,
                     double t) {
  const int n = model.dim();
  if (rho0.rows() != n || rho0.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch,
                "state dimension does not match the model");
  }
  const EffectiveGenerator gen = effective_generator(model);
  if (t < 0.0) {
    throw Error(ErrorCode::invalid_argument, "evolve needs t >= 0");
  }

  Vector phases(n);
  for (int j = 0; j < n; ++j) {
    phases[j] = std::exp(Complex(0.0, -1.0) * gen.complex_energies[j] * t);
  }
  Matrix out = phases.asDiagonal() * rho0 * phases.adjoint().asDiagonal();

  // X_{mn'} rho X_{mn'}^dag = rho_{n'n'} |m><m|: jumps only move diagonal
  // weight around.
  const JumpCoefficients jc = jump_coefficients(model, t);
  const int k = static_cast<int>(jc.states.size());
  for (int a = 0; a < k; ++a) {
    Complex gain = 0.0;
    for (int b = 0; b < k; ++b) {
      gain += jc.coeffs(a, b) * rho0(jc.states[b], jc.states[b]);
    }
    out(jc.states[a], jc.states[a]) += gain;
  }
  return out;
}

DensityMatrix evolve(const LindbladModel& model, const DensityMatrix& rho0,
                     double t) {
  return DensityMatrix::create(evolve_matrix(model, rho0.mat(), t));
}

KrausSet kraus_set(const LindbladModel& model, double t) {
  const EffectiveGenerator gen = effective_generator(model);
  const JumpCoefficients jc = jump_coefficients(model, t);
  const int n = model.dim();

  KrausSet set;
  set.dim = n;

  Matrix no_jump = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    no_jump(j, j) = std::exp(Complex(0.0, -1.0) * gen.complex_energies[j] * t);
  }
  set.operators.push_back({1.0, std::move(no_jump)});

  const int k = static_cast<int>(jc.states.size());
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const double c = jc.coeffs(a, b);
      if (c > 0.0) {
        Matrix op = Matrix::Zero(n, n);
        op(jc.states[a], jc.states[b]) = std::sqrt(c);
        set.operators.push_back({1.0, std::move(op)});
      }
    }
  }
  set.completeness_residual = completeness_residual(set);
  return set;
}

double completeness_residual(const KrausSet& set) {
  Matrix sum = Matrix::Zero(set.dim, set.dim);
  for (const auto& [weight, op] : set.operators) {
    sum += weight * (op.adjoint() * op);
  }
  return max_abs(sum - Matrix::Identity(set.dim, set.dim));
}

}  // namespace lindkraus::kraus
