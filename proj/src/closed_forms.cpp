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

#include "closed_forms.hpp"

#include <cmath>
#include <functional>

namespace lindkraus::closed {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix sigma_z() {
  Matrix m(2, 2);
  m << -1.0, 0.0, 0.0, 1.0;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

void check_params(const TwoLevelParams& p) {
  if (!(std::isfinite(p.omega) && std::isfinite(p.gamma_plus) &&
        std::isfinite(p.gamma_minus) && std::isfinite(p.gamma_0))) {
    throw Error(ErrorCode::invalid_argument, "non-finite two-level params");
  }
  if (p.gamma_plus < 0.0 || p.gamma_minus < 0.0 || p.gamma_0 < 0.0) {
    throw Error(ErrorCode::invalid_argument, "negative rate");
  }
}

void check_time(double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "closed forms need t >= 0");
  }
}

// The five-term thermal solution, written exactly as displayed: it acts on
// arbitrary 2x2 input, which also gives the linear map for free.
Matrix two_level_apply(const TwoLevelParams& p, const Matrix& rho0,
                       double t) {
  const double gb = p.gamma_beta();
  const double decay = std::exp(-gb * t);
  const double half_decay = std::exp(-0.5 * gb * t);
  const double c = half_decay * std::cos(p.omega * t);
  const double s = half_decay * std::sin(p.omega * t);
  const double r = gb > 0.0 ? p.gamma() / gb : 0.0;

  const Complex f_id = 0.25 * (1.0 + decay + 2.0 * c);
  const Complex f_zz = 0.25 * (1.0 + decay - 2.0 * c);
  const Complex f_rho_z = -0.25 * (r * (1.0 - decay) - 2.0 * kI * s);
  const Complex f_z_rho = -0.25 * (r * (1.0 - decay) + 2.0 * kI * s);
  const double f_mp = gb > 0.0 ? (1.0 - decay) * p.gamma_plus / gb : 0.0;
  const double f_pm = gb > 0.0 ? (1.0 - decay) * p.gamma_minus / gb : 0.0;

  const Matrix sz = sigma_z();
  const Matrix sm = sigma_minus();
  const Matrix sp = sigma_plus();

  Matrix out = f_id * rho0;
  out += f_zz * (sz * rho0 * sz);
  out += f_rho_z * (rho0 * sz);
  out += f_z_rho * (sz * rho0);
  out += f_mp * (sm * rho0 * sp);
  out += f_pm * (sp * rho0 * sm);
  return out;
}

}  // namespace

DensityMatrix three_level_solution(double e0, double e1, double e2,
                                   double gamma, const DensityMatrix& rho0,
                                   double t) {
  if (!(gamma >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "gamma must be nonnegative");
  }
  check_time(t);
  if (rho0.dim() != 3) {
    throw Error(ErrorCode::dimension_mismatch,
                "three_level_solution needs a 3x3 state");
  }

  const double gt = gamma * t;
  const double decay = std::exp(-gt);
  // The three jump weights; they add up to 1 - e^{-gt} - ... + e^{-gt} = 1
  // together with the surviving population.
  const double c01 = 1.0 - decay;
  const double c12 = gt * decay;
  const double c02 = 1.0 - decay - gt * decay;

  Vector phases(3);
  phases << std::exp(-kI * e0 * t),
      std::exp((-kI * e1 - 0.5 * gamma) * t),
      std::exp((-kI * e2 - 0.5 * gamma) * t);

  const Matrix& r = rho0.mat();
  Matrix out = phases.asDiagonal() * r * phases.adjoint().asDiagonal();
  out(0, 0) += c01 * r(1, 1) + c02 * r(2, 2);
  out(1, 1) += c12 * r(2, 2);
  return DensityMatrix::create(std::move(out));
}

DensityMatrix two_level_solution(const TwoLevelParams& params,
                                 const DensityMatrix& rho0, double t) {
  check_params(params);
  check_time(t);
  if (rho0.dim() != 2) {
    throw Error(ErrorCode::dimension_mismatch,
                "two_level_solution needs a 2x2 state");
  }
  return DensityMatrix::create(two_level_apply(params, rho0.mat(), t));
}

Matrix two_level_dephasing_map(const TwoLevelParams& p, const Matrix& rho0,
                               double t) {
  check_params(p);
  check_time(t);
  if (rho0.rows() != 2 || rho0.cols() != 2) {
    throw Error(ErrorCode::dimension_mismatch,
                "the dephasing map acts on 2x2 matrices");
  }

  const double gb = p.gamma_beta();
  const double g0 = p.gamma_0;

  // A = -(gb + 2 g0)/4 - (gamma + 2 i Omega)/4 sigma_z, diagonal.
  const Complex a00 =
      -0.25 * (gb + 2.0 * g0) + 0.25 * Complex(p.gamma(), 2.0 * p.omega);
  const Complex a11 =
      -0.25 * (gb + 2.0 * g0) - 0.25 * Complex(p.gamma(), 2.0 * p.omega);
  Vector phases(2);
  phases << std::exp(a00 * t), std::exp(a11 * t);

  const Matrix b = phases.asDiagonal() * rho0 * phases.adjoint().asDiagonal();
  const Matrix sz = sigma_z();

  Matrix out = std::cosh(g0 * t) * b + std::sinh(g0 * t) * (sz * b * sz);

  if (gb > 0.0) {
    const double decay = std::exp(-gb * t);
    const Matrix sm = sigma_minus();
    const Matrix sp = sigma_plus();
    const Matrix pg = sm * sp;  // |0><0|
    const Matrix pe = sp * sm;  // |1><1|

    const double gp = p.gamma_plus;
    const double gm = p.gamma_minus;
    out += (gp * (1.0 - decay) / gb) * (sm * rho0 * sp);
    out += ((gp + gm * decay - gb * std::exp(-gm * t)) / gb) *
           (pg * rho0 * pg);
    out += (gm * (1.0 - decay) / gb) * (sp * rho0 * sm);
    out += ((gm + gp * decay - gb * std::exp(-gp * t)) / gb) *
           (pe * rho0 * pe);
  }
  return out;
}

DensityMatrix two_level_dephasing_solution(const TwoLevelParams& params,
                                           const DensityMatrix& rho0,
                                           double t) {
  return DensityMatrix::create(
      two_level_dephasing_map(params, rho0.mat(), t));
}

bool superop_p_algebra_check() {
  const Matrix sz = sigma_z();
  const Matrix sm = sigma_minus();
  const Matrix sp = sigma_plus();

  using Map = std::function<Matrix(const Matrix&)>;
  const Map pz = [&](const Matrix& r) { return Matrix(sz * r * sz); };
  const Map pp = [&](const Matrix& r) { return Matrix(sp * r * sm); };
  const Map pm = [&](const Matrix& r) { return Matrix(sm * r * sp); };
  const Map zero = [](const Matrix&) { return Matrix::Zero(2, 2).eval(); };
  const Map id = [](const Matrix& r) { return r; };

  const auto agree = [&](const Map& lhs, const Map& rhs) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Matrix e = Matrix::Zero(2, 2);
        e(i, j) = 1.0;
        if (max_abs(lhs(e) - rhs(e)) > 1e-14) return false;
      }
    }
    return true;
  };
  const auto compose = [](const Map& f, const Map& g) {
    return Map([f, g](const Matrix& r) { return f(g(r)); });
  };

  return agree(compose(pz, pz), id) && agree(compose(pp, pp), zero) &&
         agree(compose(pm, pm), zero) && agree(compose(pz, pp), pp) &&
         agree(compose(pp, pz), pp) && agree(compose(pz, pm), pm) &&
         agree(compose(pm, pz), pm) &&
         agree(compose(pm, compose(pp, pm)), pm) &&
         agree(compose(pp, compose(pm, pp)), pp);
}

}  // namespace lindkraus::closed
