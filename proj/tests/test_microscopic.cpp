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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "dispatch.hpp"
#include "helpers.hpp"
#include "microscopic.hpp"

using namespace lindkraus;
using micro::SpectralFunction;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("bose occupation fixtures") {
  CHECK(micro::bose_occupation(1.0, kInf) == 0.0);
  CHECK(micro::bose_occupation(std::log(2.0), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(micro::bose_occupation(1.0, 1.0) ==
        doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(micro::bose_occupation(0.0, 1.0), Error);
  CHECK_THROWS_AS(micro::bose_occupation(-1.0, 1.0), Error);
  CHECK_THROWS_AS(micro::bose_occupation(1.0, 0.0), Error);
}

TEST_CASE("spectral function families") {
  const SpectralFunction flat = SpectralFunction::make_flat(0.7);
  CHECK(flat(2.0) == 0.7);
  CHECK(flat(-1.0) == 0.0);
  CHECK(flat(0.0) == 0.0);
  CHECK(flat.slope_at_zero() == 0.0);

  const SpectralFunction ohmic = SpectralFunction::make_ohmic(0.5, 10.0);
  CHECK(ohmic(1.0) == doctest::Approx(0.5 * std::exp(-0.1)).epsilon(1e-15));
  CHECK(ohmic(-2.0) == 0.0);
  CHECK(ohmic.slope_at_zero() == 0.5);
}

TEST_CASE("spectral rates at zero temperature only emit") {
  RealVector energies(2);
  energies << -0.5, 0.5;
  micro::ChannelSpectral spectral;
  spectral[{0, 1}] = SpectralFunction::make_flat(0.9);
  const RealMatrix rates =
      micro::rates_from_spectral(energies, spectral, kInf);
  CHECK(rates(0, 1) == 0.9);
  CHECK(rates(1, 0) == 0.0);
}

TEST_CASE("spectral rates obey detailed balance") {
  RealVector energies(3);
  energies << -1.0, 0.3, 1.0;
  micro::ChannelSpectral spectral;
  spectral[{0, 1}] = SpectralFunction::make_ohmic(0.4, 5.0);
  spectral[{1, 2}] = SpectralFunction::make_flat(1.1);
  const double beta = 0.8;
  const RealMatrix rates = micro::rates_from_spectral(energies, spectral, beta);
  const double w01 = 1.3;
  const double w12 = 0.7;
  CHECK(std::abs(rates(1, 0) / rates(0, 1) - std::exp(-beta * w01)) <=
        1e-12 * std::exp(-beta * w01));
  CHECK(std::abs(rates(2, 1) / rates(1, 2) - std::exp(-beta * w12)) <=
        1e-12 * std::exp(-beta * w12));
}

TEST_CASE("spectral rate fixture with the ohmic family") {
  RealVector energies(2);
  energies << -0.5, 0.5;
  micro::ChannelSpectral spectral;
  spectral[{0, 1}] = SpectralFunction::make_ohmic(1.0, 10.0);
  const RealMatrix rates = micro::rates_from_spectral(energies, spectral, 1.0);
  const double n = 1.0 / (std::exp(1.0) - 1.0);
  const double down = (1.0 + n) * std::exp(-0.1);
  CHECK(rates(0, 1) == doctest::Approx(down).epsilon(1e-14));
  CHECK(rates(1, 0) == doctest::Approx(n * std::exp(-0.1)).epsilon(1e-14));
}

TEST_CASE("emission lands on the lower state regardless of pair order") {
  RealVector energies(2);
  energies << 0.5, -0.5;  // state 1 is the ground state here
  micro::ChannelSpectral spectral;
  spectral[{0, 1}] = SpectralFunction::make_flat(0.6);
  const RealMatrix rates =
      micro::rates_from_spectral(energies, spectral, kInf);
  CHECK(rates(1, 0) == 0.6);
  CHECK(rates(0, 1) == 0.0);
}

TEST_CASE("degenerate pairs cannot define a channel") {
  RealVector energies(2);
  energies << 0.5, 0.5;
  micro::ChannelSpectral spectral;
  spectral[{0, 1}] = SpectralFunction::make_flat(0.6);
  CHECK_THROWS_AS(micro::rates_from_spectral(energies, spectral, kInf), Error);
}

TEST_CASE("two qubit triplet cascade with a flat reservoir") {
  const SpectralFunction flat = SpectralFunction::make_flat(0.5);
  const LindbladModel model = micro::two_qubit_triplet_model(1.0, 0.3, flat);
  CHECK(model.energies()(0) == -1.0);
  CHECK(model.energies()(1) == 0.3);
  CHECK(model.energies()(2) == 1.0);
  // Flat spectrum: both steps decay at exactly the same rate.
  CHECK(model.rates()(0, 1) == model.rates()(1, 2));
  CHECK(model.rates()(0, 1) == 1.0);
  CHECK(validate_model(model).empty());

  const LindbladModel shifted =
      micro::two_qubit_triplet_model(1.0, 0.3, flat, 0.05, -0.02);
  CHECK(shifted.energies()(1) == doctest::Approx(0.35));
  CHECK(shifted.energies()(2) == doctest::Approx(0.98));

  CHECK_THROWS_AS(micro::two_qubit_triplet_model(0.2, 0.3, flat), Error);
}

TEST_CASE("two qubit triplet with an ohmic reservoir tilts the rates") {
  const SpectralFunction ohmic = SpectralFunction::make_ohmic(0.5, 10.0);
  const LindbladModel model = micro::two_qubit_triplet_model(2.0, 0.5, ohmic);
  const double lower = 2.0 * 0.5 * 2.5 * std::exp(-0.25);
  const double upper = 2.0 * 0.5 * 1.5 * std::exp(-0.15);
  CHECK(model.rates()(0, 1) == doctest::Approx(lower).epsilon(1e-14));
  CHECK(model.rates()(1, 2) == doctest::Approx(upper).epsilon(1e-14));
}

TEST_CASE("degenerate coupling collapses the triplet transitions") {
  const SpectralFunction flat = SpectralFunction::make_flat(0.5);
  const LindbladModel model = micro::two_qubit_triplet_model(1.0, 0.0, flat);
  const auto violations = validate_model(model);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::degenerate_transition);
}

TEST_CASE("spin boson rates and dephasing") {
  const SpectralFunction longitudinal = SpectralFunction::make_ohmic(0.1, 10.0);
  const SpectralFunction transverse = SpectralFunction::make_ohmic(1.0, 10.0);
  const double beta = 2.0;
  const double omega = 1.0;
  const LindbladModel model =
      micro::spin_boson_model(omega, longitudinal, transverse, beta);

  CHECK(model.energies()(0) == -0.5);
  CHECK(model.energies()(1) == 0.5);
  REQUIRE(model.beta().has_value());
  CHECK(*model.beta() == beta);

  const double gp = model.rates()(0, 1);
  const double gm = model.rates()(1, 0);
  CHECK(std::abs(gm / gp - std::exp(-beta * omega)) <=
        1e-12 * std::exp(-beta * omega));
  CHECK(model.dephasing_rate() == doctest::Approx(0.1 / beta).epsilon(1e-14));

  // Flat longitudinal coupling has zero slope at the origin: no dephasing.
  const LindbladModel no_dephasing = micro::spin_boson_model(
      omega, SpectralFunction::make_flat(0.1), transverse, beta);
  CHECK(no_dephasing.dephasing_rate() == 0.0);

  const LindbladModel cold =
      micro::spin_boson_model(omega, longitudinal, transverse, kInf);
  CHECK(cold.rates()(1, 0) == 0.0);
  CHECK(cold.dephasing_rate() == 0.0);
}

TEST_CASE("spin boson relaxes to the gibbs state") {
  const SpectralFunction longitudinal = SpectralFunction::make_ohmic(0.2, 10.0);
  const SpectralFunction transverse = SpectralFunction::make_ohmic(0.8, 10.0);
  for (const double beta : {0.5, 1.0, 3.0}) {
    const double omega = 1.1;
    const LindbladModel model =
        micro::spin_boson_model(omega, longitudinal, transverse, beta);
    const double gb = model.rates()(0, 1) + model.rates()(1, 0);
    const DensityMatrix rho0 = DensityMatrix::uniform_superposition(2);
    const DensityMatrix out = evolve_state(model, rho0, 50.0 / gb);

    const double z = std::exp(0.5 * beta * omega) +
                     std::exp(-0.5 * beta * omega);
    CHECK(std::abs(out.mat()(0, 0).real() -
                   std::exp(0.5 * beta * omega) / z) <= 1e-6);
    CHECK(std::abs(out.mat()(1, 1).real() -
                   std::exp(-0.5 * beta * omega) / z) <= 1e-6);
  }
}
