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

#include "random_model.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace lindkraus {

LindbladModel random_model(std::uint64_t seed, int dim, int channels) {
  if (dim < 2) {
    throw Error(ErrorCode::invalid_argument, "random model needs dim >= 2");
  }
  const int max_channels = dim * (dim - 1);
  if (channels < 1 || channels > max_channels) {
    throw Error(ErrorCode::invalid_argument, "channel count out of range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> energy(-5.0, 5.0);
  std::uniform_real_distribution<double> rate(0.1, 2.0);

  // Continuous draws are almost never degenerate; the loop handles the rest.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RealVector energies(dim);
    for (int i = 0; i < dim; ++i) energies[i] = energy(rng);

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(max_channels);
    for (int m = 0; m < dim; ++m) {
      for (int n = 0; n < dim; ++n) {
        if (m != n) pairs.emplace_back(m, n);
      }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);

    RealMatrix rates = RealMatrix::Zero(dim, dim);
    for (int k = 0; k < channels; ++k) {
      rates(pairs[k].first, pairs[k].second) = rate(rng);
    }

    LindbladModel model = LindbladModel::create(energies, rates);
    if (validate_model(model).empty()) return model;
  }
  throw Error(ErrorCode::invalid_argument,
              "could not draw a valid random model");
}

DensityMatrix random_density(std::uint64_t seed, int dim) {
  if (dim < 1) {
    throw Error(ErrorCode::invalid_argument, "random state needs dim >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityMatrix::create(std::move(rho));
}

}  // namespace lindkraus
