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

#include <cstdint>

#include "density.hpp"
#include "model.hpp"

namespace lindkraus {

// Deterministic valid model for a given seed: random nondegenerate energies
// and `channels` distinct jump pairs with rates in [0.1, 2]. Used by the
// benchmark and by randomized tests.
LindbladModel random_model(std::uint64_t seed, int dim, int channels);

// Deterministic random full-rank state, G G^dag normalized.
DensityMatrix random_density(std::uint64_t seed, int dim);

}  // namespace lindkraus
