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

#include <string>

#include "model.hpp"

// Model schema:
//   {
//     "energies": [e0, e1, ...],
//     "rates": [[...], ...],            entry (m, n) = jump into m from n
//     "dephasing_rate": 0.0,            optional, two-level only
//     "beta": 1.0 | "inf",              optional inverse temperature
//     "spectral": {                     alternative to "rates"
//       "form": "flat" | "ohmic",
//       "g": 1.0,
//       "omega_c": 10.0,                ohmic only
//       "pairs": [[0, 1], ...]          optional, default every pair
//     }
//   }
// Exactly one of "rates" and "spectral" must be present; spectral input is
// resolved to a rate matrix at parse time using "beta" (default infinity).
namespace lindkraus::io {

std::string model_to_json(const LindbladModel& model);

// Throws Error{parse_error} on malformed input, including unknown keys.
LindbladModel model_from_json(const std::string& text);

}  // namespace lindkraus::io
