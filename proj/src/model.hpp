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

#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace lindkraus {

enum class ViolationKind {
  negative_rate,
  diagonal_rate,
  degenerate_energies,
  degenerate_transition,
  dephasing_unsupported,
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int i = -1;
  int j = -1;
  std::string message;
};

// Finite-level model in the system eigenbasis.
//
// Rate orientation: rates(m, n) is the rate of the jump |n> -> |m|, i.e. INTO
// m FROM n. Column n collects everything leaving state n, row m everything
// arriving at m. A misread here flips the dynamics, so read twice.
class LindbladModel {
 public:
  // Structural checks only (shapes, finiteness, sign of dephasing). Semantic
  // problems such as negative rates are reported by validate_model instead,
  // so that diagnostics can be run on deliberately broken inputs.
  static LindbladModel create(RealVector energies, RealMatrix rates,
                              double dephasing_rate = 0.0,
                              std::optional<double> beta = std::nullopt);

  int dim() const { return static_cast<int>(energies_.size()); }
  const RealVector& energies() const { return energies_; }
  const RealMatrix& rates() const { return rates_; }
  double dephasing_rate() const { return dephasing_rate_; }

  // States touched by any nonzero rate, ascending. This is the index set the
  // jump machinery works on; everything outside it evolves unitarily.
  const std::vector<int>& channel_set() const { return channel_set_; }
  bool in_channel_set(int state) const;

  // Inverse temperature, carried as metadata when the model came out of a
  // thermal construction. Not used by the solvers.
  const std::optional<double>& beta() const { return beta_; }

 private:
  LindbladModel() = default;

  RealVector energies_;
  RealMatrix rates_;
  double dephasing_rate_ = 0.0;
  std::vector<int> channel_set_;
  std::optional<double> beta_;
};

// Diagnostic pass, side-effect free. Reports negative rates, nonzero diagonal
// rates, degenerate energies within the channel set, degenerate transition
// frequencies among coupled pairs, and dephasing on dimensions other than 2.
std::vector<Violation> validate_model(const LindbladModel& model);

// Throws Error{model_invalid} with a joined report when validation fails.
void ensure_valid(const LindbladModel& model);

}  // namespace lindkraus
