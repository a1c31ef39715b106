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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace lindkraus {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::negative_rate: return "negative_rate";
    case ViolationKind::diagonal_rate: return "diagonal_rate";
    case ViolationKind::degenerate_energies: return "degenerate_energies";
    case ViolationKind::degenerate_transition: return "degenerate_transition";
    case ViolationKind::dephasing_unsupported: return "dephasing_unsupported";
  }
  return "unknown";
}

LindbladModel LindbladModel::create(RealVector energies, RealMatrix rates,
                                    double dephasing_rate,
                                    std::optional<double> beta) {
  const auto n = energies.size();
  if (n < 1) {
    throw Error(ErrorCode::invalid_argument, "model needs at least one level");
  }
  if (rates.rows() != n || rates.cols() != n) {
    std::ostringstream os;
    os << "rates must be " << n << "x" << n << ", got " << rates.rows() << "x"
       << rates.cols();
    throw Error(ErrorCode::dimension_mismatch, os.str());
  }
  if (!energies.allFinite() || !rates.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "non-finite model entries");
  }
  if (!std::isfinite(dephasing_rate) || dephasing_rate < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "dephasing_rate must be finite and nonnegative");
  }
  if (beta && !(*beta > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "beta must be positive");
  }

  LindbladModel model;
  model.energies_ = std::move(energies);
  model.rates_ = std::move(rates);
  model.dephasing_rate_ = dephasing_rate;
  model.beta_ = beta;
  for (Eigen::Index m = 0; m < n; ++m) {
    bool touched = false;
    for (Eigen::Index k = 0; k < n && !touched; ++k) {
      touched = model.rates_(m, k) > 0.0 || model.rates_(k, m) > 0.0;
    }
    if (touched) model.channel_set_.push_back(static_cast<int>(m));
  }
  return model;
}

bool LindbladModel::in_channel_set(int state) const {
  return std::binary_search(channel_set_.begin(), channel_set_.end(), state);
}

namespace {

std::string describe(ViolationKind kind, int i, int j, double value) {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::negative_rate:
      os << "negative rate " << value << " at (" << i << "," << j << ")";
      break;
    case ViolationKind::diagonal_rate:
      os << "nonzero diagonal rate " << value << " at state " << i;
      break;
    case ViolationKind::degenerate_energies:
      os << "degenerate energies for channel states " << i << " and " << j;
      break;
    case ViolationKind::degenerate_transition:
      os << "degenerate transition frequency " << value
         << " shared by coupled pairs (first pair " << i << "," << j << ")";
      break;
    case ViolationKind::dephasing_unsupported:
      os << "dephasing_rate > 0 requires a two-level system, got dim " << i;
      break;
  }
  return os.str();
}

}  // namespace

std::vector<Violation> validate_model(const LindbladModel& model) {
  std::vector<Violation> out;
  const RealMatrix& g = model.rates();
  const RealVector& e = model.energies();
  const int n = model.dim();

  for (int i = 0; i < n; ++i) {
    if (g(i, i) != 0.0) {
      out.push_back({ViolationKind::diagonal_rate, i, i,
                     describe(ViolationKind::diagonal_rate, i, i, g(i, i))});
    }
    for (int j = 0; j < n; ++j) {
      if (i != j && g(i, j) < 0.0) {
        out.push_back({ViolationKind::negative_rate, i, j,
                       describe(ViolationKind::negative_rate, i, j, g(i, j))});
      }
    }
  }

  const double scale = std::max(1.0, e.size() ? e.cwiseAbs().maxCoeff() : 0.0);
  const double tol = kDegeneracyRelTol * scale;

  const auto& channels = model.channel_set();
  for (std::size_t a = 0; a < channels.size(); ++a) {
    for (std::size_t b = a + 1; b < channels.size(); ++b) {
      const int i = channels[a];
      const int j = channels[b];
      if (std::abs(e[i] - e[j]) < tol) {
        out.push_back(
            {ViolationKind::degenerate_energies, i, j,
             describe(ViolationKind::degenerate_energies, i, j, 0.0)});
      }
    }
  }

  // Transition frequencies of coupled (unordered) pairs must stay apart, or
  // the secular structure behind the gamma matrices breaks down.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g(i, j) > 0.0 || g(j, i) > 0.0) pairs.emplace_back(i, j);
    }
  }
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const double wa = std::abs(e[pairs[a].first] - e[pairs[a].second]);
      const double wb = std::abs(e[pairs[b].first] - e[pairs[b].second]);
      if (std::abs(wa - wb) < tol) {
        out.push_back({ViolationKind::degenerate_transition, pairs[a].first,
                       pairs[a].second,
                       describe(ViolationKind::degenerate_transition,
                                pairs[a].first, pairs[a].second, wa)});
      }
    }
  }

  if (model.dephasing_rate() > 0.0 && n != 2) {
    out.push_back({ViolationKind::dephasing_unsupported, n, -1,
                   describe(ViolationKind::dephasing_unsupported, n, -1, 0.0)});
  }
  return out;
}

void ensure_valid(const LindbladModel& model) {
  const auto violations = validate_model(model);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "model failed validation:";
  for (const auto& v : violations) os << "\n  " << v.message;
  throw Error(ErrorCode::model_invalid, os.str());
}

}  // namespace lindkraus
