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

#include "model_json.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "microscopic.hpp"

namespace lindkraus::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::parse_error, "model JSON: " + what);
}

double number_at(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) fail("\"" + key + "\" must be a number");
  return j.at(key).get<double>();
}

double parse_beta(const json& j) {
  const json& b = j.at("beta");
  if (b.is_string()) {
    if (b.get<std::string>() == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    fail("\"beta\" must be a positive number or \"inf\"");
  }
  if (!b.is_number()) fail("\"beta\" must be a positive number or \"inf\"");
  const double beta = b.get<double>();
  if (!(beta > 0.0)) fail("\"beta\" must be positive");
  return beta;
}

micro::SpectralFunction parse_spectral(const json& spec) {
  if (!spec.is_object()) fail("\"spectral\" must be an object");
  for (const auto& [key, value] : spec.items()) {
    (void)value;
    if (key != "form" && key != "g" && key != "omega_c" && key != "pairs") {
      fail("unknown spectral key \"" + key + "\"");
    }
  }
  if (!spec.contains("form") || !spec.at("form").is_string()) {
    fail("\"spectral.form\" must be \"flat\" or \"ohmic\"");
  }
  const std::string form = spec.at("form").get<std::string>();
  if (!spec.contains("g")) fail("\"spectral.g\" is required");
  const double g = number_at(spec, "g");
  if (form == "flat") {
    return micro::SpectralFunction::make_flat(g);
  }
  if (form == "ohmic") {
    if (!spec.contains("omega_c")) {
      fail("\"spectral.omega_c\" is required for the ohmic form");
    }
    return micro::SpectralFunction::make_ohmic(g, number_at(spec, "omega_c"));
  }
  fail("\"spectral.form\" must be \"flat\" or \"ohmic\"");
}

}  // namespace

LindbladModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  try {
    if (!j.is_object()) fail("top level must be an object");
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "energies" && key != "rates" && key != "dephasing_rate" &&
          key != "beta" && key != "spectral") {
        fail("unknown key \"" + key + "\"");
      }
    }
    if (!j.contains("energies") || !j.at("energies").is_array() ||
        j.at("energies").empty()) {
      fail("\"energies\" must be a non-empty array");
    }
    const int n = static_cast<int>(j.at("energies").size());
    RealVector energies(n);
    for (int i = 0; i < n; ++i) {
      if (!j.at("energies")[i].is_number()) {
        fail("\"energies\" entries must be numbers");
      }
      energies[i] = j.at("energies")[i].get<double>();
    }

    const bool has_rates = j.contains("rates");
    const bool has_spectral = j.contains("spectral");
    if (has_rates == has_spectral) {
      fail("exactly one of \"rates\" and \"spectral\" is required");
    }

    std::optional<double> beta;
    if (j.contains("beta")) beta = parse_beta(j);

    RealMatrix rates;
    if (has_rates) {
      const json& r = j.at("rates");
      if (!r.is_array() || static_cast<int>(r.size()) != n) {
        fail("\"rates\" must be an array of " + std::to_string(n) + " rows");
      }
      rates.resize(n, n);
      for (int m = 0; m < n; ++m) {
        if (!r[m].is_array() || static_cast<int>(r[m].size()) != n) {
          fail("\"rates\" rows must have " + std::to_string(n) + " entries");
        }
        for (int k = 0; k < n; ++k) {
          if (!r[m][k].is_number()) fail("\"rates\" entries must be numbers");
          rates(m, k) = r[m][k].get<double>();
        }
      }
    } else {
      const micro::SpectralFunction spectral = parse_spectral(j.at("spectral"));
      micro::ChannelSpectral channels;
      const json& spec = j.at("spectral");
      if (spec.contains("pairs")) {
        if (!spec.at("pairs").is_array()) fail("\"spectral.pairs\" must be an array");
        for (const json& p : spec.at("pairs")) {
          if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
              !p[1].is_number_integer()) {
            fail("\"spectral.pairs\" entries must be [m, n] index pairs");
          }
          int a = p[0].get<int>();
          int b = p[1].get<int>();
          if (a > b) std::swap(a, b);
          channels[{a, b}] = spectral;
        }
      } else {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) channels[{a, b}] = spectral;
        }
      }
      const double resolved_beta =
          beta ? *beta : std::numeric_limits<double>::infinity();
      rates = micro::rates_from_spectral(energies, channels, resolved_beta);
      if (!beta) beta = resolved_beta;
    }

    double dephasing = 0.0;
    if (j.contains("dephasing_rate")) {
      dephasing = number_at(j, "dephasing_rate");
    }
    return LindbladModel::create(std::move(energies), std::move(rates),
                                 dephasing, beta);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

std::string model_to_json(const LindbladModel& model) {
  json j;
  j["energies"] = json::array();
  for (int i = 0; i < model.dim(); ++i) {
    j["energies"].push_back(model.energies()[i]);
  }
  j["rates"] = json::array();
  for (int m = 0; m < model.dim(); ++m) {
    json row = json::array();
    for (int n = 0; n < model.dim(); ++n) row.push_back(model.rates()(m, n));
    j["rates"].push_back(std::move(row));
  }
  j["dephasing_rate"] = model.dephasing_rate();
  if (model.beta()) {
    if (std::isinf(*model.beta())) {
      j["beta"] = "inf";
    } else {
      j["beta"] = *model.beta();
    }
  }
  return j.dump(2);
}

}  // namespace lindkraus::io
