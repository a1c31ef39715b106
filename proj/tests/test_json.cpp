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

#include "helpers.hpp"
#include "microscopic.hpp"
#include "model_json.hpp"

using namespace lindkraus;

TEST_CASE("model json round trip") {
  RealVector energies(2);
  energies << -0.5, 0.5;
  RealMatrix rates = RealMatrix::Zero(2, 2);
  rates(0, 1) = 1.25;
  rates(1, 0) = 0.375;
  const LindbladModel model = LindbladModel::create(energies, rates, 0.5, 2.0);

  const std::string text = io::model_to_json(model);
  const LindbladModel back = io::model_from_json(text);
  CHECK(back.dim() == 2);
  CHECK(back.energies()(0) == -0.5);
  CHECK(back.energies()(1) == 0.5);
  CHECK(back.rates()(0, 1) == 1.25);
  CHECK(back.rates()(1, 0) == 0.375);
  CHECK(back.dephasing_rate() == 0.5);
  REQUIRE(back.beta().has_value());
  CHECK(*back.beta() == 2.0);

  // Serialization is deterministic.
  CHECK(io::model_to_json(back) == text);
}

TEST_CASE("infinite beta spells itself as a string") {
  RealVector energies(2);
  energies << -0.5, 0.5;
  RealMatrix rates = RealMatrix::Zero(2, 2);
  rates(0, 1) = 1.0;
  const LindbladModel model = LindbladModel::create(
      energies, rates, 0.0, std::numeric_limits<double>::infinity());
  const std::string text = io::model_to_json(model);
  CHECK(text.find("\"inf\"") != std::string::npos);
  const LindbladModel back = io::model_from_json(text);
  REQUIRE(back.beta().has_value());
  CHECK(std::isinf(*back.beta()));
}

TEST_CASE("explicit rates parse directly") {
  const LindbladModel model = io::model_from_json(R"({
    "energies": [-1.0, 0.3, 1.0],
    "rates": [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
  })");
  CHECK(model.dim() == 3);
  CHECK(model.rates()(0, 1) == 1.0);
  CHECK(model.rates()(1, 2) == 1.0);
  CHECK(model.dephasing_rate() == 0.0);
  CHECK(!model.beta().has_value());
}

TEST_CASE("spectral input resolves to thermal rates at parse time") {
  const LindbladModel model = io::model_from_json(R"({
    "energies": [-0.5, 0.5],
    "spectral": {"form": "ohmic", "g": 1.0, "omega_c": 10.0},
    "beta": 1.0
  })");
  micro::ChannelSpectral spectral;
  spectral[{0, 1}] = micro::SpectralFunction::make_ohmic(1.0, 10.0);
  RealVector energies(2);
  energies << -0.5, 0.5;
  const RealMatrix expected =
      micro::rates_from_spectral(energies, spectral, 1.0);
  CHECK(max_abs(Matrix((model.rates() - expected).cast<Complex>())) == 0.0);
  REQUIRE(model.beta().has_value());
  CHECK(*model.beta() == 1.0);
}

TEST_CASE("spectral input defaults to zero temperature") {
  const LindbladModel model = io::model_from_json(R"({
    "energies": [-0.5, 0.5],
    "spectral": {"form": "flat", "g": 0.8}
  })");
  CHECK(model.rates()(0, 1) == 0.8);
  CHECK(model.rates()(1, 0) == 0.0);
}

TEST_CASE("spectral pairs restrict the coupled channels") {
  const LindbladModel model = io::model_from_json(R"({
    "energies": [-1.0, 0.3, 1.0],
    "spectral": {"form": "flat", "g": 0.8, "pairs": [[0, 1]]}
  })");
  CHECK(model.rates()(0, 1) == 0.8);
  CHECK(model.rates()(1, 2) == 0.0);
  CHECK(model.channel_set() == std::vector<int>{0, 1});
}

TEST_CASE("schema violations throw parse errors") {
  const auto expect_parse_error = [](const std::string& text) {
    try {
      (void)io::model_from_json(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::parse_error);
    }
  };

  expect_parse_error("not json at all");
  expect_parse_error(R"({"rates": [[0]]})");
  expect_parse_error(R"({"energies": [0, 1]})");
  expect_parse_error(R"({"energies": [0, 1], "rates": [[0, 0], [0, 0]],
                         "spectral": {"form": "flat", "g": 1}})");
  expect_parse_error(R"({"energies": [0, 1], "rates": [[0, 0]]})");
  expect_parse_error(R"({"energies": [0, 1], "rates": [[0, 0], [0, 0]],
                         "extra": 1})");
  expect_parse_error(R"({"energies": [0, 1],
                         "spectral": {"form": "ohmic", "g": 1}})");
  expect_parse_error(R"({"energies": [0, 1],
                         "spectral": {"form": "nope", "g": 1}})");
  expect_parse_error(R"({"energies": [0, 1], "rates": [[0, 0], [0, 0]],
                         "beta": "warm"})");
  expect_parse_error(R"({"energies": ["a", "b"],
                         "rates": [[0, 0], [0, 0]]})");
}
