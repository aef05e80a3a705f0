// Copyright 2026 The euler-arnold Authors
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

#include <gtest/gtest.h>

#include <filesystem>

#include "ea/config.hpp"
#include "ea/errors.hpp"

namespace ea::config {
namespace {

using models::ModelId;

// Parses and returns the line of the ConfigError, or -1 if none was thrown.
int error_line(const std::string& text, std::string* message = nullptr) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    if (message) *message = e.what();
    return e.line();
  }
  return -1;
}

const char* kMinimal = R"({
  "model": "burgers",
  "time": {"t_final": 0.1, "cfl": 0.2}
})";

TEST(Parse, MinimalConfigAndDefaults) {
  const RunConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.model, "burgers");
  EXPECT_EQ(c.grid.n, 256);
  EXPECT_EQ(c.initial.preset, "two-mode");
  EXPECT_DOUBLE_EQ(c.time.t_final, 0.1);
  EXPECT_FALSE(c.time.dt.has_value());
  EXPECT_DOUBLE_EQ(c.time.cfl.value(), 0.2);
  EXPECT_EQ(c.time.stride, 1);
  EXPECT_EQ(c.output.directory, "output");
  EXPECT_EQ(c.output.snapshots, SnapshotPolicy::Final);
}

TEST(Parse, FullTorusConfig) {
  const RunConfig c = parse_config(R"({
    // comments are allowed
    "model": "passive-scalar",
    "grid": {"nx": 64, "ny": 32},
    "initial": {"preset": "taylor-green", "seed": 4, "amplitude": 0.5,
                "fields": {"f": {"modes": [{"k": [1, -2], "amplitude": 0.3, "phase": 0.1}]}}},
    "time": {"t_final": 0.5, "dt": 0.01, "stride": 5},
    "output": {"directory": "x", "fields": ["f"], "snapshots": "all", "grid": true}
  })");
  EXPECT_EQ(c.grid.nx, 64);
  EXPECT_EQ(c.grid.ny, 32);
  ASSERT_EQ(c.initial.fields.at("f").modes.size(), 1u);
  const auto& m = c.initial.fields.at("f").modes[0];
  EXPECT_EQ(m.k1, 1);
  EXPECT_EQ(m.k2, -2);
  EXPECT_DOUBLE_EQ(m.amplitude, 0.3);
  EXPECT_DOUBLE_EQ(m.phase, 0.1);
  EXPECT_EQ(c.output.snapshots, SnapshotPolicy::All);
  EXPECT_TRUE(c.output.grid);
  EXPECT_EQ(c.time.stride, 5);
}

TEST(Parse, ModesShorthandTargetsPrimaryField) {
  const RunConfig c = parse_config(R"({
    "model": "kdv", "params": {"a": 0.1},
    "initial": {"modes": [{"k": 2, "amplitude": 1.0}]},
    "time": {"t_final": 0.1, "cfl": 0.5}
  })");
  ASSERT_EQ(c.initial.fields.count("u"), 1u);
  EXPECT_EQ(c.initial.fields.at("u").modes[0].k1, 2);
  EXPECT_DOUBLE_EQ(model_spec(c).a, 0.1);
}

TEST(Errors, LineAnchoredMessages) {
  std::string msg;
  EXPECT_EQ(error_line("{\n  \"model\": \"navier-stokes\",\n  \"time\": {\"dt\": 0.1}\n}", &msg), 2);
  EXPECT_NE(msg.find("unknown model"), std::string::npos);
  EXPECT_EQ(error_line("{\n  \"model\": \"burgers\",\n  \"time\": {\"dt\": 0.1},\n  \"colour\": 1\n}", &msg), 4);
  EXPECT_NE(msg.find("unknown key"), std::string::npos);
  // Parameter not legal for the model.
  EXPECT_EQ(error_line("{\n  \"model\": \"burgers\",\n  \"params\": {\n    \"beta\": 1\n  },\n"
                       "  \"time\": {\"dt\": 0.1}\n}",
                       &msg),
            4);
  // Grid not a power of two.
  EXPECT_EQ(error_line("{\n  \"model\": \"burgers\",\n  \"grid\": {\"n\": 100},\n  \"time\": {\"dt\": 0.1}\n}"), 3);
  EXPECT_EQ(error_line("{\n  \"model\": \"euler-2d\",\n  \"grid\": {\"nx\": 64,\n \"ny\": 48},\n"
                       "  \"time\": {\"dt\": 0.1}\n}"),
            4);
  // Both dt and cfl.
  EXPECT_EQ(error_line("{\n  \"model\": \"burgers\",\n\n  \"time\": {\"dt\": 0.1, \"cfl\": 0.2}\n}", &msg), 4);
  // Malformed JSON.
  EXPECT_EQ(error_line("{\n  \"model\": \"burgers\",\n  \"time\": {\"dt\": 0.1},,\n}", &msg), 3);
  EXPECT_NE(msg.find("malformed JSON"), std::string::npos);
}

TEST(Errors, SemanticChecks) {
  auto with = [](const std::string& model, const std::string& extra) {
    return "{\"model\": \"" + model + "\", \"time\": {\"dt\": 0.1}" + extra + "}";
  };
  EXPECT_GT(error_line(with("burgers", ", \"initial\": {\"preset\": \"vortex\"}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"initial\": {\"preset\": \"taylor-green\"}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"initial\": {\"seed\": -1}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"initial\": {\"seed\": 1.5}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"initial\": {\"modes\": [{\"k\": [1, 2]}]}")), 0);
  EXPECT_GT(error_line(with("euler-2d", ", \"initial\": {\"modes\": [{\"k\": 1}]}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"output\": {\"fields\": [\"omega\"]}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"output\": {\"snapshots\": \"some\"}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"output\": {\"directory\": \"\"}")), 0);
  EXPECT_GT(error_line(with("burgers", ", \"params\": {\"a\": 1}")), 0);
  EXPECT_GT(error_line(with("kdv", ", \"params\": {\"a\": \"big\"}")), 0);
  EXPECT_GT(error_line(with("rigid-body", ", \"initial\": {\"vector\": [1, 2]}")), 0);
  EXPECT_GT(error_line(with("rigid-body", ", \"initial\": {\"modes\": []}")), 0);
  EXPECT_GT(error_line(with("euler-2d", ", \"initial\": {\"vector\": [1, 2, 3]}")), 0);
  EXPECT_GT(error_line(with("pair-l2", ", \"initial\": {\"fields\": {\"g\": {\"preset\": \"sine\"}}}")), 0);
  EXPECT_GT(error_line(with("pair-l2", ", \"initial\": {\"fields\": {\"f\": {}}}")), 0);
  EXPECT_GT(error_line(with("epdiff", ", \"params\": {\"alpha2\": -1}")), 0);
  EXPECT_NE(error_line("{\"model\": \"burgers\", \"time\": {\"t_final\": 1, \"dt\": 0.1, \"stride\": 0}}"), -1);
  EXPECT_NE(error_line("{\"model\": \"burgers\", \"time\": {\"t_final\": 1}}"), -1);
  EXPECT_NE(error_line("{\"model\": \"burgers\"}"), -1);
  EXPECT_NE(error_line("[1, 2]"), -1);
  EXPECT_NE(error_line("{\"model\": 3, \"time\": {\"dt\": 0.1}}"), -1);
  EXPECT_EQ(error_line(kMinimal), -1);
}

TEST(Catalog, LegalParamsAndFields) {
  EXPECT_TRUE(legal_params(ModelId::Burgers).empty());
  EXPECT_EQ(legal_params(ModelId::Kdv), std::vector<std::string>{"a"});
  const auto mhd = legal_params(ModelId::Mhd2D);
  EXPECT_NE(std::find(mhd.begin(), mhd.end(), "B0x"), mhd.end());
  EXPECT_NE(std::find(mhd.begin(), mhd.end(), "B0y"), mhd.end());
  for (const auto& m : models::catalog()) EXPECT_FALSE(snapshot_fields(m.id).empty()) << m.name;
}

TEST(ModelSpec, ParamsMapOntoFields) {
  RunConfig c = parse_config(R"({"model": "mhd-2d", "params": {"B0x": 0.3, "B0y": -0.2},
                                 "time": {"dt": 0.1}})");
  auto s = model_spec(c);
  EXPECT_DOUBLE_EQ(s.B0[0], 0.3);
  EXPECT_DOUBLE_EQ(s.B0[1], -0.2);
  c = parse_config(R"({"model": "rigid-body", "params": {"I1": 2, "I2": 3, "I3": 5}, "time": {"dt": 0.1}})");
  s = model_spec(c);
  EXPECT_EQ(s.inertia, (std::array<double, 3>{2.0, 3.0, 5.0}));
  EXPECT_DOUBLE_EQ(model_spec(parse_config(R"({"model": "epdiff", "time": {"dt": 0.1}})")).alpha2, 1.0);
  const auto st = stepper_config(parse_config(R"({"model": "burgers", "time": {"t_final": 2, "dt": 0.1, "stride": 3}})"));
  EXPECT_DOUBLE_EQ(st.t_final, 2.0);
  EXPECT_EQ(st.record_stride, 3);
}

TEST(RoundTrip, EveryShippedConfig) {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(EA_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    SCOPED_TRACE(entry.path().string());
    const RunConfig c = load_config(entry.path().string());
    const std::string dumped = dump_config(c);
    const RunConfig back = parse_config(dumped);
    EXPECT_TRUE(back == c);
    EXPECT_EQ(dump_config(back), dumped);
  }
  EXPECT_EQ(count, static_cast<int>(models::catalog().size()));
}

TEST(RoundTrip, ExplicitModesAndVectors) {
  const RunConfig c = parse_config(R"({
    "model": "pair-h1",
    "grid": {"n": 128},
    "initial": {"modes": [{"k": 1, "amplitude": 0.1, "phase": 0.25}],
                "fields": {"f": {"preset": "two-mode"}}},
    "time": {"t_final": 0.3, "dt": 0.001},
    "output": {"fields": ["f"], "snapshots": "none"}
  })");
  EXPECT_TRUE(parse_config(dump_config(c)) == c);
  const RunConfig r = parse_config(R"({"model": "rigid-body", "initial": {"vector": [0.1, 0.2, 0.3]},
                                       "time": {"dt": 0.01}})");
  EXPECT_TRUE(parse_config(dump_config(r)) == r);
}

TEST(Load, MissingFile) { EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError); }

}  // namespace
}  // namespace ea::config
