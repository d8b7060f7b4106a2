// Copyright 2026 The focksynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "focksynth/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace focksynth;
using nlohmann::json;

TEST(DensityMatrixJson, round_trip_is_exact) {
    auto rng = focksynth::testing::make_rng(30);
    for (int i = 0; i < 20; ++i) {
        const int n_max = static_cast<int>(focksynth::testing::uniform(rng, 0.0, 12.0));
        const auto rho = focksynth::testing::random_mixed_state(rng, n_max);
        const auto doc = io::to_json(rho);
        EXPECT_EQ(doc["n_max"].get<int>(), n_max);
        const auto back = io::density_matrix_from_json(json::parse(doc.dump()));
        EXPECT_EQ(back.entries(), rho.entries());
    }
}

TEST(DensityMatrixJson, layout) {
    Eigen::MatrixXcd m(2, 2);
    m << Complex(0.7, 0.0), Complex(0.1, 0.2), Complex(0.1, -0.2), Complex(0.3, 0.0);
    const auto doc = io::to_json(DensityMatrix(m));
    EXPECT_EQ(doc.dump(), R"({"entries":[[[0.7,0.0],[0.1,0.2]],[[0.1,-0.2],[0.3,0.0]]],"n_max":1})");
}

TEST(DensityMatrixJson, rejects_malformed_documents) {
    const auto parse = [](const char* text) { return io::density_matrix_from_json(json::parse(text)); };
    EXPECT_THROW(parse(R"({"n_max":1,"entries":[[[1,0],[0,0]],[[0,0]]]})"), io::ParseError);  // non-square
    EXPECT_THROW(parse(R"({"n_max":1,"entries":[[[1,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]]})"), io::ParseError);
    EXPECT_THROW(parse(R"({"n_max":2,"entries":[[[1,0],[0,0]],[[0,0],[0,0]]]})"), io::ParseError);
    EXPECT_THROW(parse(R"({"n_max":0,"entries":[[[1,0,0]]]})"), io::ParseError);
    EXPECT_THROW(parse(R"({"n_max":0,"entries":[["1"]]})"), io::ParseError);
    EXPECT_THROW(parse(R"({"entries":[[[1,0]]]})"), io::ParseError);
    EXPECT_THROW(parse(R"([1,2])"), io::ParseError);
    EXPECT_THROW(parse(R"({"n_max":-1,"entries":[]})"), io::ParseError);
    EXPECT_NO_THROW(parse(R"({"n_max":0,"entries":[[[1,0]]]})"));
}

TEST(DensityMatrixJson, files) {
    const std::string path = std::string(FOCKSYNTH_TEST_TMPDIR) + "/io_rho.json";
    const auto rho = coherent_density_matrix(Complex(0.4, -0.3), FockTruncation(6));
    io::write_density_matrix(path, rho);
    EXPECT_EQ(io::read_density_matrix(path).entries(), rho.entries());
    EXPECT_THROW(io::read_density_matrix(std::string(FOCKSYNTH_TEST_TMPDIR) + "/missing.json"), io::ParseError);
    std::ofstream(std::string(FOCKSYNTH_TEST_TMPDIR) + "/broken.json") << "{ not json";
    EXPECT_THROW(io::read_density_matrix(std::string(FOCKSYNTH_TEST_TMPDIR) + "/broken.json"), io::ParseError);
}

TEST(ParseAngle, forms) {
    EXPECT_EQ(io::parse_angle("0.04"), 0.04);
    EXPECT_EQ(io::parse_angle("pi/5"), std::numbers::pi / 5);
    EXPECT_EQ(io::parse_angle("pi"), std::numbers::pi);
    EXPECT_EQ(io::parse_angle("-pi/3"), -std::numbers::pi / 3);
    EXPECT_EQ(io::parse_angle("2pi/11"), 2 * std::numbers::pi / 11);
    EXPECT_EQ(io::parse_angle("2*pi/11"), 2 * std::numbers::pi / 11);
    EXPECT_EQ(io::parse_angle(" 3 * pi "), 3 * std::numbers::pi);
    EXPECT_EQ(io::parse_angle("1e-2"), 0.01);
    for (const char* bad : {"", "abc", "pi/", "pi/0", "pi*2", "1.2.3", "pie", "nan"}) {
        EXPECT_THROW(io::parse_angle(bad), InvalidArgument) << bad;
    }
}

TEST(ReportJson, fields) {
    SynthesizerParams p{.cavity = {.tau = 1e-4, .psi = 0.0, .chi_t = 0.3}, .alpha = Complex(8.0, 1.0), .eta = 0.5, .trunc = FockTruncation(9)};
    const auto j = io::to_json(ClickReport{0.25, 0.75, p});
    EXPECT_EQ(j["p_click"].get<double>(), 0.25);
    EXPECT_EQ(j["params"]["alpha"][1].get<double>(), 1.0);
    EXPECT_EQ(j["params"]["n_max"].get<int>(), 9);
    StateMetrics m;
    EXPECT_TRUE(io::to_json(m)["fidelity"].is_null());
    m.fidelity = 0.5;
    EXPECT_EQ(io::to_json(m)["fidelity"].get<double>(), 0.5);
}
