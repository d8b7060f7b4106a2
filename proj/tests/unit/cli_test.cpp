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

#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = focksynth::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(FOCKSYNTH_TEST_TMPDIR) + "/" + name; }

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

}  // namespace

TEST(CliSimulate, number_state_filter) {
    const auto r = run({"simulate", "--alpha", "20", "--beta", "2", "--psi", "0.04", "--chi-t", "0.01", "--tau", "1e-8",
                        "--target", "fock:4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_GE(doc["metrics"]["fidelity"].get<double>(), 0.999);
    EXPECT_GE(doc["metrics"]["number_distribution"][4].get<double>(), 0.999);
    EXPECT_EQ(doc["resonant_numbers"], json::array({4}));
    const int n_max = doc["state"]["n_max"].get<int>();
    EXPECT_EQ(doc["state"]["entries"].size(), static_cast<std::size_t>(n_max + 1));
}

TEST(CliSimulate, superposition_click_probability) {
    const auto r = run({"simulate", "--alpha", "8", "--beta", "3.902276865", "--chi-t", "pi/5", "--tau", "1e-4",
                        "--target", "super:10,20"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double p = json::parse(r.out)["report"]["p_click"].get<double>();
    EXPECT_GE(p, 0.089);
    EXPECT_LE(p, 0.095);
}

TEST(CliSimulate, csv_output) {
    const auto r = run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "0.01", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0], "param,value,p_click,fidelity,purity,trace_defect,min_eig");
}

TEST(CliSimulate, zero_probe_has_no_click) {
    const auto r = run({"simulate", "--alpha", "0", "--beta", "2", "--tau", "0.01"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliSimulate, malformed_configuration) {
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--beta", "2"}).code, 1);  // no tau
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--tau", "0.01"}).code, 1);  // no input
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "2"}).code, 1);
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "0.1", "--eta", "0"}).code, 1);
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "0.1", "--target", "fock:x"}).code, 1);
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "0.1", "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "0.1", "--psi", "pie"}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);

    write_file(tmp("nonsquare.json"), R"({"n_max":1,"entries":[[[1,0],[0,0]],[[0,0]]]})");
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--tau", "0.1", "--nu-in", tmp("nonsquare.json")}).code, 1);
    write_file(tmp("unphysical.json"), R"({"n_max":1,"entries":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})");
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--tau", "0.1", "--nu-in", tmp("unphysical.json")}).code, 1);
    EXPECT_EQ(run({"simulate", "--alpha", "8", "--tau", "0.1", "--nu-in", tmp("absent.json")}).code, 1);
}

TEST(CliSimulate, density_matrix_input) {
    write_file(tmp("fock3.json"),
               R"({"n_max":3,"entries":[[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],)"
               R"([[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[1,0]]]})");
    const auto r = run({"simulate", "--alpha", "2", "--tau", "0.1", "--nu-in", tmp("fock3.json"), "--target", "fock:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["metrics"]["fidelity"].get<double>(), 1.0, 1e-12);
}

TEST(CliSimulate, writes_output_file) {
    const auto path = tmp("sim_out.json");
    std::remove(path.c_str());
    const auto r = run({"simulate", "--alpha", "8", "--beta", "2", "--tau", "0.01", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_NO_THROW(json::parse(in));
}

TEST(CliDesign, number_state) {
    const auto r = run({"design", "fock:4", "--chi-t", "0.01"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_NEAR(doc["psi"].get<double>(), 0.04, 1e-15);
    EXPECT_EQ(doc["beta"].get<double>(), 2.0);
    EXPECT_TRUE(doc["prediction"].is_null());
}

TEST(CliDesign, superposition) {
    const auto r = run({"design", "super:10,20", "--chi-t", "0.6283185307"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["psi"].get<double>(), 0.0);
    EXPECT_NEAR(doc["beta"].get<double>(), 3.9024, 5e-4);
}

TEST(CliDesign, prediction_with_device_parameters) {
    const auto r = run({"design", "super:10,20", "--chi-t", "pi/5", "--tau", "1e-4", "--alpha", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    ASSERT_TRUE(doc["prediction"].is_object());
    EXPECT_GE(doc["prediction"]["p_click"].get<double>(), 0.089);
    EXPECT_LE(doc["prediction"]["p_click"].get<double>(), 0.095);
}

TEST(CliDesign, incompatible_spacing) {
    const auto r = run({"design", "super:10,21", "--chi-t", "pi/5"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("2*pi/11"), std::string::npos) << r.err;
    EXPECT_EQ(run({"design", "fock:4"}).code, 1);
    EXPECT_EQ(run({"design", "super:10,10", "--chi-t", "pi/5"}).code, 1);
    EXPECT_EQ(run({"design", "super:20,10", "--chi-t", "pi/5"}).code, 0);
}

TEST(CliSweep, efficiency_grid) {
    write_file(tmp("sweep_eta.json"),
               R"({"param":"eta","grid":[1.0,0.6,0.2],"tau":0.05,"alpha":8,"chi_t":"pi/5","beta":3.902276865,)"
               R"("target":"super:10,20"})");
    const auto r = run({"sweep", tmp("sweep_eta.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 4u);
    std::vector<double> p;
    for (std::size_t i = 1; i < l.size(); ++i) {
        std::istringstream row(l[i]);
        std::string field;
        for (int k = 0; k < 3; ++k) std::getline(row, field, ',');
        p.push_back(std::stod(field));
    }
    EXPECT_GT(p[0], p[1]);
    EXPECT_GT(p[1], p[2]);
}

TEST(CliSweep, hundred_points) {
    std::string grid;
    for (int i = 0; i < 100; ++i) grid += (i ? "," : "") + std::to_string(1e-5 * (i + 1));
    write_file(tmp("sweep_100.json"), R"({"param":"tau","grid":[)" + grid + R"(],"alpha":8,"chi_t":"pi/5","beta":3.9})");
    const auto path = tmp("sweep_100.csv");
    const auto r = run({"sweep", tmp("sweep_100.json"), "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    EXPECT_EQ(lines(buffer.str()).size(), 101u);
}

TEST(CliSweep, malformed_specs) {
    write_file(tmp("sweep_empty.json"), R"({"param":"tau","grid":[],"alpha":8,"beta":2})");
    EXPECT_EQ(run({"sweep", tmp("sweep_empty.json")}).code, 1);
    write_file(tmp("sweep_badparam.json"), R"({"param":"omega","grid":[1],"alpha":8,"beta":2,"tau":0.1})");
    EXPECT_EQ(run({"sweep", tmp("sweep_badparam.json")}).code, 1);
    write_file(tmp("sweep_notau.json"), R"({"param":"eta","grid":[1],"alpha":8,"beta":2})");
    EXPECT_EQ(run({"sweep", tmp("sweep_notau.json")}).code, 1);
    write_file(tmp("sweep_both.json"), R"({"param":"eta","grid":[1],"alpha":8,"beta":2,"tau":0.1,"nu_in":"x.json"})");
    EXPECT_EQ(run({"sweep", tmp("sweep_both.json")}).code, 1);
    write_file(tmp("sweep_broken.json"), "{");
    EXPECT_EQ(run({"sweep", tmp("sweep_broken.json")}).code, 1);
}

TEST(CliSweep, failing_points_reported) {
    write_file(tmp("sweep_alpha.json"), R"({"param":"alpha","grid":[0,8],"tau":0.1,"beta":2})");
    const auto r = run({"sweep", tmp("sweep_alpha.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("no_click_probability"), std::string::npos) << r.err;
    EXPECT_EQ(lines(r.out).size(), 3u);
}

TEST(CliVerify, default_suite_passes) {
    const auto r = run({"verify", "--instances", "20"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(CliVerify, rejects_bad_options) {
    EXPECT_EQ(run({"verify", "--tau", "0"}).code, 1);
    EXPECT_EQ(run({"verify", "--instances", "0"}).code, 1);
    EXPECT_EQ(run({"verify", "--eta", "1.5"}).code, 1);
}

TEST(CliFigure, reproducible_output) {
    const auto a = run({"figure", "3"});
    const auto b = run({"figure", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto doc = json::parse(a.out);
    EXPECT_EQ(doc["figure"].get<int>(), 3);
    EXPECT_EQ(doc["panels"].size(), 2u);
    const auto csv = run({"figure", "2", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(lines(csv.out).size(), 4u);
    EXPECT_EQ(run({"figure", "7"}).code, 1);
}

TEST(CliHelp, exits_cleanly) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"simulate", "--help"}).code, 0);
    EXPECT_EQ(run({}).code, 1);
}
