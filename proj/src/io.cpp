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

namespace focksynth::io {

using nlohmann::json;

json to_json(const DensityMatrix& rho) {
    json entries = json::array();
    for (int n = 0; n <= rho.n_max(); ++n) {
        json row = json::array();
        for (int m = 0; m <= rho.n_max(); ++m) row.push_back({rho(n, m).real(), rho(n, m).imag()});
        entries.push_back(std::move(row));
    }
    return {{"n_max", rho.n_max()}, {"entries", std::move(entries)}};
}

DensityMatrix density_matrix_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("density matrix must be a JSON object");
    if (!doc.contains("n_max") || !doc["n_max"].is_number_integer()) {
        throw ParseError("density matrix needs an integer \"n_max\"");
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw ParseError("density matrix needs an \"entries\" array");
    }
    const auto n_max = doc["n_max"].get<long long>();
    const auto& rows = doc["entries"];
    if (n_max < 0) throw ParseError("n_max must be >= 0");
    if (rows.size() != static_cast<std::size_t>(n_max) + 1) {
        throw ParseError("entries must have n_max + 1 rows");
    }
    const auto d = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index n = 0; n < d; ++n) {
        const auto& row = rows[n];
        if (!row.is_array() || row.size() != rows.size()) throw ParseError("density matrix must be square");
        for (Eigen::Index k = 0; k < d; ++k) {
            const auto& z = row[k];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ParseError("matrix entries must be [re, im] pairs");
            }
            m(n, k) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix read_density_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return density_matrix_from_json(doc);
}

void write_density_matrix(const std::filesystem::path& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << to_json(rho).dump() << '\n';
}

json to_json(const SynthesizerParams& params) {
    return {{"tau", params.cavity.tau},
            {"psi", params.cavity.psi},
            {"chi_t", params.cavity.chi_t},
            {"alpha", {params.alpha.real(), params.alpha.imag()}},
            {"eta", params.eta},
            {"n_max", params.trunc.n_max()}};
}

json to_json(const ClickReport& report) {
    return {{"p_click", report.p_click}, {"p_no_click", report.p_no_click}, {"params", to_json(report.params)}};
}

json to_json(const StateMetrics& m) {
    json j = {{"fidelity", nullptr},
              {"purity", m.purity},
              {"trace_defect", m.trace_defect},
              {"hermiticity_defect", m.hermiticity_defect},
              {"min_eigenvalue", m.min_eigenvalue},
              {"number_distribution", m.number_distribution}};
    if (m.fidelity) j["fidelity"] = *m.fidelity;
    return j;
}

namespace {

double parse_number(const std::string& text, const std::string& whole) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("cannot parse angle '" + whole + "'");
    }
    if (used != text.size() || !std::isfinite(v)) throw InvalidArgument("cannot parse angle '" + whole + "'");
    return v;
}

}  // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.empty()) throw InvalidArgument("empty angle");
    const auto pi_at = s.find("pi");
    if (pi_at == std::string::npos) return parse_number(s, text);

    std::string prefix = s.substr(0, pi_at);
    const std::string suffix = s.substr(pi_at + 2);
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    double factor = 1.0;
    if (prefix == "-") {
        factor = -1.0;
    } else if (!prefix.empty() && prefix != "+") {
        factor = parse_number(prefix, text);
    }
    double divisor = 1.0;
    if (!suffix.empty()) {
        if (suffix.front() != '/') throw InvalidArgument("cannot parse angle '" + text + "'");
        divisor = parse_number(suffix.substr(1), text);
        if (divisor == 0.0) throw InvalidArgument("angle divides by zero");
    }
    return factor * std::numbers::pi / divisor;
}

}  // namespace focksynth::io
