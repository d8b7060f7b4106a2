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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "focksynth/analysis.hpp"
#include "focksynth/cavity.hpp"
#include "focksynth/errors.hpp"
#include "focksynth/figures.hpp"
#include "focksynth/io.hpp"
#include "focksynth/synthesizer.hpp"
#include "focksynth/verification.hpp"

namespace focksynth::cli {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// `fock:n` or `super:n1,n2`.
struct TargetSpec {
    std::string text;
    std::vector<int> numbers;

    bool is_superposition() const { return numbers.size() > 1; }
    int largest() const { return *std::max_element(numbers.begin(), numbers.end()); }
    PureStateVector state(FockTruncation trunc) const {
        if (largest() > trunc.n_max()) throw InvalidArgument("target " + text + " lies outside n_max");
        return PureStateVector::superposition(numbers, trunc);
    }
};

int parse_count(const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || v < 0) throw InvalidArgument("malformed target '" + whole + "'");
    return v;
}

TargetSpec parse_target(const std::string& text) {
    TargetSpec t{text, {}};
    if (text.rfind("fock:", 0) == 0) {
        t.numbers.push_back(parse_count(text.substr(5), text));
        return t;
    }
    if (text.rfind("super:", 0) == 0) {
        const std::string body = text.substr(6);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw InvalidArgument("superposition target needs two numbers: '" + text + "'");
        const int n1 = parse_count(body.substr(0, comma), text);
        const int n2 = parse_count(body.substr(comma + 1), text);
        if (n1 == n2) throw InvalidArgument("superposition target needs two distinct numbers");
        t.numbers = {std::min(n1, n2), std::max(n1, n2)};
        return t;
    }
    throw InvalidArgument("target must be fock:n or super:n1,n2, got '" + text + "'");
}

/// Sends text to --out if given, else to the stream.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw Error("cannot write " + out_path);
    file << text;
}

std::string format_double(double v, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

/// Options shared by simulate and design.
struct DeviceOptions {
    double alpha = 0.0;
    double beta = 0.0;
    std::string nu_in;
    std::string psi = "0";
    std::string chi_t = "0";
    double tau = 0.0;
    double eta = 1.0;
    int n_max = -1;
    std::string target;
    std::string format = "json";
    std::string out;
};

// ---------------------------------------------------------------- simulate

int cmd_simulate(const DeviceOptions& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    const bool has_beta = sub.count("--beta") > 0;
    const bool has_nu = sub.count("--nu-in") > 0;
    if (has_beta == has_nu) throw InvalidArgument("give exactly one of --beta or --nu-in");

    std::optional<TargetSpec> target;
    if (!o.target.empty()) target = parse_target(o.target);

    SynthesizerParams params;
    params.cavity = {o.tau, io::parse_angle(o.psi), io::parse_angle(o.chi_t)};
    params.alpha = o.alpha;
    params.eta = o.eta;

    DensityMatrix nu_in = has_nu ? io::read_density_matrix(o.nu_in) : DensityMatrix::diagonal(std::vector<double>{1.0});
    if (has_nu) {
        nu_in.check_physical();
        if (o.n_max >= 0 && o.n_max != nu_in.n_max()) throw InvalidArgument("--n-max disagrees with the --nu-in matrix");
        params.trunc = nu_in.truncation();
    } else {
        params.trunc = o.n_max >= 0 ? FockTruncation(o.n_max)
                                    : default_truncation(o.beta * o.beta, target ? target->largest() : 0);
        nu_in = coherent_density_matrix(o.beta, params.trunc);
    }
    params.validate();
    std::optional<PureStateVector> target_state;
    if (target) target_state = target->state(params.trunc);

    ConditionalState result = [&] {
        try {
            return conditional_state(nu_in, params);
        } catch (const NoClickProbability& e) {
            err << "focksynth: " << e.what() << '\n';
            throw;
        }
    }();
    const StateMetrics m = metrics(result.state, target_state);

    if (o.format == "csv") {
        SweepRow row;
        row.value = params.cavity.tau;
        row.p_click = result.report.p_click;
        row.metrics = m;
        std::ostringstream os;
        write_sweep_csv(os, SweepParameter::kTau, std::span<const SweepRow>(&row, 1));
        emit(os.str(), o.out, out);
        return kOk;
    }
    json doc = {
        {"report", io::to_json(result.report)},
        {"resonant_numbers", resonant_numbers(params.cavity, params.trunc)},
        {"metrics", io::to_json(m)},
        {"target", target ? json(target->text) : json(nullptr)},
        {"state", io::to_json(result.state)},
    };
    emit(doc.dump(2) + "\n", o.out, out);
    return kOk;
}

// ------------------------------------------------------------------ figure

json panel_json(const figures::FigurePanel& p) {
    json j = {{"label", p.label},
              {"tau", p.tau},
              {"alpha", p.alpha},
              {"eta", p.eta},
              {"published_p_click", p.published_p_click ? json(*p.published_p_click) : json(nullptr)},
              {"p_click", p.p_click},
              {"target", p.target},
              {"fidelity", p.fidelity},
              {"number_distribution", p.number_distribution},
              {"error", p.error ? json(*p.error) : json(nullptr)}};
    if (p.magnitudes) {
        json rows = json::array();
        for (Eigen::Index n = 0; n < p.magnitudes->rows(); ++n) {
            std::vector<double> row(p.magnitudes->cols());
            for (Eigen::Index k = 0; k < p.magnitudes->cols(); ++k) row[k] = (*p.magnitudes)(n, k);
            rows.push_back(std::move(row));
        }
        j["magnitudes"] = std::move(rows);
    }
    return j;
}

int cmd_figure(int which, const std::string& format, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    const auto bundle = figures::reproduce_figure(which);
    for (const auto& p : bundle.panels) {
        if (p.error) err << "focksynth: figure " << which << p.label << ": " << *p.error << '\n';
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "figure,panel,tau,alpha,eta,published_p_click,p_click,fidelity\n";
        for (const auto& p : bundle.panels) {
            os << bundle.figure << ',' << p.label << ',' << format_double(p.tau) << ',' << format_double(p.alpha)
               << ',' << format_double(p.eta) << ','
               << (p.published_p_click ? format_double(*p.published_p_click) : std::string()) << ','
               << format_double(p.p_click) << ',' << format_double(p.fidelity) << '\n';
        }
        emit(os.str(), out_path, out);
        return kOk;
    }
    json panels = json::array();
    for (const auto& p : bundle.panels) panels.push_back(panel_json(p));
    emit(json{{"figure", bundle.figure}, {"panels", std::move(panels)}}.dump(2) + "\n", out_path, out);
    return kOk;
}

// ------------------------------------------------------------------ design

int cmd_design(const DeviceOptions& o, const std::string& target_text, const CLI::App& sub, std::ostream& out,
               std::ostream& err) {
    const TargetSpec target = parse_target(target_text);
    const double chi_t = io::parse_angle(o.chi_t);
    if (!(chi_t > 0.0)) throw InvalidArgument("--chi-t must be positive");

    const int n_low = target.numbers.front();
    double beta = std::sqrt(static_cast<double>(n_low));
    if (target.is_superposition()) {
        const int n_high = target.numbers.back();
        const int gap = n_high - n_low;
        const double periods = gap * chi_t / kTwoPi;
        const double whole = std::round(periods);
        if (whole < 1.0 || std::abs(periods - whole) > 1e-9) {
            const int k = static_cast<int>(std::max(1.0, whole));
            std::ostringstream why;
            why << "target " << target.text << " is incompatible with chi_t = " << format_double(chi_t)
                << ": resonances are 2*pi/chi_t = " << format_double(kTwoPi / chi_t) << " photons apart; nearest valid chi_t = "
                << (k == 1 ? std::string() : std::to_string(k) + "*") << "2*pi/" << gap << " = "
                << format_double(k * kTwoPi / gap);
            err << "focksynth: " << why.str() << '\n';
            return kBadConfig;
        }
        beta = equal_weight_amplitude(n_low, n_high);
    }
    const double psi = design_phase(n_low, chi_t);

    json doc = {{"target", target.text},
                {"chi_t", chi_t},
                {"psi", psi},
                {"beta", beta},
                {"resonance_spacing", kTwoPi / chi_t},
                {"prediction", nullptr}};

    if (sub.count("--tau") > 0 && sub.count("--alpha") > 0) {
        SynthesizerParams params;
        params.cavity = {o.tau, psi, chi_t};
        params.alpha = o.alpha;
        params.eta = o.eta;
        params.trunc = o.n_max >= 0 ? FockTruncation(o.n_max) : default_truncation(beta * beta, target.largest());
        params.validate();
        const DensityMatrix nu = coherent_density_matrix(beta, params.trunc);
        json prediction = {{"tau", o.tau}, {"alpha", o.alpha}, {"eta", o.eta}, {"n_max", params.trunc.n_max()}};
        try {
            const auto result = conditional_state(nu, params);
            prediction["p_click"] = result.report.p_click;
            prediction["fidelity"] = fidelity_to_pure(result.state, target.state(params.trunc));
        } catch (const NoClickProbability& e) {
            prediction["p_click"] = e.p_click();
            prediction["fidelity"] = nullptr;
        }
        doc["prediction"] = std::move(prediction);
    }

    if (o.format == "csv") {
        std::ostringstream os;
        os << "target,chi_t,psi,beta\n"
           << '"' << target.text << "\"," << format_double(chi_t) << ',' << format_double(psi) << ','
           << format_double(beta) << '\n';
        emit(os.str(), o.out, out);
    } else {
        emit(doc.dump(2) + "\n", o.out, out);
    }
    return kOk;
}

// ------------------------------------------------------------------- sweep

double angle_field(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc[key];
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return io::parse_angle(v.get<std::string>());
    throw io::ParseError(std::string("\"") + key + "\" must be a number or an angle string");
}

double number_field(const json& doc, const char* key, std::optional<double> fallback) {
    if (!doc.contains(key)) {
        if (fallback) return *fallback;
        throw io::ParseError(std::string("sweep spec is missing \"") + key + "\"");
    }
    if (!doc[key].is_number()) throw io::ParseError(std::string("\"") + key + "\" must be a number");
    return doc[key].get<double>();
}

SweepSpec parse_sweep_spec(const json& doc, const std::string& spec_dir) {
    if (!doc.is_object()) throw io::ParseError("sweep spec must be a JSON object");
    if (!doc.contains("param") || !doc["param"].is_string()) throw io::ParseError("sweep spec needs a \"param\" name");
    const auto parameter = parse_sweep_parameter(doc["param"].get<std::string>());
    if (!parameter) throw io::ParseError("unknown sweep parameter '" + doc["param"].get<std::string>() + "'");
    if (!doc.contains("grid") || !doc["grid"].is_array()) throw io::ParseError("sweep spec needs a \"grid\" array");

    SweepSpec spec;
    spec.parameter = *parameter;
    for (const auto& v : doc["grid"]) {
        if (v.is_number()) {
            spec.grid.push_back(v.get<double>());
        } else if (v.is_string()) {
            spec.grid.push_back(io::parse_angle(v.get<std::string>()));
        } else {
            throw io::ParseError("grid values must be numbers");
        }
    }
    if (spec.grid.empty()) throw InvalidArgument("sweep grid is empty");

    const auto swept = [&](SweepParameter p) { return spec.parameter == p ? std::optional(spec.grid.front()) : std::nullopt; };
    spec.fixed.cavity.tau = number_field(doc, "tau", swept(SweepParameter::kTau));
    spec.fixed.cavity.psi = angle_field(doc, "psi", 0.0);
    spec.fixed.cavity.chi_t = angle_field(doc, "chi_t", 0.0);
    spec.fixed.alpha = number_field(doc, "alpha", swept(SweepParameter::kAlpha));
    spec.fixed.eta = number_field(doc, "eta", 1.0);

    std::optional<TargetSpec> target;
    if (doc.contains("target")) {
        if (!doc["target"].is_string()) throw io::ParseError("\"target\" must be a string");
        target = parse_target(doc["target"].get<std::string>());
    }

    const bool has_beta = doc.contains("beta") || spec.parameter == SweepParameter::kBeta;
    const bool has_nu = doc.contains("nu_in");
    if (has_beta == has_nu) throw InvalidArgument("sweep spec needs exactly one of \"beta\" or \"nu_in\"");
    if (has_nu) {
        if (!doc["nu_in"].is_string()) throw io::ParseError("\"nu_in\" must be a file path");
        std::filesystem::path path = doc["nu_in"].get<std::string>();
        if (path.is_relative() && !spec_dir.empty()) path = std::filesystem::path(spec_dir) / path;
        DensityMatrix nu = io::read_density_matrix(path);
        nu.check_physical();
        spec.fixed.trunc = nu.truncation();
        spec.input = std::move(nu);
    } else {
        const double beta = number_field(doc, "beta", swept(SweepParameter::kBeta));
        spec.input = CoherentInput{beta};
        double largest_beta = std::abs(beta);
        if (spec.parameter == SweepParameter::kBeta) {
            for (double b : spec.grid) largest_beta = std::max(largest_beta, std::abs(b));
        }
        spec.fixed.trunc = default_truncation(largest_beta * largest_beta, target ? target->largest() : 0);
    }
    if (doc.contains("n_max")) {
        if (!doc["n_max"].is_number_integer()) throw io::ParseError("\"n_max\" must be an integer");
        const FockTruncation requested(doc["n_max"].get<int>());
        if (has_nu && !(requested == spec.fixed.trunc)) throw InvalidArgument("\"n_max\" disagrees with \"nu_in\"");
        spec.fixed.trunc = requested;
    }
    if (target) spec.target = target->state(spec.fixed.trunc);
    spec.validate();
    return spec;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::ifstream in(spec_path);
    if (!in) throw io::ParseError("cannot open " + spec_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw io::ParseError(spec_path + ": " + e.what());
    }
    const SweepSpec spec = parse_sweep_spec(doc, std::filesystem::path(spec_path).parent_path().string());
    const auto rows = run_sweep(spec);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].error != PointError::kNone) {
            err << "focksynth: row " << i << " (" << to_string(spec.parameter) << " = " << format_double(rows[i].value)
                << "): " << to_string(rows[i].error) << ": " << rows[i].message << '\n';
        }
    }
    std::ostringstream os;
    write_sweep_csv(os, spec.parameter, rows);
    emit(os.str(), out_path, out);
    return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
    EquivalenceOptions suite;
    double tau = 0.0;
    double eta = 1.0;
};

int cmd_verify(VerifyOptions v, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    if (sub.count("--tau") > 0) v.suite.tau = v.tau;
    if (sub.count("--eta") > 0) v.suite.eta = v.eta;
    const auto report = run_equivalence_suite(v.suite);

    out << std::left << std::setw(5) << "case" << std::setw(10) << "|alpha|" << std::setw(10) << "|beta|"
        << std::setw(7) << "mixed" << std::setw(12) << "tau" << std::setw(6) << "eta" << std::setw(6) << "n_max"
        << std::setw(14) << "p_click" << std::setw(12) << "dp" << std::setw(12) << "max_dev" << "status\n";
    for (const auto& c : report.cases) {
        out << std::left << std::setw(5) << c.index << std::setw(10) << format_double(std::abs(c.params.alpha), 4)
            << std::setw(10) << format_double(std::abs(c.beta), 4) << std::setw(7) << (c.mixed_input ? "yes" : "no")
            << std::setw(12) << format_double(c.params.cavity.tau, 4) << std::setw(6) << c.params.eta << std::setw(6)
            << c.params.trunc.n_max() << std::setw(14) << format_double(c.p_closed_form, 8) << std::setw(12)
            << format_double(std::abs(c.p_closed_form - c.p_oracle), 3) << std::setw(12)
            << format_double(c.max_deviation, 3) << (c.passed ? "ok" : "FAIL") << '\n';
    }
    const auto& worst = report.worst();
    out << "worst case " << worst.index << ": max_dev " << format_double(worst.max_deviation, 3) << " (tol "
        << format_double(v.suite.state_tolerance, 3) << "), dp "
        << format_double(std::abs(worst.p_closed_form - worst.p_oracle), 3) << " (tol "
        << format_double(v.suite.probability_tolerance, 3) << ")\n";
    if (!report.passed()) {
        err << "focksynth: oracle comparison failed; worst offender is case " << worst.index << '\n';
        out << "FAIL\n";
        return kVerifyFailed;
    }
    out << "PASS (" << report.cases.size() << " cases)\n";
    return kOk;
}

void add_device_options(CLI::App* sub, DeviceOptions& o) {
    sub->add_option("--alpha", o.alpha, "Coherent probe amplitude fed into the cavity (real)");
    sub->add_option("--psi", o.psi, "Cavity phase shift [rad]; accepts fractions of pi like pi/5");
    sub->add_option("--chi-t", o.chi_t, "Kerr phase per signal photon [rad]; accepts fractions of pi");
    sub->add_option("--tau", o.tau, "Beam-splitter transmissivity in (0, 1]");
    sub->add_option("--eta", o.eta, "Detector quantum efficiency in (0, 1]");
    sub->add_option("--n-max", o.n_max, "Signal Fock truncation (default: chosen from the input mean)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fock-state synthesizer: conditional states of a Kerr-coupled ring cavity", "focksynth"};
    app.require_subcommand(1);

    DeviceOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Click probability and conditional signal state");
    add_device_options(simulate, sim);
    simulate->get_option("--alpha")->required();
    simulate->get_option("--tau")->required();
    auto* beta_opt = simulate->add_option("--beta", sim.beta, "Coherent signal amplitude (real)");
    auto* nu_opt = simulate->add_option("--nu-in", sim.nu_in, "Signal input density matrix (JSON)");
    beta_opt->excludes(nu_opt);
    simulate->add_option("--target", sim.target, "Target state: fock:n or super:n1,n2");

    int figure_number = 0;
    std::string figure_format = "json";
    std::string figure_out;
    auto* figure = app.add_subcommand("figure", "Reproduce a published figure (2, 3 or 4)");
    figure->add_option("which", figure_number, "Figure number")->required()->check(CLI::IsMember({2, 3, 4}));
    figure->add_option("--format", figure_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    figure->add_option("--out", figure_out, "Write output to this file instead of stdout");

    DeviceOptions des;
    std::string design_target;
    auto* design = app.add_subcommand("design", "Phase and input amplitude for a target state");
    design->add_option("target", design_target, "fock:n or super:n1,n2")->required();
    add_device_options(design, des);
    design->get_option("--chi-t")->required();

    std::string sweep_path;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Parameter sweep from a JSON spec; CSV output");
    sweep->add_option("spec", sweep_path, "Sweep specification file")->required();
    sweep->add_option("--out", sweep_out, "Write output to this file instead of stdout");

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify", "Compare closed forms against the brute-force oracle");
    verify->add_option("--instances", ver.suite.instances, "Number of randomized instances");
    verify->add_option("--seed", ver.suite.seed, "Random seed");
    verify->add_option("--max-alpha", ver.suite.max_alpha, "Largest probe amplitude");
    verify->add_option("--max-beta", ver.suite.max_beta, "Largest signal amplitude");
    verify->add_option("--n-max", ver.suite.max_n_max, "Largest signal truncation");
    verify->add_option("--tau", ver.tau, "Fix tau for every instance");
    verify->add_option("--eta", ver.eta, "Fix eta for every instance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::string context;
        for (const auto* sub : app.get_subcommands()) context = sub->get_name() + ": ";
        err << "focksynth: " << context << e.what() << '\n';
        return kBadConfig;
    }

    try {
        if (*simulate) return cmd_simulate(sim, *simulate, out, err);
        if (*figure) return cmd_figure(figure_number, figure_format, figure_out, out, err);
        if (*design) return cmd_design(des, design_target, *design, out, err);
        if (*sweep) return cmd_sweep(sweep_path, sweep_out, out, err);
        if (*verify) return cmd_verify(ver, *verify, out, err);
    } catch (const NoClickProbability&) {
        return kNoClick;
    } catch (const Error& e) {
        err << "focksynth: " << e.what() << '\n';
        return kBadConfig;
    }
    return kBadConfig;
}

}  // namespace focksynth::cli
