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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "focksynth/analysis.hpp"
#include "focksynth/cavity.hpp"
#include "focksynth/errors.hpp"
#include "focksynth/figures.hpp"
#include "focksynth/fockspace.hpp"
#include "focksynth/oracle.hpp"
#include "focksynth/synthesizer.hpp"
#include "focksynth/verification.hpp"

namespace py = pybind11;
using namespace focksynth;

namespace {

using Vector = Eigen::VectorXcd;

PureStateVector to_pure(const Vector& v) { return PureStateVector(std::vector<Complex>(v.data(), v.data() + v.size())); }

Vector to_vector(const PureStateVector& psi) {
    const auto c = psi.coefficients();
    return Eigen::Map<const Vector>(c.data(), static_cast<Eigen::Index>(c.size()));
}

py::dict to_dict(const StateMetrics& m) {
    py::dict d;
    d["fidelity"] = m.fidelity ? py::cast(*m.fidelity) : py::none();
    d["purity"] = m.purity;
    d["trace_defect"] = m.trace_defect;
    d["hermiticity_defect"] = m.hermiticity_defect;
    d["min_eigenvalue"] = m.min_eigenvalue;
    d["number_distribution"] = m.number_distribution;
    return d;
}

SynthesizerParams make_params(double tau, Complex alpha, double psi, double chi_t, double eta, int n_max) {
    SynthesizerParams p{.cavity = {.tau = tau, .psi = psi, .chi_t = chi_t}, .alpha = alpha, .eta = eta,
                        .trunc = FockTruncation(n_max)};
    p.validate();
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Conditional Fock-state synthesis with a Kerr ring cavity";

    const auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<NoClickProbability>(m, "NoClickProbability", error.ptr());

    py::class_<SynthesizerParams>(m, "Params")
        .def(py::init(&make_params), py::kw_only(), py::arg("tau"), py::arg("alpha"), py::arg("psi") = 0.0,
             py::arg("chi_t") = 0.0, py::arg("eta") = 1.0, py::arg("n_max"))
        .def_property_readonly("tau", [](const SynthesizerParams& p) { return p.cavity.tau; })
        .def_property_readonly("psi", [](const SynthesizerParams& p) { return p.cavity.psi; })
        .def_property_readonly("chi_t", [](const SynthesizerParams& p) { return p.cavity.chi_t; })
        .def_property_readonly("alpha", [](const SynthesizerParams& p) { return p.alpha; })
        .def_property_readonly("eta", [](const SynthesizerParams& p) { return p.eta; })
        .def_property_readonly("n_max", [](const SynthesizerParams& p) { return p.trunc.n_max(); })
        .def("__repr__", [](const SynthesizerParams& p) {
            return "Params(tau=" + std::to_string(p.cavity.tau) + ", n_max=" + std::to_string(p.trunc.n_max()) + ")";
        });

    m.def("default_truncation", [](double mean, int largest) { return default_truncation(mean, largest).n_max(); },
          py::arg("mean"), py::arg("largest_required") = 0, "Signal cutoff n_max for a given mean photon number.");
    m.def("coherent_density_matrix",
          [](Complex beta, int n_max) { return coherent_density_matrix(beta, FockTruncation(n_max)).entries(); },
          py::arg("beta"), py::arg("n_max"));
    m.def("fock_state", [](int n, int n_max) { return to_vector(PureStateVector::basis(n, FockTruncation(n_max))); },
          py::arg("n"), py::arg("n_max"));
    m.def("superposition",
          [](const std::vector<int>& numbers, int n_max) {
              return to_vector(PureStateVector::superposition(numbers, FockTruncation(n_max)));
          },
          py::arg("numbers"), py::arg("n_max"));

    m.def("cavity_coefficients",
          [](double phi, double tau) {
              const auto c = cavity_coefficients(phi, tau);
              return py::make_tuple(c.kappa, c.sigma);
          },
          py::arg("phi"), py::arg("tau"), "(kappa, sigma) at round-trip phase phi.");
    m.def("sigma_abs_sq", &sigma_abs_sq, py::arg("phi"), py::arg("tau"));
    m.def("resonant_numbers",
          [](double tau, double psi, double chi_t, int n_max, double threshold) {
              return resonant_numbers(CavityParams{tau, psi, chi_t}, FockTruncation(n_max), threshold);
          },
          py::kw_only(), py::arg("tau"), py::arg("psi") = 0.0, py::arg("chi_t"), py::arg("n_max"),
          py::arg("threshold") = kDefaultResonanceThreshold);

    m.def("detection_probability",
          [](const Eigen::MatrixXcd& nu, const SynthesizerParams& p) {
              return detection_probability(DensityMatrix(nu), p).p_click;
          },
          py::arg("nu"), py::arg("params"));
    m.def("conditional_state",
          [](const Eigen::MatrixXcd& nu, const SynthesizerParams& p) {
              auto r = conditional_state(DensityMatrix(nu), p);
              return py::make_tuple(r.state.entries(), r.report.p_click);
          },
          py::arg("nu"), py::arg("params"), "(rho_out, p_click) conditioned on a click.");
    m.def("oracle_condition",
          [](const Eigen::MatrixXcd& nu, const SynthesizerParams& p) {
              const auto state =
                  oracle::build_output_state(DensityMatrix(nu), p, oracle::CavityModeTruncation::for_alpha(p.alpha));
              auto r = oracle::oracle_condition(state, p.eta);
              return py::make_tuple(r.state.entries(), r.p_click);
          },
          py::arg("nu"), py::arg("params"), "Brute-force three-mode evaluation of conditional_state.");

    m.def("equal_weight_amplitude", &equal_weight_amplitude, py::arg("n1"), py::arg("n2"));
    m.def("design_phase", &design_phase, py::arg("n_star"), py::arg("chi_t"));
    m.def("tau_calibration",
          [](const Eigen::MatrixXcd& nu, const SynthesizerParams& p, double target, double lo, double hi) {
              return tau_calibration(DensityMatrix(nu), p, target, TauBracket{lo, hi});
          },
          py::arg("nu"), py::arg("params"), py::arg("target_p_click"), py::arg("lo"), py::arg("hi"));

    m.def("fidelity",
          [](const Eigen::MatrixXcd& rho, const Vector& target) {
              return fidelity_to_pure(DensityMatrix(rho), to_pure(target));
          },
          py::arg("rho"), py::arg("target"));
    m.def("purity", [](const Eigen::MatrixXcd& rho) { return purity(DensityMatrix(rho)); }, py::arg("rho"));
    m.def("metrics",
          [](const Eigen::MatrixXcd& rho, std::optional<Vector> target) {
              std::optional<PureStateVector> t;
              if (target) t = to_pure(*target);
              return to_dict(metrics(DensityMatrix(rho), t));
          },
          py::arg("rho"), py::arg("target") = py::none());

    m.def("sweep",
          [](const std::string& parameter, std::vector<double> grid, const SynthesizerParams& fixed,
             std::optional<Complex> beta, std::optional<Eigen::MatrixXcd> nu, std::optional<Vector> target,
             unsigned threads) {
              const auto which = parse_sweep_parameter(parameter);
              if (!which) throw InvalidArgument("unknown sweep parameter '" + parameter + "'");
              if (beta.has_value() == nu.has_value()) throw InvalidArgument("give exactly one of beta or nu");
              SweepSpec spec{*which, std::move(grid), fixed,
                             beta ? InputState(CoherentInput{*beta}) : InputState(DensityMatrix(*nu)), std::nullopt};
              if (target) spec.target = to_pure(*target);
              py::list rows;
              for (const auto& row : run_sweep(spec, threads)) {
                  py::dict d;
                  d["value"] = row.value;
                  d["p_click"] = row.p_click ? py::cast(*row.p_click) : py::none();
                  d["metrics"] = row.metrics ? py::object(to_dict(*row.metrics)) : py::none();
                  d["error"] = std::string(to_string(row.error));
                  d["message"] = row.message;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("parameter"), py::arg("grid"), py::arg("fixed"), py::kw_only(), py::arg("beta") = py::none(),
          py::arg("nu") = py::none(), py::arg("target") = py::none(), py::arg("threads") = 0);

    m.def("reproduce_figure",
          [](int which, unsigned threads) {
              py::list panels;
              for (const auto& p : figures::reproduce_figure(which, threads).panels) {
                  py::dict d;
                  d["label"] = p.label;
                  d["tau"] = p.tau;
                  d["alpha"] = p.alpha;
                  d["eta"] = p.eta;
                  d["published_p_click"] = p.published_p_click ? py::cast(*p.published_p_click) : py::none();
                  d["p_click"] = p.p_click;
                  d["fidelity"] = p.fidelity;
                  d["target"] = p.target;
                  d["number_distribution"] = p.number_distribution;
                  d["magnitudes"] = p.magnitudes ? py::cast(*p.magnitudes) : py::none();
                  d["error"] = p.error ? py::cast(*p.error) : py::none();
                  panels.append(d);
              }
              return panels;
          },
          py::arg("which"), py::arg("threads") = 0);

    m.def("verify",
          [](int instances, std::uint64_t seed, unsigned threads) {
              EquivalenceOptions options;
              options.instances = instances;
              options.seed = seed;
              const auto report = run_equivalence_suite(options, threads);
              py::dict d;
              d["passed"] = report.passed();
              d["instances"] = report.cases.size();
              double worst_p = 0.0;
              double worst_state = 0.0;
              for (const auto& c : report.cases) {
                  worst_p = std::max(worst_p, std::abs(c.p_closed_form - c.p_oracle));
                  worst_state = std::max(worst_state, c.max_deviation);
              }
              d["max_state_deviation"] = worst_state;
              d["max_probability_deviation"] = worst_p;
              return d;
          },
          py::arg("instances") = 50, py::arg("seed") = EquivalenceOptions{}.seed, py::arg("threads") = 0,
          "Randomized closed-form versus oracle comparison.");

    m.attr("__version__") = FOCKSYNTH_VERSION;
}
