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

#include "focksynth/figures.hpp"

#include <array>
#include <numbers>

#include "focksynth/errors.hpp"
#include "focksynth/parallel.hpp"

namespace focksynth::figures {

CalibratedSetup number_state_setup() {
    constexpr int kTarget = 4;
    const CoherentInput input{2.0};
    SynthesizerParams params{
        .cavity = {.tau = 1e-4, .psi = 0.04, .chi_t = 0.01},
        .alpha = 20.0,
        .eta = 1.0,
        .trunc = default_truncation(std::norm(input.beta), kTarget),
    };
    return {params, input, {1e-7, 1e-2}, {0.99885, 0.4905, 0.1997}, PureStateVector::basis(kTarget, params.trunc)};
}

CalibratedSetup superposition_setup() {
    // The third resonance at 30 photons is kept in the basis.
    constexpr std::array<int, 2> kComponents{10, 20};
    constexpr int kThirdResonance = 30;
    const CoherentInput input{equal_weight_amplitude(kComponents[0], kComponents[1])};
    SynthesizerParams params{
        .cavity = {.tau = 1e-4, .psi = 0.0, .chi_t = std::numbers::pi / 5.0},
        .alpha = 8.0,
        .eta = 1.0,
        .trunc = default_truncation(std::norm(input.beta), kThirdResonance),
    };
    return {params, input, {1e-5, 1e-1}, {0.205, 0.092}, PureStateVector::superposition(kComponents, params.trunc)};
}

namespace {

struct PanelRequest {
    std::string label;
    const CalibratedSetup* setup;
    std::string target;
    std::optional<double> published;  // calibrate tau against this, if set
    std::optional<double> fixed_tau;
    double alpha;
    double eta;
    bool magnitudes;
};

FigurePanel evaluate(const PanelRequest& req) {
    FigurePanel panel;
    panel.label = req.label;
    panel.target = req.target;
    panel.alpha = req.alpha;
    panel.eta = req.eta;
    const auto& setup = *req.setup;
    try {
        const DensityMatrix nu = materialize(setup.input, setup.params.trunc);
        SynthesizerParams params = setup.params;
        if (req.fixed_tau) {
            params.cavity.tau = *req.fixed_tau;
        } else {
            params.cavity.tau = tau_calibration(nu, params, *req.published, setup.bracket);
        }
        params.alpha = req.alpha;
        params.eta = req.eta;
        panel.tau = params.cavity.tau;
        const auto conditional = conditional_state(nu, params);
        panel.p_click = conditional.report.p_click;
        panel.fidelity = fidelity_to_pure(conditional.state, setup.target);
        panel.number_distribution = conditional.state.number_distribution();
        if (req.magnitudes) panel.magnitudes = conditional.state.entries().cwiseAbs();
    } catch (const Error& e) {
        panel.error = e.what();
    }
    return panel;
}

std::vector<FigurePanel> evaluate_all(const std::vector<PanelRequest>& requests, unsigned threads) {
    std::vector<FigurePanel> panels(requests.size());
    detail::parallel_for(panels.size(), threads == 0 ? thread_budget() : threads,
                         [&](std::size_t i) { panels[i] = evaluate(requests[i]); });
    return panels;
}

}  // namespace

FigureBundle reproduce_figure(int which, unsigned threads) {
    FigureBundle bundle;
    bundle.figure = which;
    const std::array<const char*, 3> labels{"a", "b", "c"};

    if (which == 2) {
        const auto setup = number_state_setup();
        std::vector<PanelRequest> requests;
        for (std::size_t i = 0; i < setup.published_p_click.size(); ++i) {
            requests.push_back({labels[i], &setup, "fock:4", setup.published_p_click[i], std::nullopt,
                                setup.params.alpha.real(), setup.params.eta, false});
        }
        bundle.panels = evaluate_all(requests, threads);
        for (std::size_t i = 0; i < bundle.panels.size(); ++i) bundle.panels[i].published_p_click = setup.published_p_click[i];
        return bundle;
    }

    if (which == 3) {
        const auto setup = superposition_setup();
        std::vector<PanelRequest> requests;
        for (std::size_t i = 0; i < setup.published_p_click.size(); ++i) {
            requests.push_back({labels[i], &setup, "super:10,20", setup.published_p_click[i], std::nullopt,
                                setup.params.alpha.real(), setup.params.eta, true});
        }
        bundle.panels = evaluate_all(requests, threads);
        for (std::size_t i = 0; i < bundle.panels.size(); ++i) bundle.panels[i].published_p_click = setup.published_p_click[i];
        return bundle;
    }

    if (which == 4) {
        // Both panels reuse the transmissivity of the 0.205 superposition panel.
        const auto setup = superposition_setup();
        const DensityMatrix nu = materialize(setup.input, setup.params.trunc);
        double tau = 0.0;
        try {
            tau = tau_calibration(nu, setup.params, setup.published_p_click.front(), setup.bracket);
        } catch (const Error& e) {
            for (const char* label : {"a", "b"}) {
                FigurePanel failed;
                failed.label = label;
                failed.target = "super:10,20";
                failed.error = e.what();
                bundle.panels.push_back(std::move(failed));
            }
            return bundle;
        }
        const std::vector<PanelRequest> requests{
            {"a", &setup, "super:10,20", std::nullopt, tau, setup.params.alpha.real(), kReducedEfficiency, true},
            {"b", &setup, "super:10,20", std::nullopt, tau, kReducedAlpha, 1.0, true},
        };
        bundle.panels = evaluate_all(requests, threads);
        for (auto& panel : bundle.panels) panel.published_p_click = kReducedClickProbability;
        return bundle;
    }

    throw InvalidArgument("figure must be 2, 3 or 4");
}

}  // namespace focksynth::figures
