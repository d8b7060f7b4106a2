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

// Acceptance checks for focksynth. Prints one PASS/FAIL line per criterion
// and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "focksynth/analysis.hpp"
#include "focksynth/cavity.hpp"
#include "focksynth/errors.hpp"
#include "focksynth/figures.hpp"
#include "focksynth/fockspace.hpp"
#include "focksynth/synthesizer.hpp"
#include "focksynth/verification.hpp"
#include "test_util.hpp"

using namespace focksynth;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

Verdict superposition_small_tau() {
    const auto start = Clock::now();
    const double beta = equal_weight_amplitude(10, 20);
    SynthesizerParams p;
    p.cavity = {.tau = 1e-4, .psi = 0.0, .chi_t = std::numbers::pi / 5};
    p.alpha = 8.0;
    p.eta = 1.0;
    p.trunc = default_truncation(beta * beta, 30);
    const double p1 = detection_probability(coherent_density_matrix(beta, p.trunc), p).p_click;
    const double elapsed = seconds_since(start);
    return {p1 >= 0.089 && p1 <= 0.095 && elapsed < 1.0, fmt("P1=%.6f in [0.089,0.095], %.3fs < 1s", p1, elapsed)};
}

Verdict figure_round_trip() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (int which : {2, 3}) {
        for (const auto& panel : figures::reproduce_figure(which).panels) {
            const bool good = !panel.error && panel.published_p_click &&
                              std::abs(panel.p_click - *panel.published_p_click) <= 1e-3;
            ok = ok && good;
            detail += fmt("%d%s:%.5f/%.5f ", which, panel.label.c_str(), panel.p_click,
                          panel.published_p_click.value_or(NAN));
        }
    }
    const double elapsed = seconds_since(start);
    return {ok && elapsed < 30.0, detail + fmt("%.2fs < 30s", elapsed)};
}

Verdict efficiency_numbers() {
    const auto setup = figures::superposition_setup();
    const auto nu = materialize(setup.input, setup.params.trunc);
    auto base = setup.params;
    base.cavity.tau = tau_calibration(nu, base, 0.205, setup.bracket);

    const auto reference = conditional_state(nu, base);
    auto low_eta = base;
    low_eta.eta = 0.2;
    const auto reduced = conditional_state(nu, low_eta);
    auto low_alpha = base;
    low_alpha.alpha = 3.58;
    const double p_alpha = detection_probability(nu, low_alpha).p_click;

    const double f_ref = fidelity_to_pure(reference.state, setup.target);
    const double f_eta = fidelity_to_pure(reduced.state, setup.target);
    const bool ok = std::abs(reduced.report.p_click - 0.116) <= 0.003 && std::abs(p_alpha - 0.116) <= 0.003 &&
                    f_eta > f_ref;
    return {ok, fmt("tau=%.6g P1(eta=0.2)=%.5f P1(alpha=3.58)=%.5f F: %.4f > %.4f", base.cavity.tau,
                    reduced.report.p_click, p_alpha, f_eta, f_ref)};
}

Verdict equal_weight() {
    const double beta = equal_weight_amplitude(10, 20);
    return {std::abs(beta - 3.9024) <= 5e-4, fmt("beta=%.10f", beta)};
}

Verdict filtering_limit() {
    const auto setup = figures::number_state_setup();
    auto p = setup.params;
    p.cavity.tau = 1e-8;
    const auto out = conditional_state(materialize(setup.input, p.trunc), p);
    const auto m = metrics(out.state, setup.target);
    return {*m.fidelity >= 0.999 && m.number_distribution[4] >= 0.999,
            fmt("F=%.12f P(4)=%.12f", *m.fidelity, m.number_distribution[4])};
}

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    const auto report = run_equivalence_suite(EquivalenceOptions{});
    const double elapsed = seconds_since(start);
    double worst_state = 0.0;
    double worst_p = 0.0;
    bool both_eta = false;
    bool low_eta = false;
    bool high_eta = false;
    for (const auto& c : report.cases) {
        worst_state = std::max(worst_state, c.max_deviation);
        worst_p = std::max(worst_p, std::abs(c.p_closed_form - c.p_oracle));
        low_eta = low_eta || c.params.eta == 0.2;
        high_eta = high_eta || c.params.eta == 1.0;
    }
    both_eta = low_eta && high_eta;
    const bool ok = report.cases.size() == 50 && worst_state <= 1e-9 && worst_p <= 1e-10 && both_eta &&
                    elapsed < 120.0;
    return {ok, fmt("%zu cases, state dev %.3g <= 1e-9, P1 dev %.3g <= 1e-10, %.2fs < 120s", report.cases.size(),
                    worst_state, worst_p, elapsed)};
}

Verdict invariants() {
    auto rng = testing::make_rng(700);
    int points = 0;
    double worst_trace = 0.0, worst_herm = 0.0, worst_eig = 0.0, worst_diag = 0.0;
    while (points < 200) {
        SynthesizerParams p;
        p.cavity = {.tau = testing::log_uniform(rng, 1e-6, 1.0),
                    .psi = testing::uniform(rng, 0.0, 2 * std::numbers::pi),
                    .chi_t = testing::uniform(rng, 0.0, std::numbers::pi)};
        p.alpha = std::polar(testing::uniform(rng, 0.1, 10.0), testing::uniform(rng, 0.0, 2 * std::numbers::pi));
        p.eta = testing::uniform(rng, 0.05, 1.0);
        DensityMatrix nu = DensityMatrix::diagonal(std::vector<double>{1.0});
        if (points % 2 == 0) {
            const Complex beta = std::polar(testing::uniform(rng, 0.0, 4.0), testing::uniform(rng, 0.0, 6.3));
            p.trunc = default_truncation(std::norm(beta));
            nu = coherent_density_matrix(beta, p.trunc);
        } else {
            p.trunc = FockTruncation(static_cast<int>(testing::uniform(rng, 1.0, 30.0)));
            nu = testing::random_mixed_state(rng, p.trunc.n_max());
        }
        std::optional<ConditionalState> result;
        try {
            result = conditional_state(nu, p);
        } catch (const NoClickProbability&) {
            continue;
        }
        const auto& out = *result;
        ++points;
        worst_trace = std::max(worst_trace, out.state.trace_defect());
        worst_herm = std::max(worst_herm, out.state.hermiticity_defect());
        worst_eig = std::min(worst_eig, out.state.min_eigenvalue());
        const double a2 = std::norm(p.alpha);
        for (int n = 0; n <= p.trunc.n_max(); ++n) {
            const double s2 = std::norm(cavity_coefficients(fock_phase(n, p.cavity), p.cavity.tau).sigma);
            const double expected = nu(n, n).real() * -std::expm1(-p.eta * a2 * s2) / out.report.p_click;
            worst_diag = std::max(worst_diag, std::abs(out.state(n, n).real() - expected));
        }
    }
    double worst_unitarity = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double tau = testing::log_uniform(rng, 1e-10, 1.0);
        const double phi = testing::uniform(rng, -4 * std::numbers::pi, 4 * std::numbers::pi);
        const auto c = cavity_coefficients(phi, tau);
        worst_unitarity = std::max(worst_unitarity, std::abs(std::norm(c.kappa) + std::norm(c.sigma) - 1.0));
    }
    const bool ok = worst_trace <= 1e-10 && worst_herm <= 1e-12 && worst_eig >= -1e-9 && worst_diag <= 1e-12 &&
                    worst_unitarity <= 1e-12;
    return {ok, fmt("trace %.2g, herm %.2g, min eig %.2g, diag %.2g, |k|^2+|s|^2-1 %.2g", worst_trace, worst_herm,
                    worst_eig, worst_diag, worst_unitarity)};
}

Verdict scaling_law() {
    auto rng = testing::make_rng(800);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        SynthesizerParams p;
        p.cavity = {.tau = testing::log_uniform(rng, 1e-6, 1.0),
                    .psi = testing::uniform(rng, 0.0, 2 * std::numbers::pi),
                    .chi_t = testing::uniform(rng, 0.0, std::numbers::pi)};
        p.alpha = std::polar(testing::uniform(rng, 0.1, 20.0), testing::uniform(rng, 0.0, 2 * std::numbers::pi));
        p.eta = testing::uniform(rng, 0.01, 1.0);
        p.trunc = FockTruncation(static_cast<int>(testing::uniform(rng, 0.0, 40.0)));
        const auto nu = testing::random_mixed_state(rng, p.trunc.n_max());
        auto q = p;
        q.alpha = std::sqrt(p.eta) * p.alpha;
        q.eta = 1.0;
        worst = std::max(worst, std::abs(detection_probability(nu, p).p_click - detection_probability(nu, q).p_click));
    }
    return {worst <= 1e-12, fmt("100 instances, max |dP1| = %.3g", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"AC1 superposition P1 at tau=1e-4", superposition_small_tau},
        {"AC2 figure calibration round-trip", figure_round_trip},
        {"AC3 detector efficiency and probe amplitude", efficiency_numbers},
        {"AC4 equal-weight amplitude", equal_weight},
        {"AC5 filtering limit", filtering_limit},
        {"AC6 oracle equivalence", oracle_equivalence},
        {"AC7 invariant suite", invariants},
        {"AC8 probability scaling law", scaling_law},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        std::printf("%s  %s  (%s)\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
