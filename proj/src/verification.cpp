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

#include "focksynth/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "focksynth/analysis.hpp"
#include "focksynth/errors.hpp"
#include "focksynth/oracle.hpp"
#include "focksynth/parallel.hpp"

namespace focksynth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double severity(const EquivalenceCase& c, const EquivalenceOptions& o) {
    return std::max(c.max_deviation / o.state_tolerance,
                    std::abs(c.p_closed_form - c.p_oracle) / o.probability_tolerance);
}

EquivalenceCase run_case(const EquivalenceOptions& options, int index) {
    // One generator per instance keeps results independent of scheduling.
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(index));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    EquivalenceCase c;
    c.index = index;
    c.params.alpha = std::polar(0.2 + (options.max_alpha - 0.2) * unit(rng), kTwoPi * unit(rng));
    c.beta = std::polar(options.max_beta * unit(rng), kTwoPi * unit(rng));
    c.mixed_input = index % 3 == 2;
    const double log_tau = std::log(options.tau_lo) + (std::log(options.tau_hi) - std::log(options.tau_lo)) * unit(rng);
    c.params.cavity.tau = options.tau.value_or(std::exp(log_tau));
    c.params.cavity.psi = std::numbers::pi * (2.0 * unit(rng) - 1.0);
    c.params.cavity.chi_t = 1.2 * unit(rng);
    const double eta_draw = unit(rng) < 0.5 ? 0.2 : 1.0;
    c.params.eta = options.eta.value_or(eta_draw);
    const int n_max = 2 + static_cast<int>((options.max_n_max - 1) * unit(rng));
    c.params.trunc = FockTruncation(std::min(n_max, options.max_n_max));

    DensityMatrix nu = coherent_density_matrix(c.beta, c.params.trunc);
    if (c.mixed_input) {
        const DensityMatrix other = coherent_density_matrix(-c.beta, c.params.trunc);
        nu = DensityMatrix(0.5 * (nu.entries() + other.entries()));
    }

    const auto state = oracle::build_output_state(nu, c.params, oracle::CavityModeTruncation::for_alpha(c.params.alpha));
    c.p_oracle = oracle::oracle_click_probability(state, c.params.eta);
    try {
        const auto closed = conditional_state(nu, c.params);
        c.p_closed_form = closed.report.p_click;
        const auto reference = oracle::oracle_condition(state, c.params.eta);
        c.max_deviation = (closed.state.entries() - reference.state.entries()).cwiseAbs().maxCoeff();
    } catch (const NoClickProbability&) {
        c.p_closed_form = detection_probability(nu, c.params).p_click;
    }
    c.passed = severity(c, options) <= 1.0;
    return c;
}

}  // namespace

void EquivalenceOptions::validate() const {
    if (instances < 1) throw InvalidArgument("need at least one instance");
    if (!(max_alpha >= 0.2)) throw InvalidArgument("max alpha must be >= 0.2");
    if (!(max_beta >= 0.0)) throw InvalidArgument("max beta must be >= 0");
    if (max_n_max < 2) throw InvalidArgument("n_max must be >= 2");
    if (!(tau_lo > 0.0 && tau_lo <= tau_hi && tau_hi <= 1.0)) throw InvalidArgument("tau range must lie in (0, 1]");
    if (tau && !(*tau > 0.0 && *tau <= 1.0)) throw InvalidArgument("tau must lie in (0, 1]");
    if (eta && !(*eta > 0.0 && *eta <= 1.0)) throw InvalidArgument("eta must lie in (0, 1]");
}

bool EquivalenceReport::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
}

const EquivalenceCase& EquivalenceReport::worst() const {
    return *std::max_element(cases.begin(), cases.end(), [&](const auto& a, const auto& b) {
        return severity(a, options) < severity(b, options);
    });
}

EquivalenceReport run_equivalence_suite(const EquivalenceOptions& options, unsigned threads) {
    options.validate();
    EquivalenceReport report;
    report.options = options;
    report.cases.resize(static_cast<std::size_t>(options.instances));
    detail::parallel_for(report.cases.size(), threads == 0 ? thread_budget() : threads, [&](std::size_t i) {
        report.cases[i] = run_case(options, static_cast<int>(i));
    });
    return report;
}

}  // namespace focksynth
