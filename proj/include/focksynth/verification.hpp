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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "focksynth/synthesizer.hpp"

namespace focksynth {

/// Randomized comparison of conditional_state() against the brute-force
/// oracle at desk scale.
struct EquivalenceOptions {
    int instances = 50;
    std::uint64_t seed = 0x5eed'f0c5;
    double max_alpha = 3.0;
    double max_beta = 2.0;
    int max_n_max = 12;
    double tau_lo = 1e-3;
    double tau_hi = 0.3;
    std::optional<double> tau;  ///< fixes tau for every instance
    std::optional<double> eta;  ///< fixes eta; otherwise drawn from {0.2, 1}
    double state_tolerance = 1e-9;
    double probability_tolerance = 1e-10;

    void validate() const;
};

struct EquivalenceCase {
    int index = 0;
    SynthesizerParams params;
    Complex beta;
    bool mixed_input = false;  ///< equal mixture of |beta> and |-beta>
    double p_closed_form = 0.0;
    double p_oracle = 0.0;
    double max_deviation = 0.0;  ///< max elementwise |closed form - oracle|
    bool passed = false;
};

struct EquivalenceReport {
    std::vector<EquivalenceCase> cases;
    EquivalenceOptions options;

    bool passed() const;
    /// Case with the largest state deviation relative to its tolerance.
    const EquivalenceCase& worst() const;
};

EquivalenceReport run_equivalence_suite(const EquivalenceOptions& options, unsigned threads = 0);

}  // namespace focksynth
