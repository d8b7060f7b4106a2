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

#include <variant>
#include <vector>

#include "focksynth/cavity.hpp"
#include "focksynth/fockspace.hpp"

namespace focksynth {

/// Full device configuration. The signal input state is passed separately.
struct SynthesizerParams {
    CavityParams cavity;
    Complex alpha{0.0, 0.0};  ///< coherent amplitude fed into the cavity
    double eta = 1.0;         ///< detector quantum efficiency, in (0, 1]
    FockTruncation trunc{0};

    void validate() const;
};

/// Outcome probabilities of the on/off detector at the cavity output.
struct ClickReport {
    double p_click = 0.0;
    double p_no_click = 1.0;
    SynthesizerParams params;
};

struct ConditionalState {
    DensityMatrix state;
    ClickReport report;
};

/// Conditioning below this click probability is refused.
inline constexpr double kMinClickProbability = 1e-15;

/// Weight (1 - eta)^k of |k><k| in the no-click POM element.
double pom_no_click_weight(int k, double eta);

/// P_click = sum_n nu_nn (1 - exp(-eta |alpha|^2 |sigma_n|^2)).
ClickReport detection_probability(const DensityMatrix& nu_in, const SynthesizerParams& params);

/// Signal-mode state conditioned on a detector click.
///
/// Off-diagonals use the combined exponent
///   |alpha|^2 (kappa_n kappa_m* + sigma_n sigma_m* - 1)
///     = |alpha|^2 (1 - tau)/tau (e^{i(phi_n - phi_m)} - 1) sigma_n sigma_m*,
/// whose real part is never positive, and 1 - e^{-z} is taken through an
/// expm1 path. The diagonal is written from its closed form directly.
///
/// Throws NoClickProbability if p_click <= kMinClickProbability.
ConditionalState conditional_state(const DensityMatrix& nu_in, const SynthesizerParams& params);

/// High-finesse prediction for the conditional state: the input restricted
/// to the resonant photon numbers and renormalized. A single resonance gives
/// the number state itself.
struct FilterPrediction {
    std::vector<int> resonant;
    std::variant<PureStateVector, DensityMatrix> state;

    DensityMatrix as_density_matrix() const;
};

/// Resonances whose input population is below `population_floor` times the
/// largest resonant population are ignored. Throws NoResonance if none remain.
FilterPrediction ideal_filter_prediction(const DensityMatrix& nu_in, const CavityParams& params,
                                         double threshold = kDefaultResonanceThreshold,
                                         double population_floor = 0.0);

/// Coherent amplitude |beta| for which |n1> and |n2> carry equal weight:
/// |beta|^2 = (n1! / n2!)^{1 / (n1 - n2)}.
double equal_weight_amplitude(int n1, int n2);

/// Relative distance below a multiple of 2 pi that design_phase treats as 0.
inline constexpr double kPhaseSnapTolerance = 1e-9;

/// psi = n_star * chi_t reduced to [0, 2 pi), making n_star resonant.
double design_phase(int n_star, double chi_t);

struct TauBracket {
    double lo;
    double hi;
};

/// Number of log-spaced points used to check monotonicity before bisecting.
inline constexpr int kCalibrationSamples = 32;
inline constexpr double kCalibrationTolerance = 1e-6;

/// Beam-splitter transmissivity reproducing a target click probability.
/// `params.cavity.tau` is ignored. Bisection in log(tau).
double tau_calibration(const DensityMatrix& nu_in, const SynthesizerParams& params,
                       double target_p_click, TauBracket bracket);

}  // namespace focksynth
