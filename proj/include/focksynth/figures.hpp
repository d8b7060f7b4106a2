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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "focksynth/analysis.hpp"
#include "focksynth/synthesizer.hpp"

// Published configurations of the number-state and superposition filters.
// Transmissivities are never stored: each panel recovers its tau from the
// published click probability with tau_calibration().
namespace focksynth::figures {

/// A published operating point whose tau must be recovered.
struct CalibratedSetup {
    SynthesizerParams params;  ///< params.cavity.tau is a placeholder
    CoherentInput input;
    TauBracket bracket;
    std::vector<double> published_p_click;
    PureStateVector target;
};

/// |4> filter: chi_t = 0.01, psi = 0.04, alpha = 20, beta = 2.
/// Published P_click = 0.99885, 0.4905, 0.1997.
CalibratedSetup number_state_setup();

/// (|10> + |20>)/sqrt 2: chi_t = pi/5, psi = 0, alpha = 8, beta = (20!/10!)^{1/20}.
/// Published P_click = 0.205, 0.092.
CalibratedSetup superposition_setup();

/// Detector efficiency and probe amplitude used in the imperfect-detector
/// comparison, both at the tau of the 0.205 superposition panel.
inline constexpr double kReducedEfficiency = 0.2;
inline constexpr double kReducedAlpha = 3.58;
inline constexpr double kReducedClickProbability = 0.116;

struct FigurePanel {
    std::string label;
    double tau = 0.0;
    double alpha = 0.0;
    double eta = 1.0;
    std::optional<double> published_p_click;
    double p_click = 0.0;
    double fidelity = 0.0;
    std::string target;
    std::vector<double> number_distribution;
    /// |rho_nm|, filled for the superposition figures.
    std::optional<Eigen::MatrixXd> magnitudes;
    std::optional<std::string> error;
};

struct FigureBundle {
    int figure = 0;
    std::vector<FigurePanel> panels;
};

/// Reproduces figure 2, 3 or 4. Throws InvalidArgument for other numbers;
/// calibration failures are reported in the affected panel.
FigureBundle reproduce_figure(int which, unsigned threads = 0);

}  // namespace focksynth::figures
