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

#include <vector>

#include "focksynth/fockspace.hpp"

namespace focksynth {

/// Ring cavity with two identical beam splitters, a tunable phase shifter
/// and a cross-Kerr coupling to the signal mode.
struct CavityParams {
    double tau = 1e-4;   ///< beam-splitter transmissivity, in (0, 1]
    double psi = 0.0;    ///< tunable phase shift [rad]
    double chi_t = 0.0;  ///< Kerr phase per signal photon [rad]

    void validate() const;
};

struct CavityCoefficients {
    Complex kappa;  ///< reflectivity, input a1 -> output b1
    Complex sigma;  ///< transmissivity, input a1 -> detected output b2
};

/// Per-photon-number cavity response for n = 0 ... n_max.
struct CavityResponse {
    double tau = 0.0;
    std::vector<double> phase;         ///< round-trip phase psi - chi_t n
    std::vector<Complex> kappa;
    std::vector<Complex> sigma;
    std::vector<double> sigma_abs_sq;  ///< |sigma_n|^2 from the closed form

    std::size_t size() const noexcept { return phase.size(); }
};

inline constexpr double kDefaultResonanceThreshold = 0.5;

/// Round-trip phase psi - chi_t * n. No range reduction is applied.
double fock_phase(int n, const CavityParams& params);

/// kappa(phi) and sigma(phi) of the ring cavity. The shared denominator
/// 1 - e^{i phi}(1 - tau) is expanded with half-angle sines so it stays
/// accurate for tau down to ~1e-12 near resonance.
CavityCoefficients cavity_coefficients(double phi, double tau);

/// |sigma(phi)|^2 = 1 / (1 + 4 (1 - tau) / tau^2 sin^2(phi / 2)).
double sigma_abs_sq(double phi, double tau);

/// Argument of sigma(phi).
double sigma_argument(double phi, double tau);

CavityResponse cavity_response(const CavityParams& params, FockTruncation trunc);

/// Photon numbers n <= n_max with |sigma_n|^2 >= threshold, ascending.
std::vector<int> resonant_numbers(const CavityParams& params, FockTruncation trunc,
                                  double threshold = kDefaultResonanceThreshold);

}  // namespace focksynth
