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

#include "focksynth/cavity.hpp"

#include <cmath>

#include "focksynth/errors.hpp"

namespace focksynth {

namespace {

void check_tau(double tau) {
    if (!(tau > 0.0 && tau <= 1.0)) throw InvalidArgument("tau must lie in (0, 1]");
}

// 1 - e^{i phi}(1 - tau), with 1 - cos(phi) written as 2 sin^2(phi/2).
Complex denominator(double phi, double tau) {
    const double s = std::sin(0.5 * phi);
    return {tau + 2.0 * (1.0 - tau) * s * s, -(1.0 - tau) * std::sin(phi)};
}

}  // namespace

void CavityParams::validate() const {
    check_tau(tau);
    if (!std::isfinite(psi)) throw InvalidArgument("psi must be finite");
    if (!std::isfinite(chi_t)) throw InvalidArgument("chi_t must be finite");
}

double fock_phase(int n, const CavityParams& params) { return params.psi - params.chi_t * n; }

CavityCoefficients cavity_coefficients(double phi, double tau) {
    check_tau(tau);
    const double s = std::sin(0.5 * phi);
    const Complex phase_minus_one{-2.0 * s * s, std::sin(phi)};
    const Complex d = denominator(phi, tau);
    return {std::sqrt(1.0 - tau) * phase_minus_one / d, tau / d};
}

double sigma_abs_sq(double phi, double tau) {
    check_tau(tau);
    const double s = std::sin(0.5 * phi);
    return 1.0 / (1.0 + 4.0 * (1.0 - tau) / (tau * tau) * s * s);
}

double sigma_argument(double phi, double tau) {
    check_tau(tau);
    const Complex d = denominator(phi, tau);
    // The real part of the denominator is >= tau > 0, so atan2 and the
    // single-branch arctan agree.
    return std::atan2(-d.imag(), d.real());
}

CavityResponse cavity_response(const CavityParams& params, FockTruncation trunc) {
    params.validate();
    CavityResponse r;
    r.tau = params.tau;
    const std::size_t d = trunc.dim();
    r.phase.resize(d);
    r.kappa.resize(d);
    r.sigma.resize(d);
    r.sigma_abs_sq.resize(d);
    for (std::size_t n = 0; n < d; ++n) {
        const double phi = fock_phase(static_cast<int>(n), params);
        const auto coeffs = cavity_coefficients(phi, params.tau);
        r.phase[n] = phi;
        r.kappa[n] = coeffs.kappa;
        r.sigma[n] = coeffs.sigma;
        r.sigma_abs_sq[n] = sigma_abs_sq(phi, params.tau);
    }
    return r;
}

std::vector<int> resonant_numbers(const CavityParams& params, FockTruncation trunc, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) throw InvalidArgument("resonance threshold must lie in (0, 1)");
    params.validate();
    std::vector<int> out;
    for (int n = 0; n <= trunc.n_max(); ++n) {
        if (sigma_abs_sq(fock_phase(n, params), params.tau) >= threshold) out.push_back(n);
    }
    return out;
}

}  // namespace focksynth
