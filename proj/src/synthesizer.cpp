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

#include "focksynth/synthesizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "focksynth/errors.hpp"

namespace focksynth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_matching(const DensityMatrix& nu_in, const SynthesizerParams& params) {
    if (nu_in.dim() != params.trunc.dim()) {
        throw DimensionMismatch("input state truncation does not match the synthesizer truncation");
    }
}

// e^w - 1 without cancellation for small |w|.
Complex expm1(Complex w) {
    const double half_sin = std::sin(0.5 * w.imag());
    return {std::expm1(w.real()) * std::cos(w.imag()) - 2.0 * half_sin * half_sin,
            std::exp(w.real()) * std::sin(w.imag())};
}

// 1 - exp(-eta |alpha|^2 |sigma_n|^2): click weight of the n-th component.
double click_weight(double eta_alpha_sq, double sigma_abs_sq) { return -std::expm1(-eta_alpha_sq * sigma_abs_sq); }

}  // namespace

void SynthesizerParams::validate() const {
    cavity.validate();
    if (!(eta > 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in (0, 1]");
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) throw InvalidArgument("alpha must be finite");
}

double pom_no_click_weight(int k, double eta) {
    if (k < 0) throw InvalidArgument("photon number must be >= 0");
    if (!(eta > 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in (0, 1]");
    return std::pow(1.0 - eta, k);
}

ClickReport detection_probability(const DensityMatrix& nu_in, const SynthesizerParams& params) {
    params.validate();
    check_matching(nu_in, params);
    const double eta_alpha_sq = params.eta * std::norm(params.alpha);
    double p = 0.0;
    for (int n = 0; n <= params.trunc.n_max(); ++n) {
        const double s = sigma_abs_sq(fock_phase(n, params.cavity), params.cavity.tau);
        p += nu_in(n, n).real() * click_weight(eta_alpha_sq, s);
    }
    p = std::clamp(p, 0.0, 1.0);
    return {p, 1.0 - p, params};
}

ConditionalState conditional_state(const DensityMatrix& nu_in, const SynthesizerParams& params) {
    ClickReport report = detection_probability(nu_in, params);
    if (!(report.p_click > kMinClickProbability)) throw NoClickProbability(report.p_click);

    const CavityResponse resp = cavity_response(params.cavity, params.trunc);
    const double alpha_sq = std::norm(params.alpha);
    const double eta_alpha_sq = params.eta * alpha_sq;
    const double tau = params.cavity.tau;
    const double finesse_ratio = (1.0 - tau) / tau;
    const double inv_p = 1.0 / report.p_click;
    const auto d = static_cast<Eigen::Index>(resp.size());

    Eigen::MatrixXcd out(d, d);
    for (Eigen::Index n = 0; n < d; ++n) {
        out(n, n) = nu_in(n, n).real() * click_weight(eta_alpha_sq, resp.sigma_abs_sq[n]) * inv_p;
        for (Eigen::Index m = n + 1; m < d; ++m) {
            const Complex nu_nm = nu_in(n, m);
            if (nu_nm == 0.0) {
                out(n, m) = out(m, n) = 0.0;
                continue;
            }
            const Complex overlap = resp.sigma[n] * std::conj(resp.sigma[m]);
            // e^{i delta} - 1 = 2 i sin(delta/2) e^{i delta/2}
            const double delta = resp.phase[n] - resp.phase[m];
            const Complex phase_minus_one = Complex(0.0, 2.0 * std::sin(0.5 * delta)) * std::polar(1.0, 0.5 * delta);
            const Complex exponent = alpha_sq * finesse_ratio * phase_minus_one * overlap;
            const Complex click = -expm1(-eta_alpha_sq * overlap);
            out(n, m) = nu_nm * std::exp(exponent) * click * inv_p;
            out(m, n) = std::conj(out(n, m));
        }
    }
    return {DensityMatrix(std::move(out)), std::move(report)};
}

DensityMatrix FilterPrediction::as_density_matrix() const {
    if (const auto* psi = std::get_if<PureStateVector>(&state)) return DensityMatrix::pure(*psi);
    return std::get<DensityMatrix>(state);
}

FilterPrediction ideal_filter_prediction(const DensityMatrix& nu_in, const CavityParams& params, double threshold,
                                         double population_floor) {
    const auto trunc = nu_in.truncation();
    std::vector<int> resonant = resonant_numbers(params, trunc, threshold);
    double largest = 0.0;
    for (int n : resonant) largest = std::max(largest, nu_in(n, n).real());
    std::erase_if(resonant, [&](int n) { return nu_in(n, n).real() < population_floor * largest; });
    if (resonant.empty()) throw NoResonance("no resonant photon number within the truncation");

    if (resonant.size() == 1) return {resonant, PureStateVector::basis(resonant.front(), trunc)};

    double weight = 0.0;
    for (int n : resonant) weight += nu_in(n, n).real();
    if (!(weight > 0.0)) throw NoResonance("resonant photon numbers carry no input population");
    const auto d = static_cast<Eigen::Index>(trunc.dim());
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(d, d);
    for (int n : resonant) {
        for (int m : resonant) block(n, m) = nu_in(n, m) / weight;
    }
    return {resonant, DensityMatrix(std::move(block))};
}

double equal_weight_amplitude(int n1, int n2) {
    if (n1 < 0 || n2 < 0) throw InvalidArgument("photon numbers must be >= 0");
    if (n1 == n2) throw InvalidArgument("equal-weight amplitude needs two distinct photon numbers");
    const double log_beta_sq = (log_factorial(n1) - log_factorial(n2)) / static_cast<double>(n1 - n2);
    return std::exp(0.5 * log_beta_sq);
}

double design_phase(int n_star, double chi_t) {
    if (n_star < 0) throw InvalidArgument("n_star must be >= 0");
    if (!std::isfinite(chi_t)) throw InvalidArgument("chi_t must be finite");
    const double raw = n_star * chi_t;
    double psi = std::fmod(raw, kTwoPi);
    if (psi < 0.0) psi += kTwoPi;
    // n* chi_t landing just below a multiple of 2 pi (rounding, or chi_t typed
    // with ten digits) is that multiple.
    if (kTwoPi - psi <= kPhaseSnapTolerance * std::max(1.0, std::abs(raw))) psi = 0.0;
    return psi;
}

double tau_calibration(const DensityMatrix& nu_in, const SynthesizerParams& params, double target_p_click,
                       TauBracket bracket) {
    if (!(bracket.lo > 0.0 && bracket.lo < bracket.hi && bracket.hi <= 1.0)) {
        throw InvalidArgument("tau bracket must satisfy 0 < lo < hi <= 1");
    }
    if (!(target_p_click >= 0.0 && target_p_click <= 1.0)) {
        throw TargetOutOfRange("target click probability must lie in [0, 1]");
    }
    SynthesizerParams trial = params;
    auto p_at = [&](double log_tau) {
        trial.cavity.tau = std::exp(log_tau);
        return detection_probability(nu_in, trial).p_click;
    };

    const double log_lo = std::log(bracket.lo);
    const double log_hi = std::log(bracket.hi);
    std::vector<double> log_taus(kCalibrationSamples);
    std::vector<double> probs(kCalibrationSamples);
    for (int i = 0; i < kCalibrationSamples; ++i) {
        log_taus[i] = log_lo + (log_hi - log_lo) * i / (kCalibrationSamples - 1);
        probs[i] = p_at(log_taus[i]);
    }
    const double direction = probs.back() >= probs.front() ? 1.0 : -1.0;
    constexpr double kFlatTolerance = 1e-12;
    for (int i = 1; i < kCalibrationSamples; ++i) {
        if (direction * (probs[i] - probs[i - 1]) < -kFlatTolerance) {
            throw NonMonotoneBracket("click probability is not monotone in tau over the bracket");
        }
    }
    const auto [lowest, highest] = std::minmax(probs.front(), probs.back());
    if (target_p_click < lowest - kCalibrationTolerance || target_p_click > highest + kCalibrationTolerance) {
        std::ostringstream why;
        why.precision(6);
        why << "target click probability " << target_p_click << " outside [" << lowest << ", " << highest
            << "] reachable in the bracket";
        throw TargetOutOfRange(why.str());
    }

    // Locate the sample interval, then bisect inside it.
    int i = 1;
    while (i < kCalibrationSamples - 1 && direction * (probs[i] - target_p_click) < 0.0) ++i;
    double a = log_taus[i - 1];
    double b = log_taus[i];
    double best = 0.5 * (a + b);
    double best_error = std::abs(p_at(best) - target_p_click);
    for (int iter = 0; iter < 200 && best_error > 1e-3 * kCalibrationTolerance && b - a > 1e-15; ++iter) {
        const double mid = 0.5 * (a + b);
        const double p = p_at(mid);
        const double err = std::abs(p - target_p_click);
        if (err < best_error) {
            best = mid;
            best_error = err;
        }
        if (direction * (p - target_p_click) < 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    if (best_error > kCalibrationTolerance) {
        throw TargetOutOfRange("bisection did not reach the target click probability");
    }
    return std::exp(best);
}

}  // namespace focksynth
