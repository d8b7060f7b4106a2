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

#include "focksynth/oracle.hpp"

#include <cmath>
#include <sstream>

#include "focksynth/errors.hpp"

namespace focksynth::oracle {

namespace {

constexpr double kMaxTraceDeficit = 1e-8;

// Coherent-state coefficients by the plain recurrence c_{k+1} = c_k z / sqrt(k+1).
Eigen::VectorXcd coherent_vector(Complex z, int n_max) {
    Eigen::VectorXcd c(n_max + 1);
    c(0) = std::exp(-0.5 * std::norm(z));
    for (int k = 0; k < n_max; ++k) c(k + 1) = c(k) * z / std::sqrt(static_cast<double>(k + 1));
    return c;
}

// Ring-cavity input/output relations taken literally:
//   kappa = sqrt(1 - tau)(e^{i phi} - 1) / (1 - e^{i phi}(1 - tau)),
//   sigma = tau / (1 - e^{i phi}(1 - tau)).
struct RingCoefficients {
    Complex kappa;
    Complex sigma;
};

RingCoefficients ring_coefficients(double phi, double tau) {
    const Complex e = std::exp(Complex(0.0, phi));
    const Complex denom = 1.0 - e * (1.0 - tau);
    return {std::sqrt(1.0 - tau) * (e - 1.0) / denom, tau / denom};
}

std::vector<double> click_element(int b2_max, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in (0, 1]");
    std::vector<double> w(b2_max + 1);
    for (int k = 0; k <= b2_max; ++k) w[k] = 1.0 - std::pow(1.0 - eta, k);
    return w;
}

}  // namespace

CavityModeTruncation CavityModeTruncation::for_alpha(Complex alpha) {
    const double mean = std::norm(alpha);
    const int cutoff = static_cast<int>(std::ceil(mean + 10.0 * std::sqrt(mean) + 15.0));
    return {cutoff, cutoff};
}

TripartiteState::TripartiteState(Eigen::MatrixXcd nu, std::vector<Eigen::MatrixXcd> cavity_amplitudes)
    : nu_(std::move(nu)), cavity_amplitudes_(std::move(cavity_amplitudes)) {
    if (cavity_amplitudes_.empty() || static_cast<Eigen::Index>(cavity_amplitudes_.size()) != nu_.rows() ||
        nu_.rows() != nu_.cols()) {
        throw DimensionMismatch("tripartite state needs one cavity amplitude block per signal number");
    }
}

Complex TripartiteState::entry(int j, int k, int n, int jp, int kp, int m) const {
    return nu_(n, m) * cavity_amplitudes_[n](j, k) * std::conj(cavity_amplitudes_[m](jp, kp));
}

double TripartiteState::trace() const {
    double t = 0.0;
    for (Eigen::Index n = 0; n < nu_.rows(); ++n) t += nu_(n, n).real() * cavity_amplitudes_[n].squaredNorm();
    return t;
}

Eigen::MatrixXcd TripartiteState::to_dense() const {
    const int J = b1_max() + 1;
    const int K = b2_max() + 1;
    const int N = signal_max() + 1;
    const Eigen::Index d = static_cast<Eigen::Index>(J) * K * N;
    auto index = [&](int j, int k, int n) { return (static_cast<Eigen::Index>(j) * K + k) * N + n; };
    Eigen::MatrixXcd rho(d, d);
    for (int j = 0; j < J; ++j)
        for (int k = 0; k < K; ++k)
            for (int n = 0; n < N; ++n)
                for (int jp = 0; jp < J; ++jp)
                    for (int kp = 0; kp < K; ++kp)
                        for (int m = 0; m < N; ++m) rho(index(j, k, n), index(jp, kp, m)) = entry(j, k, n, jp, kp, m);
    return rho;
}

TripartiteState build_output_state(const DensityMatrix& nu_in, const SynthesizerParams& params,
                                   CavityModeTruncation cutoffs) {
    params.validate();
    if (nu_in.dim() != params.trunc.dim()) {
        throw DimensionMismatch("input state truncation does not match the synthesizer truncation");
    }
    if (cutoffs.b1_max < 0 || cutoffs.b2_max < 0) throw InvalidArgument("cavity mode cutoffs must be >= 0");

    const auto& cav = params.cavity;
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(nu_in.dim());
    for (int n = 0; n <= nu_in.n_max(); ++n) {
        // The cross-Kerr unitary exp(-i chi t d^dag d c^dag c) acts on |n> of the
        // signal as an extra round-trip phase -chi_t n on the cavity mode.
        const double phi = cav.psi - cav.chi_t * n;
        const auto ring = ring_coefficients(phi, cav.tau);
        const Eigen::VectorXcd b1 = coherent_vector(ring.kappa * params.alpha, cutoffs.b1_max);
        const Eigen::VectorXcd b2 = coherent_vector(ring.sigma * params.alpha, cutoffs.b2_max);
        blocks.emplace_back(b1 * b2.transpose());
    }
    TripartiteState state(nu_in.entries(), std::move(blocks));

    const double total = nu_in.trace();
    const double deficit = total - state.trace();
    if (deficit > kMaxTraceDeficit * std::max(total, 1e-300)) {
        std::ostringstream why;
        why.precision(3);
        why << "cavity mode cutoffs (" << cutoffs.b1_max << ", " << cutoffs.b2_max << ") lose weight " << deficit;
        throw TruncationTooSmall(why.str(), deficit);
    }
    return state;
}

double oracle_click_probability(const TripartiteState& state, double eta) {
    const auto click = click_element(state.b2_max(), eta);
    double p = 0.0;
    for (int n = 0; n <= state.signal_max(); ++n)
        for (int j = 0; j <= state.b1_max(); ++j)
            for (int k = 0; k <= state.b2_max(); ++k) p += state.entry(j, k, n, j, k, n).real() * click[k];
    return p;
}

OracleResult oracle_condition(const TripartiteState& state, double eta) {
    const auto click = click_element(state.b2_max(), eta);
    const int N = state.signal_max() + 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < N; ++m) {
            Complex s = 0.0;
            for (int j = 0; j <= state.b1_max(); ++j)
                for (int k = 0; k <= state.b2_max(); ++k) s += state.entry(j, k, n, j, k, m) * click[k];
            out(n, m) = s;
        }
    }
    const double p = out.trace().real();
    if (!(p > kMinClickProbability)) throw NoClickProbability(p);
    return {DensityMatrix(out / p), p};
}

Complex coherent_overlap(Complex bra, Complex ket, int n_max) {
    return coherent_vector(bra, n_max).dot(coherent_vector(ket, n_max));
}

}  // namespace focksynth::oracle
