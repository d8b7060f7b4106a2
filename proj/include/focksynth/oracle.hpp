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
#include "focksynth/synthesizer.hpp"

// Brute-force reference for the conditional state. Everything here is built
// from explicit truncated Fock expansions of the three output modes
// (b1, b2, c2); none of the closed forms in cavity.hpp / synthesizer.hpp are
// used, so agreement between the two paths checks the algebra.
namespace focksynth::oracle {

/// Photon-number cutoffs for the two cavity output modes.
struct CavityModeTruncation {
    int b1_max;
    int b2_max;

    /// mean + 10 sqrt(mean) + 15 for mean = |alpha|^2; covers both outputs
    /// since |kappa|, |sigma| <= 1.
    static CavityModeTruncation for_alpha(Complex alpha);
};

/// Output state of the three modes b1 (x) b2 (x) c2,
///   rho = sum_{n,m} nu_nm |v_n><v_m|,  v_n = |kappa_n alpha> |sigma_n alpha> |n>.
///
/// Stored as nu together with the explicit b1 (x) b2 amplitudes of every v_n,
/// which is the same operator as the dense (J K N)^2 matrix at a fraction of
/// the memory. entry() and to_dense() expose the dense view.
class TripartiteState {
 public:
    TripartiteState(Eigen::MatrixXcd nu, std::vector<Eigen::MatrixXcd> cavity_amplitudes);

    int b1_max() const { return static_cast<int>(cavity_amplitudes_.front().rows()) - 1; }
    int b2_max() const { return static_cast<int>(cavity_amplitudes_.front().cols()) - 1; }
    int signal_max() const { return static_cast<int>(nu_.rows()) - 1; }

    /// <j, k, n| rho |j', k', m>.
    Complex entry(int j, int k, int n, int jp, int kp, int m) const;
    /// <j, k| of the cavity part of v_n.
    Complex cavity_amplitude(int n, int j, int k) const { return cavity_amplitudes_[n](j, k); }

    double trace() const;
    /// Dense operator, row index (j * (K + 1) + k) * (N + 1) + n. Only for small cutoffs.
    Eigen::MatrixXcd to_dense() const;

 private:
    Eigen::MatrixXcd nu_;
    std::vector<Eigen::MatrixXcd> cavity_amplitudes_;
};

/// Applies the Kerr phase per signal number, propagates the coherent probe
/// through the ring cavity and assembles the three-mode output.
/// Throws TruncationTooSmall when the cavity cutoffs keep less than
/// 1 - 1e-8 of the weight.
TripartiteState build_output_state(const DensityMatrix& nu_in, const SynthesizerParams& params,
                                   CavityModeTruncation cutoffs);

/// Tr[rho (I (x) Pi_1 (x) I)] with Pi_1 = I - sum_k (1 - eta)^k |k><k| on b2.
double oracle_click_probability(const TripartiteState& state, double eta);

struct OracleResult {
    DensityMatrix state;
    double p_click;
};

/// Projects b2 onto the click element and traces out b1 and b2.
OracleResult oracle_condition(const TripartiteState& state, double eta);

/// <bra|ket> for two coherent states by explicit summation up to n_max.
Complex coherent_overlap(Complex bra, Complex ket, int n_max);

}  // namespace focksynth::oracle
