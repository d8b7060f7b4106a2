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

#include <complex>
#include <random>

#include "focksynth/fockspace.hpp"

namespace focksynth::testing {

/// Fixed-seed generator so property tests are reproducible.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0xf0c5'2026ull ^ salt); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Random mixed state: a convex mixture of a few random pure states.
inline DensityMatrix random_mixed_state(std::mt19937_64& rng, int n_max, int rank = 3) {
    const int d = n_max + 1;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    double total = 0.0;
    std::normal_distribution<double> gauss;
    for (int r = 0; r < rank; ++r) {
        Eigen::VectorXcd v(d);
        for (int n = 0; n < d; ++n) v(n) = Complex(gauss(rng), gauss(rng));
        v.normalize();
        const double w = uniform(rng, 0.1, 1.0);
        rho += w * v * v.adjoint();
        total += w;
    }
    return DensityMatrix(rho / total);
}

/// Poisson probability mass evaluated directly from its definition.
inline double poisson_pmf(double mean, int k) {
    double p = std::exp(-mean);
    for (int i = 1; i <= k; ++i) p *= mean / i;
    return p;
}

}  // namespace focksynth::testing
