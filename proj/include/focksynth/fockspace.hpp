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
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace focksynth {

using Complex = std::complex<double>;

/// Truncated Fock basis {|0>, ..., |n_max>}.
class FockTruncation {
 public:
    explicit FockTruncation(int n_max);

    int n_max() const noexcept { return n_max_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(n_max_) + 1; }

    friend bool operator==(const FockTruncation&, const FockTruncation&) = default;

 private:
    int n_max_;
};

/// Default truncation for a signal state with the given mean photon number.
///
/// n_max = ceil(max(mean, largest_required)) + max(15, ceil(10 sqrt(mean))).
/// `largest_required` lets callers force a photon number (e.g. a resonance
/// or a target component) into the basis.
FockTruncation default_truncation(double mean_photons, int largest_required = 0);

/// Pure state in a truncated Fock basis. Norm may be below one after
/// truncation; call normalized() for an exactly normalized copy.
class PureStateVector {
 public:
    explicit PureStateVector(std::vector<Complex> coefficients);

    /// The number state |n>.
    static PureStateVector basis(int n, FockTruncation trunc);
    /// Equal-weight superposition of the given number states.
    static PureStateVector superposition(std::span<const int> numbers, FockTruncation trunc);

    FockTruncation truncation() const { return FockTruncation(static_cast<int>(coefficients_.size()) - 1); }
    std::size_t size() const noexcept { return coefficients_.size(); }
    const Complex& operator[](std::size_t n) const { return coefficients_[n]; }
    std::span<const Complex> coefficients() const noexcept { return coefficients_; }

    double norm_squared() const;
    PureStateVector normalized() const;

 private:
    std::vector<Complex> coefficients_;
};

/// Density matrix over a truncated Fock basis. Immutable once built.
///
/// Construction only checks shape and finiteness; check_physical() enforces
/// the Hermiticity, trace and positivity tolerances used throughout.
class DensityMatrix {
 public:
    static constexpr double kHermiticityTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-9;
    static constexpr double kEigenvalueTolerance = 1e-9;

    explicit DensityMatrix(Eigen::MatrixXcd entries);

    /// |psi><psi|, without renormalizing psi.
    static DensityMatrix pure(const PureStateVector& psi);
    /// Diagonal (incoherent) mixture with the given populations.
    static DensityMatrix diagonal(std::span<const double> populations);

    FockTruncation truncation() const { return FockTruncation(n_max()); }
    int n_max() const noexcept { return static_cast<int>(entries_.rows()) - 1; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }

    Complex operator()(int n, int m) const { return entries_(n, m); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

    double trace() const;
    double trace_defect() const { return 1.0 - trace(); }
    /// max over (n, m) of |rho_nm - conj(rho_mn)| / max(1, |rho_nm|).
    double hermiticity_defect() const;
    /// Smallest eigenvalue of the Hermitized matrix (rho + rho^dagger) / 2.
    double min_eigenvalue() const;
    std::vector<double> number_distribution() const;

    /// Throws InvalidArgument naming the first violated invariant.
    void check_physical() const;

 private:
    Eigen::MatrixXcd entries_;
};

/// ln(n!). Exact table up to 20, Stirling series for the log-gamma beyond.
double log_factorial(int n);

/// Truncated coherent-state expansion e^{-|a|^2/2} a^n / sqrt(n!), evaluated
/// in log-magnitude form so that large amplitudes and n do not overflow.
PureStateVector coherent_coefficients(Complex amplitude, FockTruncation trunc);

DensityMatrix coherent_density_matrix(Complex amplitude, FockTruncation trunc);

/// <target| rho |target>, clamped to [0, 1].
double fidelity_to_pure(const DensityMatrix& rho, const PureStateVector& target);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace focksynth
