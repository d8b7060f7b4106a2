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

#include "focksynth/fockspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "focksynth/errors.hpp"

namespace focksynth {

namespace {

constexpr int kExactFactorials = 20;

// ln(n!) for n <= 20 from the exact integer n!, which fits in 64 bits and
// (being 2^k times a small odd number) converts to double without rounding.
const std::array<double, kExactFactorials + 1>& exact_log_factorials() {
    static const auto table = [] {
        std::array<double, kExactFactorials + 1> t{};
        std::uint64_t f = 1;
        for (int n = 0; n <= kExactFactorials; ++n) {
            if (n > 0) f *= static_cast<std::uint64_t>(n);
            t[n] = std::log(static_cast<double>(f));
        }
        return t;
    }();
    return table;
}

// Stirling series for ln Gamma(x), x >= 21. Truncation error < 1e-17.
double log_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv * (1.0 / 12.0 -
               inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 * (1.0 / 1188.0)))));
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

FockTruncation::FockTruncation(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw InvalidArgument("n_max must be >= 0");
}

FockTruncation default_truncation(double mean_photons, int largest_required) {
    if (!(mean_photons >= 0.0) || !std::isfinite(mean_photons)) {
        throw InvalidArgument("mean photon number must be finite and >= 0");
    }
    const double base = std::max(std::ceil(mean_photons), static_cast<double>(largest_required));
    const double margin = std::max(15.0, std::ceil(10.0 * std::sqrt(mean_photons)));
    return FockTruncation(static_cast<int>(base + margin));
}

PureStateVector::PureStateVector(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw InvalidArgument("state vector must have at least one coefficient");
    for (const auto& c : coefficients_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InvalidArgument("state vector has a non-finite coefficient");
        }
    }
}

PureStateVector PureStateVector::basis(int n, FockTruncation trunc) {
    if (n < 0 || n > trunc.n_max()) throw InvalidArgument("basis state outside truncation");
    std::vector<Complex> c(trunc.dim());
    c[n] = 1.0;
    return PureStateVector(std::move(c));
}

PureStateVector PureStateVector::superposition(std::span<const int> numbers, FockTruncation trunc) {
    if (numbers.empty()) throw InvalidArgument("superposition needs at least one number state");
    std::vector<Complex> c(trunc.dim());
    for (int n : numbers) {
        if (n < 0 || n > trunc.n_max()) throw InvalidArgument("superposition component outside truncation");
        c[n] += 1.0;
    }
    return PureStateVector(std::move(c)).normalized();
}

double PureStateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& c : coefficients_) s += std::norm(c);
    return s;
}

PureStateVector PureStateVector::normalized() const {
    const double norm = std::sqrt(norm_squared());
    if (norm == 0.0) throw InvalidArgument("cannot normalize the zero vector");
    std::vector<Complex> c(coefficients_);
    for (auto& x : c) x /= norm;
    return PureStateVector(std::move(c));
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw InvalidArgument("density matrix must be square and nonempty");
    }
    if (!entries_.allFinite()) throw InvalidArgument("density matrix has non-finite entries");
}

DensityMatrix DensityMatrix::pure(const PureStateVector& psi) {
    const auto c = psi.coefficients();
    const Eigen::Map<const Eigen::VectorXcd> v(c.data(), static_cast<Eigen::Index>(c.size()));
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(populations.size()),
                                                static_cast<Eigen::Index>(populations.size()));
    for (std::size_t n = 0; n < populations.size(); ++n) m(n, n) = populations[n];
    return DensityMatrix(std::move(m));
}

double DensityMatrix::trace() const { return entries_.trace().real(); }

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    const auto d = entries_.rows();
    for (Eigen::Index n = 0; n < d; ++n) {
        for (Eigen::Index m = n; m < d; ++m) {
            const double scale = std::max(1.0, std::abs(entries_(n, m)));
            worst = std::max(worst, std::abs(entries_(n, m) - std::conj(entries_(m, n))) / scale);
        }
    }
    return worst;
}

double DensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd hermitized = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitized, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

std::vector<double> DensityMatrix::number_distribution() const {
    std::vector<double> p(dim());
    for (std::size_t n = 0; n < p.size(); ++n) p[n] = entries_(n, n).real();
    return p;
}

void DensityMatrix::check_physical() const {
    std::ostringstream why;
    why.precision(3);
    if (const double h = hermiticity_defect(); h > kHermiticityTolerance) {
        why << "density matrix is not Hermitian (defect " << h << ")";
        throw InvalidArgument(why.str());
    }
    const double tr = trace();
    if (tr < 0.0 || tr > 1.0 + kTraceTolerance) {
        why << "density matrix trace " << tr << " outside [0, 1]";
        throw InvalidArgument(why.str());
    }
    if (const double lo = min_eigenvalue(); lo < -kEigenvalueTolerance * std::max(tr, 1e-300)) {
        why << "density matrix is not positive semidefinite (min eigenvalue " << lo << ")";
        throw InvalidArgument(why.str());
    }
}

double log_factorial(int n) {
    if (n < 0) throw InvalidArgument("log_factorial of a negative number");
    if (n <= kExactFactorials) return exact_log_factorials()[n];
    return log_gamma_stirling(static_cast<double>(n) + 1.0);
}

PureStateVector coherent_coefficients(Complex amplitude, FockTruncation trunc) {
    std::vector<Complex> c(trunc.dim());
    const double r = std::abs(amplitude);
    if (r == 0.0) {
        c[0] = 1.0;
        return PureStateVector(std::move(c));
    }
    const double log_r = std::log(r);
    const double theta = std::arg(amplitude);
    for (int n = 0; n <= trunc.n_max(); ++n) {
        const double log_mag = -0.5 * r * r + n * log_r - 0.5 * log_factorial(n);
        c[n] = std::polar(std::exp(log_mag), n * theta);
    }
    return PureStateVector(std::move(c));
}

DensityMatrix coherent_density_matrix(Complex amplitude, FockTruncation trunc) {
    return DensityMatrix::pure(coherent_coefficients(amplitude, trunc));
}

double fidelity_to_pure(const DensityMatrix& rho, const PureStateVector& target) {
    if (target.size() != rho.dim()) throw DimensionMismatch("target state and density matrix differ in dimension");
    const auto c = target.coefficients();
    const Eigen::Map<const Eigen::VectorXcd> v(c.data(), static_cast<Eigen::Index>(c.size()));
    const double f = v.dot(rho.entries() * v).real();
    return std::clamp(f, 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
    const auto& m = rho.entries();
    double s = 0.0;
    for (Eigen::Index n = 0; n < m.rows(); ++n) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) s += (m(n, k) * m(k, n)).real();
    }
    return s;
}

}  // namespace focksynth
