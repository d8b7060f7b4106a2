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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "focksynth/fockspace.hpp"
#include "focksynth/synthesizer.hpp"

namespace focksynth {

struct StateMetrics {
    std::optional<double> fidelity;  ///< only when a target was given
    double purity = 0.0;
    double trace_defect = 0.0;
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    std::vector<double> number_distribution;
};

StateMetrics metrics(const DensityMatrix& rho, const std::optional<PureStateVector>& target = std::nullopt);

/// Signal input given as a coherent amplitude.
struct CoherentInput {
    Complex beta;
};

/// Signal input: a coherent amplitude or an explicit density matrix.
using InputState = std::variant<CoherentInput, DensityMatrix>;

/// Density matrix of the input over `trunc`. Explicit matrices must already
/// live on that truncation.
DensityMatrix materialize(const InputState& input, FockTruncation trunc);

/// Mean photon number of the input (|beta|^2, or Tr(n rho)).
double mean_photon_number(const InputState& input);

enum class SweepParameter { kTau, kEta, kAlpha, kPsi, kChiT, kBeta };

std::string_view to_string(SweepParameter parameter);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::kTau;
    std::vector<double> grid;
    SynthesizerParams fixed;
    InputState input = CoherentInput{Complex{0.0, 0.0}};
    std::optional<PureStateVector> target;

    /// Grid must be nonempty and strictly monotone.
    void validate() const;
};

enum class PointError { kNone, kNoClickProbability, kInvalidParameter, kDimensionMismatch };

std::string_view to_string(PointError error);

struct SweepRow {
    double value = 0.0;
    std::optional<double> p_click;
    std::optional<StateMetrics> metrics;
    PointError error = PointError::kNone;
    std::string message;
};

/// Evaluates every grid point; a failing point yields a flagged row and the
/// sweep carries on. Rows follow grid order. `threads == 0` uses
/// thread_budget().
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// `param,value,p_click,fidelity,purity,trace_defect,min_eig`, 12 significant
/// digits. Missing values are left empty.
void write_sweep_csv(std::ostream& out, SweepParameter parameter, std::span<const SweepRow> rows);

/// Worker count: hardware concurrency, capped by FOCKSYNTH_THREADS if set.
unsigned thread_budget();

}  // namespace focksynth
