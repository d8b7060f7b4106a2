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

#include "focksynth/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <thread>

#include "focksynth/errors.hpp"
#include "focksynth/parallel.hpp"

namespace focksynth {

StateMetrics metrics(const DensityMatrix& rho, const std::optional<PureStateVector>& target) {
    StateMetrics m;
    if (target) m.fidelity = fidelity_to_pure(rho, *target);
    m.purity = purity(rho);
    m.trace_defect = rho.trace_defect();
    m.hermiticity_defect = rho.hermiticity_defect();
    m.min_eigenvalue = rho.min_eigenvalue();
    m.number_distribution = rho.number_distribution();
    return m;
}

DensityMatrix materialize(const InputState& input, FockTruncation trunc) {
    if (const auto* coherent = std::get_if<CoherentInput>(&input)) {
        return coherent_density_matrix(coherent->beta, trunc);
    }
    const auto& rho = std::get<DensityMatrix>(input);
    if (rho.dim() != trunc.dim()) throw DimensionMismatch("input density matrix does not match the truncation");
    return rho;
}

double mean_photon_number(const InputState& input) {
    if (const auto* coherent = std::get_if<CoherentInput>(&input)) return std::norm(coherent->beta);
    const auto p = std::get<DensityMatrix>(input).number_distribution();
    double mean = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
    return mean;
}

std::string_view to_string(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::kTau: return "tau";
        case SweepParameter::kEta: return "eta";
        case SweepParameter::kAlpha: return "alpha";
        case SweepParameter::kPsi: return "psi";
        case SweepParameter::kChiT: return "chi_t";
        case SweepParameter::kBeta: return "beta";
    }
    return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    for (auto p : {SweepParameter::kTau, SweepParameter::kEta, SweepParameter::kAlpha, SweepParameter::kPsi,
                   SweepParameter::kChiT, SweepParameter::kBeta}) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

std::string_view to_string(PointError error) {
    switch (error) {
        case PointError::kNone: return "ok";
        case PointError::kNoClickProbability: return "no_click_probability";
        case PointError::kInvalidParameter: return "invalid_parameter";
        case PointError::kDimensionMismatch: return "dimension_mismatch";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (grid.empty()) throw InvalidArgument("sweep grid is empty");
    if (grid.size() > 1) {
        const bool increasing = grid[1] > grid[0];
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (increasing ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1])) {
                throw InvalidArgument("sweep grid must be strictly monotone");
            }
        }
    }
    if (parameter == SweepParameter::kBeta && !std::holds_alternative<CoherentInput>(input)) {
        throw InvalidArgument("a beta sweep needs a coherent input state");
    }
}

namespace {

SweepRow evaluate_point(const SweepSpec& spec, double value) {
    SweepRow row;
    row.value = value;
    SynthesizerParams params = spec.fixed;
    InputState input = spec.input;
    switch (spec.parameter) {
        case SweepParameter::kTau: params.cavity.tau = value; break;
        case SweepParameter::kEta: params.eta = value; break;
        case SweepParameter::kAlpha: params.alpha = value; break;
        case SweepParameter::kPsi: params.cavity.psi = value; break;
        case SweepParameter::kChiT: params.cavity.chi_t = value; break;
        case SweepParameter::kBeta: input = CoherentInput{value}; break;
    }
    try {
        const DensityMatrix nu = materialize(input, params.trunc);
        const auto conditional = conditional_state(nu, params);
        row.p_click = conditional.report.p_click;
        row.metrics = metrics(conditional.state, spec.target);
    } catch (const NoClickProbability& e) {
        row.p_click = e.p_click();
        row.error = PointError::kNoClickProbability;
        row.message = e.what();
    } catch (const DimensionMismatch& e) {
        row.error = PointError::kDimensionMismatch;
        row.message = e.what();
    } catch (const InvalidArgument& e) {
        row.error = PointError::kInvalidParameter;
        row.message = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    std::vector<SweepRow> rows(spec.grid.size());
    detail::parallel_for(rows.size(), threads == 0 ? thread_budget() : threads,
                         [&](std::size_t i) { rows[i] = evaluate_point(spec, spec.grid[i]); });
    return rows;
}

void write_sweep_csv(std::ostream& out, SweepParameter parameter, std::span<const SweepRow> rows) {
    const auto old_precision = out.precision(12);
    const auto old_flags = out.flags();
    out.unsetf(std::ios::floatfield);
    out << "param,value,p_click,fidelity,purity,trace_defect,min_eig\n";
    auto field = [&](const std::optional<double>& v) {
        out << ',';
        if (v) out << *v;
    };
    for (const auto& row : rows) {
        out << to_string(parameter) << ',' << row.value;
        field(row.p_click);
        if (row.metrics) {
            field(row.metrics->fidelity);
            field(row.metrics->purity);
            field(row.metrics->trace_defect);
            field(row.metrics->min_eigenvalue);
        } else {
            out << ",,,,";
        }
        out << '\n';
    }
    out.precision(old_precision);
    out.flags(old_flags);
}

unsigned thread_budget() {
    unsigned budget = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FOCKSYNTH_THREADS")) {
        unsigned cap = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc() && cap > 0) budget = std::min(budget, cap);
    }
    return budget;
}

}  // namespace focksynth
