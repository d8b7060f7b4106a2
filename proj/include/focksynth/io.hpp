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

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "focksynth/analysis.hpp"
#include "focksynth/errors.hpp"
#include "focksynth/fockspace.hpp"
#include "focksynth/synthesizer.hpp"

namespace focksynth::io {

/// Thrown for malformed JSON documents and files.
class ParseError : public Error {
 public:
    using Error::Error;
};

/// {"n_max": int, "entries": [[[re, im], ...], ...]}, row-major.
nlohmann::json to_json(const DensityMatrix& rho);
/// Rejects non-square or ragged entries and rows that disagree with n_max.
DensityMatrix density_matrix_from_json(const nlohmann::json& doc);

DensityMatrix read_density_matrix(const std::filesystem::path& path);
void write_density_matrix(const std::filesystem::path& path, const DensityMatrix& rho);

nlohmann::json to_json(const SynthesizerParams& params);
nlohmann::json to_json(const ClickReport& report);
nlohmann::json to_json(const StateMetrics& m);

/// Parses an angle in radians: a plain number, or a multiple/fraction of pi
/// such as "pi/5", "-2pi/11", "3*pi", "0.5*pi/2".
double parse_angle(const std::string& text);

}  // namespace focksynth::io
