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

#include <stdexcept>
#include <string>

namespace focksynth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its documented domain (e.g. tau = 0, eta > 1).
class InvalidArgument : public Error {
 public:
    using Error::Error;
};

/// Two objects over different Fock truncations were combined.
class DimensionMismatch : public Error {
 public:
    using Error::Error;
};

/// Conditioning on a click was requested but the click probability is
/// too small for the conditional state to be meaningful.
class NoClickProbability : public Error {
 public:
    explicit NoClickProbability(double p_click);
    double p_click() const noexcept { return p_click_; }

 private:
    double p_click_;
};

/// No photon number in the truncation is resonant with the cavity.
class NoResonance : public Error {
 public:
    using Error::Error;
};

/// A calibration target cannot be reached inside the search bracket.
class TargetOutOfRange : public Error {
 public:
    using Error::Error;
};

/// The click probability is not monotone in tau over the search bracket.
class NonMonotoneBracket : public Error {
 public:
    using Error::Error;
};

/// The brute-force cavity-mode truncation loses more than the allowed weight.
class TruncationTooSmall : public Error {
 public:
    TruncationTooSmall(const std::string& what, double trace_deficit);
    double trace_deficit() const noexcept { return trace_deficit_; }

 private:
    double trace_deficit_;
};

}  // namespace focksynth
