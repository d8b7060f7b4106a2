# Copyright 2026 The focksynth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Conditional synthesis of Fock states and their superpositions.

Density matrices are complex numpy arrays indexed by photon number.
"""

from ._core import (
    Error,
    NoClickProbability,
    Params,
    __version__,
    cavity_coefficients,
    coherent_density_matrix,
    conditional_state,
    default_truncation,
    design_phase,
    detection_probability,
    equal_weight_amplitude,
    fidelity,
    fock_state,
    metrics,
    oracle_condition,
    purity,
    reproduce_figure,
    resonant_numbers,
    sigma_abs_sq,
    superposition,
    sweep,
    tau_calibration,
    verify,
)

__all__ = [
    "Error",
    "NoClickProbability",
    "Params",
    "cavity_coefficients",
    "coherent_density_matrix",
    "conditional_state",
    "default_truncation",
    "design_phase",
    "detection_probability",
    "equal_weight_amplitude",
    "fidelity",
    "fock_state",
    "metrics",
    "oracle_condition",
    "purity",
    "reproduce_figure",
    "resonant_numbers",
    "sigma_abs_sq",
    "superposition",
    "sweep",
    "tau_calibration",
    "verify",
]
