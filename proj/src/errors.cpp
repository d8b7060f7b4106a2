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

#include "focksynth/errors.hpp"

#include <sstream>

namespace focksynth {

namespace {

std::string no_click_message(double p_click) {
    std::ostringstream os;
    os.precision(3);
    os << "click probability " << p_click << " is too small to condition on";
    return os.str();
}

}  // namespace

NoClickProbability::NoClickProbability(double p_click) : Error(no_click_message(p_click)), p_click_(p_click) {}

TruncationTooSmall::TruncationTooSmall(const std::string& what, double trace_deficit)
    : Error(what), trace_deficit_(trace_deficit) {}

}  // namespace focksynth
