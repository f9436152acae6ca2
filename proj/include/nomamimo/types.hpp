// SPDX-License-Identifier: Apache-2.0
//
// nomamimo: link-level simulation of power-domain NOMA and zero-forcing
// massive MIMO in a Rayleigh-fading single-cell downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace nomamimo {

// Downlink transmission scheme under comparison.
enum class Scheme {
    kNoma,       // K/2 groups, one shared zero-forcing beam per group, SIC at cell-center users
    kMassiveMimo // one zero-forcing beam per user
};

// Where channel knowledge at the base station comes from.
enum class CsiMode {
    kPerfectAtBs, // beams built from the true small-scale channels
    kEstimated    // beams built from MMSE pilot estimates
};

// How the numbers in a RateReport were obtained.
enum class RateMethod {
    kMonteCarlo,          // trial average of instantaneous rates
    kBoundUpper,          // closed-form upper bound (NOMA)
    kBoundLower,          // closed-form lower bound with estimation quality < 1
    kClosedFormPerfectCsi // closed-form lower bound at perfect CSI
};

inline const char *to_string(Scheme s) {
    return s == Scheme::kNoma ? "NOMA" : "mMIMO";
}

inline const char *to_string(RateMethod m) {
    switch (m) {
    case RateMethod::kMonteCarlo:
        return "monte_carlo";
    case RateMethod::kBoundUpper:
        return "bound_upper";
    case RateMethod::kBoundLower:
        return "bound_lower";
    case RateMethod::kClosedFormPerfectCsi:
        return "closed_form_perfect_csi";
    }
    throw std::logic_error("unknown rate method");
}

} // namespace nomamimo
