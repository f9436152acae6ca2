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

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace nomamimo {

// Pairwise (cascade) summation. The reduction tree depends only on the
// element count, so accumulated Monte-Carlo results do not change with the
// worker count and the rounding error stays O(log n).
inline double pairwise_sum(const double *values, std::size_t count) {
    if (count == 0)
        return 0.0;
    if (count <= 8) {
        double acc = values[0];
        for (std::size_t i = 1; i < count; ++i)
            acc += values[i];
        return acc;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

inline double mean(const double *values, std::size_t count) {
    if (count == 0)
        throw std::invalid_argument("mean of an empty sample");
    return pairwise_sum(values, count) / static_cast<double>(count);
}

struct MeanAndError {
    double mean = 0.0;
    double standard_error = 0.0; // of the mean, using the n-1 sample variance
};

inline MeanAndError mean_and_standard_error(const double *values, std::size_t count,
                                            double *scratch) {
    if (count < 2)
        throw std::invalid_argument("standard error needs at least two samples");
    MeanAndError out;
    out.mean = mean(values, count);
    for (std::size_t i = 0; i < count; ++i) {
        const double d = values[i] - out.mean;
        scratch[i] = d * d;
    }
    const double var = pairwise_sum(scratch, count) / static_cast<double>(count - 1);
    out.standard_error = std::sqrt(var / static_cast<double>(count));
    return out;
}

} // namespace nomamimo
