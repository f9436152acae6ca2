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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

namespace nomamimo {

// Substream tags. A (seed, trial, purpose) triple addresses an independent
// stream, so different kinds of draws within one trial never collide.
enum class StreamPurpose : std::uint32_t {
    kGeneric = 0,
    kChannel = 1,
    kEstimationNoise = 2,
    kPlacement = 3,
    kScenario = 4,
};

// Philox-4x32 block function with the standard 10-round schedule.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kBump0 = 0x9E3779B9u;
    constexpr std::uint32_t kBump1 = 0xBB67AE85u;

    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kBump0;
            key[1] += kBump1;
        }
        const std::uint64_t prod0 = std::uint64_t{kMul0} * counter[0];
        const std::uint64_t prod1 = std::uint64_t{kMul1} * counter[2];
        counter = {static_cast<std::uint32_t>(prod1 >> 32) ^ counter[1] ^ key[0],
                   static_cast<std::uint32_t>(prod1),
                   static_cast<std::uint32_t>(prod0 >> 32) ^ counter[3] ^ key[1],
                   static_cast<std::uint32_t>(prod0)};
    }
    return counter;
}

// Counter-based random stream addressed by (seed, trial, purpose). Every
// draw depends only on the address and the number of blocks consumed so far,
// never on other streams or on which worker executes the trial. This is what
// makes Monte-Carlo runs bit-reproducible for any worker count.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t trial,
                 StreamPurpose purpose = StreamPurpose::kGeneric)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          purpose_(static_cast<std::uint32_t>(purpose)),
          trial_lo_(static_cast<std::uint32_t>(trial)),
          trial_hi_(static_cast<std::uint32_t>(trial >> 32)) {}

    std::array<std::uint32_t, 4> next_block() {
        return philox4x32({block_++, purpose_, trial_lo_, trial_hi_}, key_);
    }

    std::uint64_t next_u64() {
        const auto b = next_block();
        return join(b[0], b[1]);
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * kInv53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal pair from one block (Box-Muller, trigonometric form;
    // no rejection, so the counter advance per call is fixed).
    std::pair<double, double> gaussian_pair() {
        const auto b = next_block();
        const double u_open = (static_cast<double>(join(b[0], b[1]) >> 11) + 1.0) * kInv53;
        const double u_half = static_cast<double>(join(b[2], b[3]) >> 11) * kInv53;
        const double radius = std::sqrt(-2.0 * std::log(u_open));
        const double angle = 2.0 * kPi * u_half;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double gaussian() { return gaussian_pair().first; }

    // Circularly-symmetric complex normal with unit variance: real and
    // imaginary parts are independent N(0, 1/2). One block per sample.
    std::complex<double> complex_gaussian() {
        const auto [re, im] = gaussian_pair();
        constexpr double kInvSqrt2 = 0.70710678118654752440;
        return {re * kInvSqrt2, im * kInvSqrt2};
    }

  private:
    static constexpr double kInv53 = 1.0 / 9007199254740992.0; // 2^-53
    static constexpr double kPi = 3.14159265358979323846;

    static std::uint64_t join(std::uint32_t lo, std::uint32_t hi) {
        return static_cast<std::uint64_t>(lo) | (static_cast<std::uint64_t>(hi) << 32);
    }

    std::array<std::uint32_t, 2> key_;
    std::uint32_t purpose_;
    std::uint32_t trial_lo_;
    std::uint32_t trial_hi_;
    std::uint32_t block_ = 0;
};

} // namespace nomamimo
