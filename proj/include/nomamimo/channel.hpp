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

#include <armadillo>

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "nomamimo/rng.hpp"
#include "nomamimo/scenario.hpp"
#include "nomamimo/types.hpp"

namespace nomamimo {

// One coherence-interval realization. Matrices are num_users x num_antennas
// with row k holding the (transposed) vector of user k.
struct ChannelState {
    arma::cx_mat small_scale;     // i.i.d. CN(0,1) entries
    arma::cx_mat channel;         // sqrt(beta_k) * small-scale row k
    arma::cx_mat estimates;       // MMSE estimates of the small-scale rows;
                                  // only the cell-center rows in NOMA mode
    arma::vec estimation_quality; // gamma_k in [0,1], one per user
};

// Normalized variance of the MMSE channel estimate per user:
//   gamma_k = K beta_k q_k / (K beta_k q_k + 1).
inline arma::vec estimation_quality(const Scenario &scn) {
    arma::vec gammas(scn.num_users);
    for (int k = 0; k < scn.num_users; ++k) {
        const double energy = scn.num_users * scn.betas(k) * scn.pilot_powers(k);
        gammas(k) = energy / (energy + 1.0);
    }
    return gammas;
}

// Draws the true channels of one trial. Entries are filled row by row so the
// layout matches the binary dump format below.
inline ChannelState draw_channels(const Scenario &scn, std::uint64_t trial) {
    RandomStream stream(scn.seed, trial, StreamPurpose::kChannel);
    ChannelState state;
    state.small_scale.set_size(scn.num_users, scn.num_antennas);
    for (int k = 0; k < scn.num_users; ++k)
        for (int m = 0; m < scn.num_antennas; ++m)
            state.small_scale(k, m) = stream.complex_gaussian();
    state.channel = state.small_scale;
    for (int k = 0; k < scn.num_users; ++k)
        state.channel.row(k) *= std::sqrt(scn.betas(k));
    return state;
}

// Adds MMSE estimates to a drawn state. The estimate of each entry is
//   gamma * h + sqrt(gamma (1 - gamma)) * e,  e ~ CN(0,1),
// which has variance gamma and an error of variance 1 - gamma uncorrelated
// with the estimate. NOMA mode estimates only the cell-center rows, since
// only those users send uplink pilots in that scheme.
inline ChannelState estimate_channels(const Scenario &scn, ChannelState state, Scheme mode,
                                      std::uint64_t trial) {
    if (state.small_scale.n_rows != static_cast<arma::uword>(scn.num_users) ||
        state.small_scale.n_cols != static_cast<arma::uword>(scn.num_antennas))
        throw std::invalid_argument("channel state does not match the scenario dimensions");

    const int rows = mode == Scheme::kNoma ? scn.num_groups() : scn.num_users;
    const arma::vec gammas = estimation_quality(scn);

    RandomStream stream(scn.seed, trial, StreamPurpose::kEstimationNoise);
    state.estimates.set_size(rows, scn.num_antennas);
    for (int k = 0; k < rows; ++k) {
        const double g = gammas(k);
        const double noise_scale = std::sqrt(g * (1.0 - g));
        for (int m = 0; m < scn.num_antennas; ++m)
            state.estimates(k, m) =
                g * state.small_scale(k, m) + noise_scale * stream.complex_gaussian();
    }
    state.estimation_quality = gammas;
    return state;
}

// ---- binary regression fixtures ------------------------------------------
//
// Little-endian layout: uint32 num_users, uint32 num_antennas, uint64 trial,
// then the true small-scale matrix in row-major order as (re, im) float64
// pairs.

struct ChannelDump {
    std::uint32_t num_users = 0;
    std::uint32_t num_antennas = 0;
    std::uint64_t trial = 0;
    arma::cx_mat small_scale;
};

inline void write_channel_dump(const ChannelState &state, std::uint64_t trial,
                               std::ostream &out) {
    const auto users = static_cast<std::uint32_t>(state.small_scale.n_rows);
    const auto antennas = static_cast<std::uint32_t>(state.small_scale.n_cols);
    out.write(reinterpret_cast<const char *>(&users), sizeof(users));
    out.write(reinterpret_cast<const char *>(&antennas), sizeof(antennas));
    out.write(reinterpret_cast<const char *>(&trial), sizeof(trial));
    for (std::uint32_t k = 0; k < users; ++k) {
        for (std::uint32_t m = 0; m < antennas; ++m) {
            const double re = state.small_scale(k, m).real();
            const double im = state.small_scale(k, m).imag();
            out.write(reinterpret_cast<const char *>(&re), sizeof(re));
            out.write(reinterpret_cast<const char *>(&im), sizeof(im));
        }
    }
    if (!out)
        throw std::runtime_error("failed to write channel dump");
}

inline ChannelDump read_channel_dump(std::istream &in) {
    ChannelDump dump;
    in.read(reinterpret_cast<char *>(&dump.num_users), sizeof(dump.num_users));
    in.read(reinterpret_cast<char *>(&dump.num_antennas), sizeof(dump.num_antennas));
    in.read(reinterpret_cast<char *>(&dump.trial), sizeof(dump.trial));
    if (!in)
        throw std::runtime_error("truncated channel dump header");
    dump.small_scale.set_size(dump.num_users, dump.num_antennas);
    for (std::uint32_t k = 0; k < dump.num_users; ++k) {
        for (std::uint32_t m = 0; m < dump.num_antennas; ++m) {
            double re = 0.0, im = 0.0;
            in.read(reinterpret_cast<char *>(&re), sizeof(re));
            in.read(reinterpret_cast<char *>(&im), sizeof(im));
            dump.small_scale(k, m) = {re, im};
        }
    }
    if (!in)
        throw std::runtime_error("truncated channel dump payload");
    return dump;
}

} // namespace nomamimo
