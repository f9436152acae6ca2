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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "nomamimo/config.hpp"
#include "nomamimo/rng.hpp"

namespace nomamimo {

inline constexpr int kScenarioSchemaVersion = 1;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

// Raw inputs for build_scenario. pilot_powers may be left empty, in which
// case every user gets power_budget / num_users for its uplink pilot.
struct ScenarioParams {
    int num_antennas = 0;
    int num_users = 0;
    int coherence_symbols = 0;
    double power_budget = 0.0;
    arma::vec pilot_powers;
    arma::vec betas; // cell-center users first, then cell-edge users
    std::uint64_t seed = 0;
    int trials = 10000;
};

// All static parameters of one experiment. Fields are plain data; the
// invariants (even user count, beta ordering, coherence length) are enforced
// by build_scenario. Immutable after construction by convention, so it can
// be shared read-only across any number of workers.
struct Scenario {
    int num_antennas = 0;      // base-station antennas
    int num_users = 0;         // even, half cell-center and half cell-edge
    int coherence_symbols = 0; // symbols per coherence interval
    double power_budget = 0.0; // total downlink power, linear scale
    arma::vec pilot_powers;    // per-user uplink pilot power, linear scale
    arma::vec betas;           // large-scale fading, cell-center users first
    std::uint64_t seed = 0;
    int trials = 0;
    double data_fraction = 0.0; // 1 - num_users / coherence_symbols

    int num_groups() const { return num_users / 2; }
    bool is_center(int user) const { return user < num_users / 2; }

    // Same scenario with a different antenna count (used by sweeps; the
    // data fraction does not depend on the antenna count).
    Scenario with_antennas(int antennas) const {
        Scenario s = *this;
        if (antennas <= 0)
            throw std::invalid_argument("antenna count must be positive");
        s.num_antennas = antennas;
        return s;
    }
};

inline Scenario build_scenario(const ScenarioParams &params) {
    if (params.num_antennas <= 0)
        throw std::invalid_argument("antenna count must be positive");
    if (params.num_users < 2 || params.num_users % 2 != 0)
        throw std::invalid_argument("user count must be even and at least 2");
    if (params.coherence_symbols <= params.num_users)
        throw std::invalid_argument("coherence interval must be longer than the user count");
    if (!(params.power_budget > 0.0))
        throw std::invalid_argument("power budget must be positive");
    if (params.trials <= 0)
        throw std::invalid_argument("trial count must be positive");

    const int num_users = params.num_users;
    if (static_cast<int>(params.betas.n_elem) != num_users)
        throw std::invalid_argument("beta list must have one entry per user");
    if (params.betas.min() <= 0.0)
        throw std::invalid_argument("large-scale fading coefficients must be positive");

    const int half = num_users / 2;
    const double weakest_center = params.betas.subvec(0, half - 1).min();
    const double strongest_edge = params.betas.subvec(half, num_users - 1).max();
    if (!(weakest_center > strongest_edge))
        throw std::invalid_argument(
            "every cell-center user must have a larger large-scale fading "
            "coefficient than every cell-edge user");

    arma::vec pilots = params.pilot_powers;
    if (pilots.is_empty())
        pilots = arma::vec(num_users, arma::fill::value(params.power_budget / num_users));
    if (static_cast<int>(pilots.n_elem) != num_users)
        throw std::invalid_argument("pilot power list must have one entry per user");
    if (pilots.min() < 0.0)
        throw std::invalid_argument("pilot powers must be nonnegative");

    Scenario scn;
    scn.num_antennas = params.num_antennas;
    scn.num_users = num_users;
    scn.coherence_symbols = params.coherence_symbols;
    scn.power_budget = params.power_budget;
    scn.pilot_powers = pilots;
    scn.betas = params.betas;
    scn.seed = params.seed;
    scn.trials = params.trials;
    scn.data_fraction =
        1.0 - static_cast<double>(num_users) / static_cast<double>(params.coherence_symbols);
    return scn;
}

// SNR intervals (in dB, at full budget assigned to a single user) from which
// user placements are drawn. The linear fading coefficient of a draw at
// snr_db is 10^(snr_db/10) / power_budget.
struct PlacementSpec {
    double center_snr_db_lo = 0.0;
    double center_snr_db_hi = 0.0;
    double edge_snr_db_lo = 0.0;
    double edge_snr_db_hi = 0.0;
};

// Draws num_users fading coefficients, cell-center users first. SNRs are
// uniform in dB within each range. Because the ranges may touch or overlap,
// the joint draw is rejected and resampled until every center coefficient
// strictly exceeds every edge coefficient.
inline arma::vec sample_placement(const PlacementSpec &spec, int num_users, double power_budget,
                                  RandomStream &stream) {
    if (num_users < 2 || num_users % 2 != 0)
        throw std::invalid_argument("user count must be even and at least 2");
    if (spec.center_snr_db_lo > spec.center_snr_db_hi ||
        spec.edge_snr_db_lo > spec.edge_snr_db_hi)
        throw std::invalid_argument("SNR range is empty");
    if (!(power_budget > 0.0))
        throw std::invalid_argument("power budget must be positive");

    const int half = num_users / 2;
    constexpr int kMaxAttempts = 1000;
    arma::vec snr_db(num_users);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (int i = 0; i < half; ++i)
            snr_db(i) = stream.uniform(spec.center_snr_db_lo, spec.center_snr_db_hi);
        for (int i = half; i < num_users; ++i)
            snr_db(i) = stream.uniform(spec.edge_snr_db_lo, spec.edge_snr_db_hi);
        if (snr_db.subvec(0, half - 1).min() > snr_db.subvec(half, num_users - 1).max()) {
            arma::vec betas(num_users);
            for (int i = 0; i < num_users; ++i)
                betas(i) = db_to_linear(snr_db(i)) / power_budget;
            return betas;
        }
    }
    throw std::runtime_error("placement sampling could not satisfy the center/edge "
                             "ordering within 1000 attempts");
}

// ---- config-file serialization ------------------------------------------
//
// Scenario files are "key = value" text (see KeyValueConfig). All powers are
// stored in linear units; *_db keys are accepted on load as a convenience
// and converted with 10^(x/10).

namespace detail {

inline arma::vec to_vec(const std::vector<double> &v) {
    arma::vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out(i) = v[i];
    return out;
}

inline double linear_or_db_scalar(const KeyValueConfig &cfg, const std::string &key) {
    const std::string db_key = key + "_db";
    if (cfg.has(key) && cfg.has(db_key))
        throw std::invalid_argument("config keys '" + key + "' and '" + db_key +
                                    "' are mutually exclusive");
    if (cfg.has(key))
        return cfg.get_double(key);
    if (cfg.has(db_key))
        return db_to_linear(cfg.get_double(db_key));
    throw std::invalid_argument("missing config key: " + key);
}

inline arma::vec linear_or_db_list(const KeyValueConfig &cfg, const std::string &key) {
    const std::string db_key = key + "_db";
    if (cfg.has(key) && cfg.has(db_key))
        throw std::invalid_argument("config keys '" + key + "' and '" + db_key +
                                    "' are mutually exclusive");
    if (cfg.has(key))
        return to_vec(cfg.get_list(key));
    if (cfg.has(db_key)) {
        arma::vec v = to_vec(cfg.get_list(db_key));
        v.transform([](double x) { return db_to_linear(x); });
        return v;
    }
    throw std::invalid_argument("missing config key: " + key);
}

inline void check_schema_version(const KeyValueConfig &cfg) {
    if (!cfg.has("schema_version"))
        throw std::invalid_argument("missing config key: schema_version");
    if (cfg.get_int("schema_version") != kScenarioSchemaVersion)
        throw std::invalid_argument("unsupported schema_version (expected " +
                                    std::to_string(kScenarioSchemaVersion) + ")");
}

} // namespace detail

inline ScenarioParams scenario_params_from_config(const KeyValueConfig &cfg) {
    detail::check_schema_version(cfg);
    ScenarioParams p;
    p.num_antennas = static_cast<int>(cfg.get_int("antennas"));
    p.num_users = static_cast<int>(cfg.get_int("users"));
    p.coherence_symbols = static_cast<int>(cfg.get_int("coherence_symbols"));
    p.power_budget = detail::linear_or_db_scalar(cfg, "power_budget");
    p.betas = detail::linear_or_db_list(cfg, "betas");
    if (cfg.has("pilot_powers") || cfg.has("pilot_powers_db")) {
        p.pilot_powers = detail::linear_or_db_list(cfg, "pilot_powers");
    } else if (cfg.has("pilot_power") || cfg.has("pilot_power_db")) {
        const double q = detail::linear_or_db_scalar(cfg, "pilot_power");
        p.pilot_powers = arma::vec(p.num_users, arma::fill::value(q));
    }
    if (cfg.has("seed"))
        p.seed = cfg.get_u64("seed");
    if (cfg.has("trials"))
        p.trials = static_cast<int>(cfg.get_int("trials"));
    return p;
}

inline std::string scenario_to_config_text(const Scenario &scn) {
    KeyValueConfig cfg;
    cfg.set_int("schema_version", kScenarioSchemaVersion);
    cfg.set_int("antennas", scn.num_antennas);
    cfg.set_int("users", scn.num_users);
    cfg.set_int("coherence_symbols", scn.coherence_symbols);
    cfg.set_double("power_budget", scn.power_budget);
    cfg.set_list("pilot_powers", std::vector<double>(scn.pilot_powers.begin(),
                                                     scn.pilot_powers.end()));
    cfg.set_list("betas", std::vector<double>(scn.betas.begin(), scn.betas.end()));
    cfg.set_u64("seed", scn.seed);
    cfg.set_int("trials", scn.trials);
    return cfg.to_text();
}

inline Scenario scenario_from_config_text(const std::string &text) {
    return build_scenario(scenario_params_from_config(KeyValueConfig::parse(text)));
}

inline void save_scenario(const Scenario &scn, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write scenario file: " + path);
    out << scenario_to_config_text(scn);
}

inline Scenario load_scenario(const std::string &path) {
    return build_scenario(scenario_params_from_config(KeyValueConfig::load(path)));
}

} // namespace nomamimo
