// SPDX-License-Identifier: Apache-2.0
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

#pragma once

#include "udnsim/engine.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace udnsim {

/**
 * Sectioned key-value configuration.
 *
 *     # comment
 *     [radio]
 *     fc_hz = 28000000000
 *
 * Sections and keys (units live in the key names):
 *
 *  - radio:    fc_hz, bandwidth_hz, p_sbs_dbm, p_user_dbm, noise_power_dbm,
 *              residual_si_dbm, n_tx_sbs, n_tx_user, los_decay_m, n_nlos_paths
 *  - geometry: macro_radius_m, sector_angle_rad, close_zone_radius_m,
 *              sc_radius_m, n_dl_users, n_ul_users
 *  - sweep:    densities_per_km2 (comma list), trials, seed, workers
 *  - schemes:  enabled (comma list of OMA_HD, NOMA_HD, NOMA_FD),
 *              alpha_weak, alpha_strong (NOMA), oma_alpha_weak,
 *              oma_alpha_strong, own_cell_user_cci (true/false)
 *
 * Omitted keys keep their defaults; unknown sections or keys, duplicates and
 * malformed values are rejected. Powers accept -inf (0 W).
 */
class ConfigError : public std::runtime_error
{
public:
    enum class Kind { Syntax, UnknownSection, UnknownKey, DuplicateKey, TypeMismatch, ConstraintViolation };

    /// line/column are 1-based; 0 when the problem has no single location.
    ConfigError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// The message without the location prefix.
    const std::string& detail() const { return detail_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

std::string_view config_error_kind_name(ConfigError::Kind kind);

/// Parses and validates a configuration document.
SweepConfig parse_config(std::string_view text);

/// Canonical form: every key, shortest round-trip number formatting.
std::string serialize_config(const SweepConfig& cfg);

/// Comma list of densities, e.g. "10, 25,50". Throws InvalidParameter.
std::vector<double> parse_density_list(std::string_view text);

/// Comma list of scheme names; NOMA schemes get \p noma, OMA gets \p oma.
std::vector<SchemeConfig> parse_scheme_list(std::string_view text, const SchemeConfig& noma,
                                            const SchemeConfig& oma);

} // namespace udnsim
