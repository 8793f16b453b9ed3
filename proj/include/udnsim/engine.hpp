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

#include "udnsim/access_schemes.hpp"
#include "udnsim/channel.hpp"
#include "udnsim/links.hpp"
#include "udnsim/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace udnsim {

/// Densities swept by default, in SBS/km^2.
inline const std::vector<double> kDefaultDensities{10, 25, 50, 100, 200, 400, 700, 1000};

struct SweepConfig
{
    std::vector<double> densities = kDefaultDensities;
    std::size_t trials = 1000;
    std::uint64_t base_seed = 1;
    std::vector<SchemeConfig> schemes{SchemeConfig::defaults(Scheme::OmaHd),
                                      SchemeConfig::defaults(Scheme::NomaHd),
                                      SchemeConfig::defaults(Scheme::NomaFd)};
    RadioConfig radio;
    SectorGeometry geometry;
    UserDrop drop;
    InterferenceOptions interference;
    std::size_t workers = 1;

    void validate() const;
    bool operator==(const SweepConfig&) const = default;
};

/// Rates of every cell under one scheme, in cell order.
std::vector<CellRates> evaluate_cells(const TrialLinks& links, const SweepConfig& cfg,
                                      const SchemeConfig& scheme);

/// Sector sum rate per configured scheme for a given layout. Channels are drawn
/// once from \p rng and shared by every scheme.
std::vector<double> evaluate_topology(const Topology& topology, const SweepConfig& cfg, Rng& rng);

/// One Monte Carlo trial: topology and channels from the substream of
/// (density_index, trial_index), then every scheme on that draw.
std::vector<double> run_trial(const SweepConfig& cfg, std::size_t density_index,
                              std::size_t trial_index);

struct Summary
{
    double mean = 0.0;
    double std_dev = 0.0; ///< unbiased; 0 for a single sample
    double ci95_low = 0.0;
    double ci95_high = 0.0;
};

/// Mean, sample standard deviation and mean +- 1.96 * sd / sqrt(n). The
/// samples are sorted first, so the result does not depend on their order.
Summary aggregate(std::span<const double> samples);

struct SweepRow
{
    double density_per_km2 = 0.0;
    Scheme scheme = Scheme::OmaHd;
    std::size_t trials = 0;
    Summary stats;
};

/// Rows ordered by density (as configured) then scheme (as configured).
struct SweepResult
{
    std::vector<SweepRow> rows;

    const SweepRow* find(double density, Scheme scheme) const;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every (density, trial) pair on cfg.workers threads. Results are merged
/// by index, so the output is identical for any worker count.
SweepResult run_sweep(const SweepConfig& cfg, const ProgressFn& progress = {});

} // namespace udnsim
