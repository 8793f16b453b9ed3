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

#include "udnsim/channel.hpp"
#include "udnsim/topology.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace udnsim {

/**
 * All channel draws of one trial, reduced to the scalar power gains the rate
 * formulas need.
 *
 * Every SBS array sees one multipath link per user (own and foreign cells) and
 * per other SBS. The DL beam of a cell is picked from its DL users with
 * BeamRule::StrongestUser, the UL beam from its UL users with
 * BeamRule::SummedPower. Foreign links are evaluated on the array owner's own
 * beam, so interference leaks through the sidelobes of the beam that SBS
 * actually serves with. UL user to DL user links carry NLOS path loss only.
 *
 * Draw order (per SBS i, ascending): for every cell c, its DL users then its
 * UL users; then every other SBS in ascending order. Each link consumes one
 * blockage uniform followed by sample_paths().
 */
/// Flat gain tables behind TrialLinks. Index layouts:
/// own_dl [cell][dl user], own_ul [cell][ul user], dl_cross [sbs][cell][dl user],
/// ul_cross [receiving sbs][cell][ul user], sbs_cross [from][to],
/// user_user [ul cell][ul user][dl cell][dl user]. Diagonal cross entries are unused.
struct LinkGains
{
    std::size_t n_cells = 0;
    std::size_t n_dl = 0;
    std::size_t n_ul = 0;
    std::vector<std::optional<std::size_t>> dl_beam;
    std::vector<std::optional<std::size_t>> ul_beam;
    std::vector<double> own_dl;
    std::vector<double> own_ul; ///< includes the handset array gain
    std::vector<double> dl_cross;
    std::vector<double> ul_cross;
    std::vector<double> sbs_cross;
    std::vector<double> user_user;

    /// Zero-filled tables of the right sizes, beams unset.
    static LinkGains zeros(std::size_t n_cells, std::size_t n_dl, std::size_t n_ul);
};

class TrialLinks
{
public:
    TrialLinks() = default;

    /// Hand-built link set (no antenna-domain realisations). Checks table sizes.
    static TrialLinks from_gains(LinkGains gains);

    const LinkGains& gains() const { return g_; }
    bool has_realisations() const { return !own_dl_.empty() || !own_ul_.empty(); }

    std::size_t num_cells() const { return g_.n_cells; }
    std::size_t num_dl() const { return g_.n_dl; }
    std::size_t num_ul() const { return g_.n_ul; }

    /// Serving beam, empty if every coefficient was zero.
    std::optional<std::size_t> dl_beam(std::size_t cell) const;
    std::optional<std::size_t> ul_beam(std::size_t cell) const;

    /// Own-cell DL gain on the cell's DL beam.
    double own_dl_gain(std::size_t cell, std::size_t user) const;
    /// Own-cell UL gain on the cell's UL beam, including the n_tx_user handset gain.
    double own_ul_gain(std::size_t cell, std::size_t user) const;
    /// SBS \p sbs (DL beam) towards DL user \p user of \p cell.
    double dl_cross_gain(std::size_t sbs, std::size_t cell, std::size_t user) const;
    /// SBS \p from (DL beam) towards the receiver of SBS \p to.
    double sbs_cross_gain(std::size_t from, std::size_t to) const;
    /// UL user \p user of \p cell as seen by SBS \p sbs on its UL beam.
    double ul_cross_gain(std::size_t sbs, std::size_t cell, std::size_t user) const;
    /// UL user (ul_cell, ul_user) towards DL user (dl_cell, dl_user).
    double user_user_gain(std::size_t ul_cell, std::size_t ul_user, std::size_t dl_cell,
                          std::size_t dl_user) const;

    /// Own-cell realisations with selected_beam set to the serving beam.
    /// Throws ConsistencyError for link sets built with from_gains().
    const ChannelRealization& own_dl_link(std::size_t cell, std::size_t user) const;
    const ChannelRealization& own_ul_link(std::size_t cell, std::size_t user) const;

    friend TrialLinks sample_links(const Topology&, const RadioConfig&, Rng&);

private:
    void check_cell(std::size_t cell) const;

    LinkGains g_;
    std::vector<ChannelRealization> own_dl_;
    std::vector<ChannelRealization> own_ul_;
};

/// Draws every link of \p topology. All cells must share the same user counts.
TrialLinks sample_links(const Topology& topology, const RadioConfig& cfg, Rng& rng);

} // namespace udnsim
