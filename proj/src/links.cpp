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

#include "udnsim/links.hpp"

#include "udnsim/error.hpp"

#include <algorithm>
#include <string>

namespace udnsim {

namespace {

std::optional<std::size_t> try_select(const std::vector<ComplexVector>& beams, BeamRule rule)
{
    if (beams.empty())
        return std::nullopt;
    try {
        return select_beam(beams, rule);
    } catch (const DeadLinkError&) {
        return std::nullopt;
    }
}

double beam_power(const Multipath& mp, std::size_t n, std::optional<std::size_t> beam)
{
    return beam ? std::norm(beam_coefficient(mp, n, *beam)) : 0.0;
}

ChannelRealization realise(const Multipath& mp, std::size_t n)
{
    ChannelRealization ch;
    static_cast<Multipath&>(ch) = mp;
    ch.vector_channel = vector_channel(mp, n);
    return ch;
}

} // namespace

LinkGains LinkGains::zeros(std::size_t n_cells, std::size_t n_dl, std::size_t n_ul)
{
    LinkGains g;
    g.n_cells = n_cells;
    g.n_dl = n_dl;
    g.n_ul = n_ul;
    g.dl_beam.assign(n_cells, std::nullopt);
    g.ul_beam.assign(n_cells, std::nullopt);
    g.own_dl.assign(n_cells * n_dl, 0.0);
    g.own_ul.assign(n_cells * n_ul, 0.0);
    g.dl_cross.assign(n_cells * n_cells * n_dl, 0.0);
    g.ul_cross.assign(n_cells * n_cells * n_ul, 0.0);
    g.sbs_cross.assign(n_cells * n_cells, 0.0);
    g.user_user.assign(n_cells * n_ul * n_cells * n_dl, 0.0);
    return g;
}

TrialLinks TrialLinks::from_gains(LinkGains gains)
{
    const std::size_t nc = gains.n_cells;
    const bool sizes_ok = gains.dl_beam.size() == nc && gains.ul_beam.size() == nc &&
                          gains.own_dl.size() == nc * gains.n_dl && gains.own_ul.size() == nc * gains.n_ul &&
                          gains.dl_cross.size() == nc * nc * gains.n_dl &&
                          gains.ul_cross.size() == nc * nc * gains.n_ul && gains.sbs_cross.size() == nc * nc &&
                          gains.user_user.size() == nc * gains.n_ul * nc * gains.n_dl;
    if (!sizes_ok)
        throw ConsistencyError("link gain tables do not match the cell and user counts");
    for (const auto* table : {&gains.own_dl, &gains.own_ul, &gains.dl_cross, &gains.ul_cross, &gains.sbs_cross,
                              &gains.user_user})
        for (double v : *table)
            if (!(v >= 0.0))
                throw InvalidParameter("link gains must be non-negative");
    TrialLinks links;
    links.g_ = std::move(gains);
    return links;
}

void TrialLinks::check_cell(std::size_t cell) const
{
    if (cell >= g_.n_cells)
        throw ConsistencyError("no links sampled for cell " + std::to_string(cell));
}

std::optional<std::size_t> TrialLinks::dl_beam(std::size_t cell) const
{
    check_cell(cell);
    return g_.dl_beam[cell];
}

std::optional<std::size_t> TrialLinks::ul_beam(std::size_t cell) const
{
    check_cell(cell);
    return g_.ul_beam[cell];
}

double TrialLinks::own_dl_gain(std::size_t cell, std::size_t user) const
{
    check_cell(cell);
    if (user >= g_.n_dl)
        throw ConsistencyError("DL user index out of range");
    return g_.own_dl[cell * g_.n_dl + user];
}

double TrialLinks::own_ul_gain(std::size_t cell, std::size_t user) const
{
    check_cell(cell);
    if (user >= g_.n_ul)
        throw ConsistencyError("UL user index out of range");
    return g_.own_ul[cell * g_.n_ul + user];
}

const ChannelRealization& TrialLinks::own_dl_link(std::size_t cell, std::size_t user) const
{
    own_dl_gain(cell, user);
    if (own_dl_.empty())
        throw ConsistencyError("link set carries no channel realisations");
    return own_dl_[cell * g_.n_dl + user];
}

const ChannelRealization& TrialLinks::own_ul_link(std::size_t cell, std::size_t user) const
{
    own_ul_gain(cell, user);
    if (own_ul_.empty())
        throw ConsistencyError("link set carries no channel realisations");
    return own_ul_[cell * g_.n_ul + user];
}

double TrialLinks::dl_cross_gain(std::size_t sbs, std::size_t cell, std::size_t user) const
{
    check_cell(sbs);
    check_cell(cell);
    if (sbs == cell || user >= g_.n_dl)
        throw ConsistencyError("no DL cross link for this pair");
    return g_.dl_cross[(sbs * g_.n_cells + cell) * g_.n_dl + user];
}

double TrialLinks::sbs_cross_gain(std::size_t from, std::size_t to) const
{
    check_cell(from);
    check_cell(to);
    if (from == to)
        throw ConsistencyError("no SBS cross link from an SBS to itself");
    return g_.sbs_cross[from * g_.n_cells + to];
}

double TrialLinks::ul_cross_gain(std::size_t sbs, std::size_t cell, std::size_t user) const
{
    check_cell(sbs);
    check_cell(cell);
    if (sbs == cell || user >= g_.n_ul)
        throw ConsistencyError("no UL cross link for this pair");
    return g_.ul_cross[(sbs * g_.n_cells + cell) * g_.n_ul + user];
}

double TrialLinks::user_user_gain(std::size_t ul_cell, std::size_t ul_user, std::size_t dl_cell,
                                  std::size_t dl_user) const
{
    check_cell(ul_cell);
    check_cell(dl_cell);
    if (ul_user >= g_.n_ul || dl_user >= g_.n_dl)
        throw ConsistencyError("user index out of range");
    return g_.user_user[((ul_cell * g_.n_ul + ul_user) * g_.n_cells + dl_cell) * g_.n_dl + dl_user];
}

TrialLinks sample_links(const Topology& topology, const RadioConfig& cfg, Rng& rng)
{
    cfg.validate();
    const std::size_t nc = topology.cells.size();
    if (topology.sbs_positions.size() != nc)
        throw ConsistencyError("SBS and cell counts differ");
    const std::size_t n_dl = nc ? topology.cells.front().dl_users.size() : 0;
    const std::size_t n_ul = nc ? topology.cells.front().ul_users.size() : 0;
    for (const auto& cell : topology.cells)
        if (cell.dl_users.size() != n_dl || cell.ul_users.size() != n_ul)
            throw ConsistencyError("cells carry different user counts");

    TrialLinks links;
    LinkGains& g = links.g_;
    g = LinkGains::zeros(nc, n_dl, n_ul);
    links.own_dl_.resize(nc * n_dl);
    links.own_ul_.resize(nc * n_ul);

    const std::size_t n = cfg.n_tx_sbs;
    const double handset_gain = static_cast<double>(cfg.n_tx_user);
    auto draw = [&](Point2 a, Point2 b) {
        const double d = std::max(distance(a, b), kMinLinkDistance);
        const bool los = sample_blockage(d, cfg.los_decay_m, rng);
        return sample_paths(d, los, cfg, rng);
    };

    std::vector<Multipath> dl_rays(nc * n_dl);
    std::vector<Multipath> ul_rays(nc * n_ul);
    std::vector<Multipath> sbs_rays(nc);
    std::vector<ComplexVector> dl_beams(n_dl);
    std::vector<ComplexVector> ul_beams(n_ul);

    for (std::size_t i = 0; i < nc; ++i) {
        const Point2 origin = topology.sbs_positions[i];
        for (std::size_t c = 0; c < nc; ++c) {
            const auto& cell = topology.cells[c];
            for (std::size_t u = 0; u < n_dl; ++u)
                dl_rays[c * n_dl + u] = draw(origin, cell.dl_users[u]);
            for (std::size_t w = 0; w < n_ul; ++w)
                ul_rays[c * n_ul + w] = draw(origin, cell.ul_users[w]);
        }
        for (std::size_t j = 0; j < nc; ++j)
            if (j != i)
                sbs_rays[j] = draw(origin, topology.sbs_positions[j]);

        // own cell: antenna-domain channels and beam selection
        for (std::size_t u = 0; u < n_dl; ++u) {
            auto& ch = links.own_dl_[i * n_dl + u];
            ch = realise(dl_rays[i * n_dl + u], n);
            dl_beams[u] = beamspace_transform(ch.vector_channel);
        }
        for (std::size_t w = 0; w < n_ul; ++w) {
            auto& ch = links.own_ul_[i * n_ul + w];
            ch = realise(ul_rays[i * n_ul + w], n);
            ul_beams[w] = beamspace_transform(ch.vector_channel);
        }
        const auto dl_beam = try_select(dl_beams, BeamRule::StrongestUser);
        const auto ul_beam = try_select(ul_beams, BeamRule::SummedPower);
        g.dl_beam[i] = dl_beam;
        g.ul_beam[i] = ul_beam;
        for (std::size_t u = 0; u < n_dl; ++u) {
            auto& ch = links.own_dl_[i * n_dl + u];
            ch.selected_beam = dl_beam.value_or(0);
            ch.effective_gain = dl_beam ? std::norm(dl_beams[u][*dl_beam]) : 0.0;
            g.own_dl[i * n_dl + u] = ch.effective_gain;
        }
        for (std::size_t w = 0; w < n_ul; ++w) {
            auto& ch = links.own_ul_[i * n_ul + w];
            ch.selected_beam = ul_beam.value_or(0);
            ch.effective_gain = ul_beam ? std::norm(ul_beams[w][*ul_beam]) * handset_gain : 0.0;
            g.own_ul[i * n_ul + w] = ch.effective_gain;
        }

        // foreign links on this SBS's own beams
        for (std::size_t c = 0; c < nc; ++c) {
            if (c == i)
                continue;
            for (std::size_t u = 0; u < n_dl; ++u)
                g.dl_cross[(i * nc + c) * n_dl + u] = beam_power(dl_rays[c * n_dl + u], n, dl_beam);
            for (std::size_t w = 0; w < n_ul; ++w)
                g.ul_cross[(i * nc + c) * n_ul + w] = beam_power(ul_rays[c * n_ul + w], n, ul_beam);
            g.sbs_cross[i * nc + c] = beam_power(sbs_rays[c], n, dl_beam);
        }
    }

    for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t w = 0; w < n_ul; ++w)
            for (std::size_t c = 0; c < nc; ++c)
                for (std::size_t u = 0; u < n_dl; ++u) {
                    const double d = std::max(distance(topology.cells[j].ul_users[w], topology.cells[c].dl_users[u]),
                                              kMinLinkDistance);
                    g.user_user[((j * n_ul + w) * nc + c) * n_dl + u] = db_to_linear(-pathloss_db(d, false, cfg.fc_hz));
                }
    return links;
}

} // namespace udnsim
