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

#include "udnsim/access_schemes.hpp"

#include "udnsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace udnsim {

namespace {

void require_noise(double noise_w)
{
    if (!(noise_w > 0.0) || !std::isfinite(noise_w))
        throw InvalidParameter("noise power must be positive and finite");
}

void require_non_negative(std::initializer_list<double> values, const char* what)
{
    for (double v : values)
        if (!(v >= 0.0))
            throw InvalidParameter(std::string(what) + " must be non-negative");
}

double dl_inter_cci(const TrialLinks& links, const RadioConfig& radio, const SchemeConfig& scheme,
                    std::size_t cell, std::size_t user, const InterferenceOptions& options)
{
    const double p_sbs = dbm_to_watt(radio.p_sbs_dbm);
    double total = 0.0;
    for (std::size_t i = 0; i < links.num_cells(); ++i)
        if (i != cell)
            total += p_sbs * links.dl_cross_gain(i, cell, user);
    if (scheme.is_full_duplex()) {
        const double p_user = dbm_to_watt(radio.p_user_dbm);
        for (std::size_t j = 0; j < links.num_cells(); ++j) {
            if (j == cell && !options.own_cell_user_cci)
                continue;
            for (std::size_t w = 0; w < links.num_ul(); ++w)
                total += p_user * links.user_user_gain(j, w, cell, user);
        }
    }
    return total;
}

double ul_inter_cci(const TrialLinks& links, const RadioConfig& radio, std::size_t cell)
{
    const double p_sbs = dbm_to_watt(radio.p_sbs_dbm);
    const double p_user = dbm_to_watt(radio.p_user_dbm);
    double total = 0.0;
    for (std::size_t i = 0; i < links.num_cells(); ++i)
        if (i != cell)
            total += p_sbs * links.sbs_cross_gain(i, cell);
    for (std::size_t j = 0; j < links.num_cells(); ++j) {
        if (j == cell)
            continue;
        for (std::size_t w = 0; w < links.num_ul(); ++w)
            total += p_user * links.ul_cross_gain(cell, j, w);
    }
    return total;
}

} // namespace

std::string_view scheme_name(Scheme scheme)
{
    switch (scheme) {
    case Scheme::OmaHd:
        return "OMA_HD";
    case Scheme::NomaHd:
        return "NOMA_HD";
    case Scheme::NomaFd:
        return "NOMA_FD";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    for (auto s : {Scheme::OmaHd, Scheme::NomaHd, Scheme::NomaFd})
        if (scheme_name(s) == name)
            return s;
    return std::nullopt;
}

SchemeConfig SchemeConfig::defaults(Scheme scheme)
{
    if (scheme == Scheme::OmaHd)
        return {scheme, 0.5, 0.5};
    return {scheme, 0.7, 0.3};
}

void SchemeConfig::validate() const
{
    if (!(alpha_weak >= 0.0) || !(alpha_strong >= 0.0))
        throw InvalidParameter("power coefficients must be non-negative");
    if (std::abs(alpha_weak + alpha_strong - 1.0) > 1e-12)
        throw InvalidParameter("power coefficients must sum to 1");
    if (alpha_weak < alpha_strong)
        throw InvalidParameter("the weak user must receive at least the strong user's power share");
}

double shannon_rate(double bandwidth_hz, double sinr)
{
    if (!(bandwidth_hz > 0.0))
        throw InvalidParameter("bandwidth must be positive");
    if (!(sinr >= 0.0))
        throw InvalidParameter("SINR must be non-negative");
    return bandwidth_hz * std::log1p(sinr) / std::numbers::ln2;
}

PairOrder classify_pair(double gain_a, double gain_b)
{
    require_non_negative({gain_a, gain_b}, "gains");
    if (gain_b < gain_a)
        return {1, 0};
    return {0, 1};
}

std::pair<double, double> noma_dl_rates(double gain_weak, double gain_strong, double power_w,
                                        const SchemeConfig& alpha, double interference_weak_w,
                                        double interference_strong_w, double noise_w,
                                        double bandwidth_hz)
{
    require_noise(noise_w);
    require_non_negative({gain_weak, gain_strong, power_w, interference_weak_w, interference_strong_w},
                         "gains and powers");
    if (gain_weak > gain_strong)
        throw OrderingViolation("weak user has the larger gain");

    const double weak_rx = power_w * gain_weak;
    const double sinr_weak =
        alpha.alpha_weak * weak_rx / (alpha.alpha_strong * weak_rx + interference_weak_w + noise_w);
    const double sinr_strong = alpha.alpha_strong * power_w * gain_strong / (interference_strong_w + noise_w);
    return {shannon_rate(bandwidth_hz, sinr_weak), shannon_rate(bandwidth_hz, sinr_strong)};
}

std::pair<double, double> oma_dl_rates(double gain_1, double gain_2, double power_w,
                                       double interference_1_w, double interference_2_w,
                                       double noise_w, double bandwidth_hz, double alpha_1,
                                       double alpha_2)
{
    require_noise(noise_w);
    require_non_negative({gain_1, gain_2, power_w, interference_1_w, interference_2_w, alpha_1, alpha_2},
                         "gains and powers");
    const double half = 0.5 * bandwidth_hz;
    auto rate = [&](double gain, double alpha, double interference) {
        return shannon_rate(half, alpha * power_w * gain / (0.5 * interference + 0.5 * noise_w));
    };
    return {rate(gain_1, alpha_1, interference_1_w), rate(gain_2, alpha_2, interference_2_w)};
}

std::vector<double> noma_ul_rates(std::span<const double> received_w, double interference_w,
                                  double self_interference_w, double noise_w, double bandwidth_hz)
{
    require_noise(noise_w);
    require_non_negative({interference_w, self_interference_w}, "interference");
    for (double s : received_w)
        require_non_negative({s}, "received power");

    std::vector<std::size_t> order(received_w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return received_w[a] > received_w[b]; });

    // users still undecoded after each stage, summed from the weakest upwards
    const double floor_w = interference_w + self_interference_w + noise_w;
    std::vector<double> rates(received_w.size(), 0.0);
    double later = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const double s = received_w[*it];
        rates[*it] = shannon_rate(bandwidth_hz, s / (later + floor_w));
        later += s;
    }
    return rates;
}

SinrBreakdown aggregate_interference(const TrialLinks& links, const RadioConfig& radio,
                                     const SchemeConfig& scheme, Victim victim,
                                     const InterferenceOptions& options)
{
    SinrBreakdown out;
    const double noise = dbm_to_watt(radio.noise_power_dbm);
    out.noise = noise;

    if (victim.kind == Victim::Kind::UlSbs) {
        const double p_user = dbm_to_watt(radio.p_user_dbm);
        for (std::size_t w = 0; w < links.num_ul(); ++w)
            out.signal += p_user * links.own_ul_gain(victim.cell, w);
        out.inter_cci = ul_inter_cci(links, radio, victim.cell);
        out.self_interference = scheme.is_full_duplex() ? dbm_to_watt(radio.residual_si_dbm) : 0.0;
        return out;
    }

    const double p_sbs = dbm_to_watt(radio.p_sbs_dbm);
    const double gain = links.own_dl_gain(victim.cell, victim.user);
    out.inter_cci = dl_inter_cci(links, radio, scheme, victim.cell, victim.user, options);

    if (links.num_dl() < 2) {
        out.signal = p_sbs * gain;
        return out;
    }
    if (links.num_dl() > 2)
        throw InvalidParameter("at most two DL users share one RF chain");

    const std::size_t other = 1 - victim.user;
    const auto order = victim.user == 0 ? classify_pair(gain, links.own_dl_gain(victim.cell, other))
                                        : classify_pair(links.own_dl_gain(victim.cell, other), gain);
    const bool is_weak = order.weak == victim.user;
    const double alpha = is_weak ? scheme.alpha_weak : scheme.alpha_strong;
    if (scheme.is_noma()) {
        out.signal = alpha * p_sbs * gain;
        out.intra_cci = is_weak ? scheme.alpha_strong * p_sbs * gain : 0.0;
    } else {
        out.signal = alpha * p_sbs * gain;
        out.inter_cci *= 0.5;
        out.noise *= 0.5;
    }
    return out;
}

CellContext cell_context(const TrialLinks& links, const RadioConfig& radio,
                         const SchemeConfig& scheme, std::size_t cell,
                         const InterferenceOptions& options)
{
    CellContext ctx;
    for (std::size_t u = 0; u < links.num_dl(); ++u) {
        ctx.dl_gain.push_back(links.own_dl_gain(cell, u));
        ctx.dl_interference_w.push_back(dl_inter_cci(links, radio, scheme, cell, u, options));
    }
    if (scheme.is_full_duplex()) {
        for (std::size_t w = 0; w < links.num_ul(); ++w)
            ctx.ul_gain.push_back(links.own_ul_gain(cell, w));
        ctx.ul_interference_w = ul_inter_cci(links, radio, cell);
    }
    return ctx;
}

CellRates cell_sum_rate(const CellContext& cell, const SchemeConfig& scheme, const RadioConfig& radio)
{
    if (cell.dl_gain.size() != cell.dl_interference_w.size())
        throw ConsistencyError("DL gain and interference lists differ in length");
    if (cell.dl_gain.size() > 2)
        throw InvalidParameter("at most two DL users share one RF chain");

    const double p_sbs = dbm_to_watt(radio.p_sbs_dbm);
    const double noise = dbm_to_watt(radio.noise_power_dbm);
    const double bw = radio.bandwidth_hz;

    CellRates rates;
    const auto& g = cell.dl_gain;
    const auto& in = cell.dl_interference_w;
    if (g.size() == 1) {
        rates.dl_rates.push_back(shannon_rate(bw, p_sbs * g[0] / (in[0] + noise)));
    } else if (g.size() == 2) {
        const auto [weak, strong] = classify_pair(g[0], g[1]);
        rates.dl_rates.assign(2, 0.0);
        if (scheme.is_noma()) {
            const auto [rw, rs] = noma_dl_rates(g[weak], g[strong], p_sbs, scheme, in[weak], in[strong],
                                                noise, bw);
            rates.dl_rates[weak] = rw;
            rates.dl_rates[strong] = rs;
        } else {
            const auto [rw, rs] = oma_dl_rates(g[weak], g[strong], p_sbs, in[weak], in[strong], noise, bw,
                                               scheme.alpha_weak, scheme.alpha_strong);
            rates.dl_rates[weak] = rw;
            rates.dl_rates[strong] = rs;
        }
    }

    if (scheme.is_full_duplex() && !cell.ul_gain.empty()) {
        const double p_user = dbm_to_watt(radio.p_user_dbm);
        std::vector<double> received;
        received.reserve(cell.ul_gain.size());
        for (double gain : cell.ul_gain)
            received.push_back(p_user * gain);
        rates.ul_rates = noma_ul_rates(received, cell.ul_interference_w,
                                       dbm_to_watt(radio.residual_si_dbm), noise, bw);
    }

    for (double r : rates.dl_rates)
        rates.sum += r;
    for (double r : rates.ul_rates)
        rates.sum += r;
    return rates;
}

} // namespace udnsim
