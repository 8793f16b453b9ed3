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
#include "udnsim/links.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace udnsim {

enum class Scheme { OmaHd, NomaHd, NomaFd };

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// Access scheme plus the DL power split between the weak and the strong user.
struct SchemeConfig
{
    Scheme scheme = Scheme::NomaHd;
    double alpha_weak = 0.7;
    double alpha_strong = 0.3;

    static SchemeConfig defaults(Scheme scheme);

    bool is_noma() const { return scheme != Scheme::OmaHd; }
    bool is_full_duplex() const { return scheme == Scheme::NomaFd; }

    /// alpha_weak + alpha_strong == 1 (1e-12), alpha_weak >= alpha_strong >= 0.
    void validate() const;
    bool operator==(const SchemeConfig&) const = default;
};

/// Received power components at one receiver, in watts.
struct SinrBreakdown
{
    double signal = 0.0;
    double intra_cci = 0.0;
    double inter_cci = 0.0;
    double self_interference = 0.0;
    double noise = 0.0;

    double interference_plus_noise() const { return intra_cci + inter_cci + self_interference + noise; }
    double sinr() const { return signal / interference_plus_noise(); }
};

struct CellRates
{
    std::vector<double> dl_rates;
    std::vector<double> ul_rates;
    double sum = 0.0;
};

/// B * log2(1 + sinr).
double shannon_rate(double bandwidth_hz, double sinr);

struct PairOrder
{
    std::size_t weak;
    std::size_t strong;
};

/// Weak = smaller effective gain; on a tie the first argument is the weak user.
PairOrder classify_pair(double gain_a, double gain_b);

/// Two-user power-domain NOMA downlink. The strong user cancels the weak
/// user's layer; the weak user decodes with the strong layer as noise.
/// Returns (weak rate, strong rate). Requires gain_weak <= gain_strong.
std::pair<double, double> noma_dl_rates(double gain_weak, double gain_strong, double power_w,
                                        const SchemeConfig& alpha, double interference_weak_w,
                                        double interference_strong_w, double noise_w,
                                        double bandwidth_hz);

/// Two-user OMA downlink: each user gets half the band and power share
/// alpha_k * power_w, with interference and noise prorated to the half band.
/// alpha_1 goes to the first user, alpha_2 to the second.
std::pair<double, double> oma_dl_rates(double gain_1, double gain_2, double power_w,
                                       double interference_1_w, double interference_2_w,
                                       double noise_w, double bandwidth_hz, double alpha_1 = 0.5,
                                       double alpha_2 = 0.5);

/// Uplink SuIC at the SBS. Users are decoded strongest received power first
/// (stable on ties); each sees the not-yet-decoded users as noise. Rates come
/// back in input order.
std::vector<double> noma_ul_rates(std::span<const double> received_w, double interference_w,
                                  double self_interference_w, double noise_w, double bandwidth_hz);

/// Knobs on top of the access scheme that change which interferers count.
struct InterferenceOptions
{
    /// NOMA-FD: UL users of the victim's own cell interfere with its DL users.
    bool own_cell_user_cci = true;

    bool operator==(const InterferenceOptions&) const = default;
};

struct Victim
{
    enum class Kind { DlUser, UlSbs };
    Kind kind = Kind::DlUser;
    std::size_t cell = 0;
    std::size_t user = 0; ///< DL user index; ignored for UlSbs

    static Victim dl_user(std::size_t cell, std::size_t user) { return {Kind::DlUser, cell, user}; }
    static Victim ul_sbs(std::size_t cell) { return {Kind::UlSbs, cell, 0}; }
};

/**
 * Power budget at one victim, interference treated as noise.
 *
 * DL user: inter_cci collects every other SBS's DL transmission on its own
 * beam, plus under NOMA-FD the UL users of every cell (own cell subject to
 * InterferenceOptions). signal/intra_cci follow the scheme: NOMA splits the
 * cell power by classify_pair and the weak user carries the strong layer as
 * intra_cci; OMA reports the half-band quantities of its user.
 *
 * UL SBS: signal is the total UL power received on the UL beam, inter_cci
 * the other SBSs' DL plus the other cells' UL users, self_interference the
 * residual SI under NOMA-FD and zero otherwise.
 */
SinrBreakdown aggregate_interference(const TrialLinks& links, const RadioConfig& radio,
                                     const SchemeConfig& scheme, Victim victim,
                                     const InterferenceOptions& options = {});

/// Everything the rate formulas need for one cell, powers excluded.
struct CellContext
{
    std::vector<double> dl_gain;
    std::vector<double> dl_interference_w; ///< inter-cell (and UL user) CCI per DL user
    std::vector<double> ul_gain;           ///< includes the handset array gain
    double ul_interference_w = 0.0;        ///< inter-cell CCI at the SBS receiver
};

CellContext cell_context(const TrialLinks& links, const RadioConfig& radio,
                         const SchemeConfig& scheme, std::size_t cell,
                         const InterferenceOptions& options = {});

/// Rates of one cell. OMA-HD and NOMA-HD schedule the DL users only; NOMA-FD
/// adds the UL users through noma_ul_rates. At most two DL users are supported.
CellRates cell_sum_rate(const CellContext& cell, const SchemeConfig& scheme,
                        const RadioConfig& radio);

} // namespace udnsim
