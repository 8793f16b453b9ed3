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

#include "udnsim/rng.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace udnsim {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s

/// Radio parameters shared by every link. Defaults are the 28 GHz study values.
struct RadioConfig
{
    double fc_hz = 28e9;
    double bandwidth_hz = 100e6;
    double p_sbs_dbm = 24.0;
    double p_user_dbm = 20.0;
    double noise_power_dbm = -104.0;
    double residual_si_dbm = -110.0;
    std::size_t n_tx_sbs = 64;
    std::size_t n_tx_user = 32;
    double los_decay_m = 100.0;
    std::size_t n_nlos_paths = 2;

    /// Powers may be -inf dBm (0 W); everything else must be finite and in range.
    void validate() const;
    bool operator==(const RadioConfig&) const = default;
};

/// Free-space intercept at 1 m plus a 20.1 (LOS) or 34.0 (NLOS) dB/decade slope.
/// Distances in (0, 1) are clamped to 1 m.
double pathloss_db(double distance_m, bool los, double fc_hz);

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Draws the LOS state of a link: true with probability exp(-d / los_decay).
bool sample_blockage(double distance_m, double los_decay_m, Rng& rng);

/// Half-wavelength ULA response, element k = exp(j*pi*k*sin(theta)) / sqrt(n).
ComplexVector steering_vector(std::size_t n, double theta_rad);

/// sin(theta) of DFT beam \p beam on an n-element array: -1 + 2*beam/n.
double beam_grid_sin(std::size_t n, std::size_t beam);

/// Sparse description of a link: one optional LOS ray plus NLOS scatterers.
/// Gains are complex amplitudes with path loss applied.
struct Multipath
{
    double link_distance_m = 0.0;
    bool los = false;
    bool distance_clamped = false; // requested distance was below 1 m
    std::vector<Complex> path_gains;
    std::vector<double> path_angles;
};

/// Draws the rays of one link. Consumes, in order: LOS phase and angle (if LOS),
/// then real part, imaginary part and angle for each NLOS ray.
Multipath sample_paths(double distance_m, bool los, const RadioConfig& cfg, Rng& rng);

/// Antenna-domain channel sum_l gain_l * sqrt(n) * a(n, theta_l).
ComplexVector vector_channel(const Multipath& paths, std::size_t n);

struct ChannelRealization : Multipath
{
    ComplexVector vector_channel;
    std::size_t selected_beam = 0;
    double effective_gain = 0.0; ///< |beamspace coefficient|^2 on selected_beam
};

/// sample_paths() followed by the antenna-domain channel over n_tx_sbs elements.
/// The beam is this link's own strongest beam (0 with zero gain for dead links).
ChannelRealization sample_multipath(double distance_m, bool los, const RadioConfig& cfg, Rng& rng);

/// Unitary DFT: coefficient m is the inner product with steering_vector at beam_grid_sin(n, m).
ComplexVector beamspace_transform(std::span<const Complex> h);

/// One beamspace coefficient of vector_channel(paths, n), evaluated in closed form.
Complex beam_coefficient(const Multipath& paths, std::size_t n, std::size_t beam);

enum class BeamRule {
    StrongestUser, ///< DL: the beam carrying the single largest coefficient of any user
    SummedPower,   ///< UL: the beam maximising the summed power over users
};

/// Picks the serving beam of one RF chain from per-user beamspace vectors.
/// Ties go to the lowest beam index. Throws DeadLinkError if every
/// coefficient is zero.
std::size_t select_beam(std::span<const ComplexVector> beam_vectors, BeamRule rule);

/// |<f_beam, h>|^2 * array_gain, with h in the antenna domain. UL callers pass
/// n_tx_user for the handset's matched beamformer.
double effective_gain(std::span<const Complex> h, std::size_t beam, double array_gain = 1.0);

} // namespace udnsim
