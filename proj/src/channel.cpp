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

#include "udnsim/channel.hpp"

#include "udnsim/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace udnsim {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{k=0}^{n-1} exp(j*k*x)
Complex dirichlet_sum(std::size_t n, double x)
{
    const double half_sin = std::sin(0.5 * x);
    if (std::abs(half_sin) < 1e-6) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
            acc += std::polar(1.0, static_cast<double>(k) * x);
        return acc;
    }
    const double nd = static_cast<double>(n);
    return std::polar(std::sin(0.5 * nd * x) / half_sin, 0.5 * (nd - 1.0) * x);
}

} // namespace

void RadioConfig::validate() const
{
    auto finite_positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    auto power_ok = [](double dbm) { return !std::isnan(dbm) && dbm != std::numeric_limits<double>::infinity(); };
    if (!finite_positive(fc_hz))
        throw InvalidParameter("fc_hz must be positive");
    if (!finite_positive(bandwidth_hz))
        throw InvalidParameter("bandwidth_hz must be positive");
    if (!power_ok(p_sbs_dbm) || !power_ok(p_user_dbm) || !power_ok(residual_si_dbm))
        throw InvalidParameter("transmit and residual SI powers must be finite or -inf dBm");
    if (!std::isfinite(noise_power_dbm))
        throw InvalidParameter("noise_power_dbm must be finite");
    if (n_tx_sbs < 1 || n_tx_user < 1)
        throw InvalidParameter("antenna counts must be at least 1");
    if (!(los_decay_m > 0.0) || std::isnan(los_decay_m))
        throw InvalidParameter("los_decay_m must be positive");
}

double pathloss_db(double distance_m, bool los, double fc_hz)
{
    if (!(distance_m > 0.0))
        throw InvalidParameter("link distance must be positive");
    const double d = std::max(distance_m, 1.0);
    const double intercept = 20.0 * std::log10(4.0 * kPi * fc_hz / kSpeedOfLight);
    return intercept + (los ? 20.1 : 34.0) * std::log10(d);
}

double dbm_to_watt(double dbm)
{
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

double watt_to_dbm(double watt)
{
    return 10.0 * std::log10(watt * 1e3);
}

bool sample_blockage(double distance_m, double los_decay_m, Rng& rng)
{
    if (!(distance_m >= 0.0))
        throw InvalidParameter("link distance must be non-negative");
    return rng.uniform() < std::exp(-distance_m / los_decay_m);
}

ComplexVector steering_vector(std::size_t n, double theta_rad)
{
    if (n < 1)
        throw InvalidParameter("array needs at least one element");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double step = kPi * std::sin(theta_rad);
    ComplexVector a(n);
    for (std::size_t k = 0; k < n; ++k)
        a[k] = std::polar(scale, step * static_cast<double>(k));
    return a;
}

double beam_grid_sin(std::size_t n, std::size_t beam)
{
    return -1.0 + 2.0 * static_cast<double>(beam) / static_cast<double>(n);
}

Multipath sample_paths(double distance_m, bool los, const RadioConfig& cfg, Rng& rng)
{
    if (!(distance_m > 0.0))
        throw InvalidParameter("link distance must be positive");
    Multipath mp;
    mp.distance_clamped = distance_m < 1.0;
    mp.link_distance_m = std::max(distance_m, 1.0);
    mp.los = los;
    const std::size_t n_paths = (los ? 1 : 0) + cfg.n_nlos_paths;
    mp.path_gains.reserve(n_paths);
    mp.path_angles.reserve(n_paths);

    if (los) {
        const double amplitude = std::sqrt(db_to_linear(-pathloss_db(mp.link_distance_m, true, cfg.fc_hz)));
        const double phase = 2.0 * kPi * rng.uniform();
        mp.path_gains.push_back(std::polar(amplitude, phase));
        mp.path_angles.push_back(rng.uniform(-0.5 * kPi, 0.5 * kPi));
    }
    const double nlos_sigma =
        std::sqrt(0.5 * db_to_linear(-pathloss_db(mp.link_distance_m, false, cfg.fc_hz)));
    for (std::size_t l = 0; l < cfg.n_nlos_paths; ++l) {
        const double re = nlos_sigma * rng.normal();
        const double im = nlos_sigma * rng.normal();
        mp.path_gains.emplace_back(re, im);
        mp.path_angles.push_back(rng.uniform(-0.5 * kPi, 0.5 * kPi));
    }
    return mp;
}

ComplexVector vector_channel(const Multipath& paths, std::size_t n)
{
    ComplexVector h(n, Complex{0.0, 0.0});
    const double array_scale = std::sqrt(static_cast<double>(n));
    for (std::size_t l = 0; l < paths.path_gains.size(); ++l) {
        const auto a = steering_vector(n, paths.path_angles[l]);
        const Complex g = paths.path_gains[l] * array_scale;
        for (std::size_t k = 0; k < n; ++k)
            h[k] += g * a[k];
    }
    return h;
}

ChannelRealization sample_multipath(double distance_m, bool los, const RadioConfig& cfg, Rng& rng)
{
    ChannelRealization ch;
    static_cast<Multipath&>(ch) = sample_paths(distance_m, los, cfg, rng);
    ch.vector_channel = vector_channel(ch, cfg.n_tx_sbs);
    const ComplexVector beams = beamspace_transform(ch.vector_channel);
    double best = 0.0;
    for (std::size_t m = 0; m < beams.size(); ++m) {
        const double p = std::norm(beams[m]);
        if (p > best) {
            best = p;
            ch.selected_beam = m;
        }
    }
    ch.effective_gain = best;
    return ch;
}

ComplexVector beamspace_transform(std::span<const Complex> h)
{
    const std::size_t n = h.size();
    if (n < 1)
        throw InvalidParameter("beamspace transform of an empty vector");
    // conj(f_m[k]) = (-1)^k * exp(-2*pi*j*k*m/n) / sqrt(n)
    ComplexVector twiddle(n);
    for (std::size_t i = 0; i < n; ++i)
        twiddle[i] = std::polar(1.0, -2.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
    ComplexVector alternated(h.begin(), h.end());
    for (std::size_t k = 1; k < n; k += 2)
        alternated[k] = -alternated[k];

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexVector out(n);
    for (std::size_t m = 0; m < n; ++m) {
        Complex acc{0.0, 0.0};
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += twiddle[idx] * alternated[k];
            idx += m;
            if (idx >= n)
                idx -= n;
        }
        out[m] = acc * scale;
    }
    return out;
}

Complex beam_coefficient(const Multipath& paths, std::size_t n, std::size_t beam)
{
    if (beam >= n)
        throw InvalidParameter("beam index out of range");
    const double grid = beam_grid_sin(n, beam);
    // sqrt(n) array factor times the 1/n of the two normalised vectors
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < paths.path_gains.size(); ++l) {
        const double x = kPi * (std::sin(paths.path_angles[l]) - grid);
        acc += paths.path_gains[l] * dirichlet_sum(n, x);
    }
    return acc * scale;
}

std::size_t select_beam(std::span<const ComplexVector> beam_vectors, BeamRule rule)
{
    if (beam_vectors.empty())
        throw DeadLinkError("no users to select a beam for");
    const std::size_t n = beam_vectors.front().size();
    for (const auto& v : beam_vectors)
        if (v.size() != n)
            throw InvalidParameter("beamspace vectors differ in length");

    std::size_t best_beam = 0;
    double best = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        double score = 0.0;
        for (const auto& v : beam_vectors) {
            const double p = std::norm(v[m]);
            score = rule == BeamRule::StrongestUser ? std::max(score, p) : score + p;
        }
        if (score > best) {
            best = score;
            best_beam = m;
        }
    }
    if (best == 0.0)
        throw DeadLinkError("all beamspace coefficients are zero");
    return best_beam;
}

double effective_gain(std::span<const Complex> h, std::size_t beam, double array_gain)
{
    const std::size_t n = h.size();
    if (beam >= n)
        throw InvalidParameter("beam index out of range");
    const double grid_phase = kPi * beam_grid_sin(n, beam);
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
        acc += std::polar(1.0, -grid_phase * static_cast<double>(k)) * h[k];
    return std::norm(acc) / static_cast<double>(n) * array_gain;
}

} // namespace udnsim
