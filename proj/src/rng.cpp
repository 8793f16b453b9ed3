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

#include "udnsim/rng.hpp"

#include "udnsim/error.hpp"

#include <cmath>
#include <numbers>

namespace udnsim {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

constexpr double kPoissonChunk = 500.0;

std::uint64_t poisson_inversion(Rng& rng, double mean)
{
    const double u = rng.uniform();
    std::uint64_t k = 0;
    double p = std::exp(-mean);
    double cdf = p;
    while (u > cdf) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        // cdf can stall just below 1 from rounding; the tail mass is gone by then
        if (p == 0.0 && static_cast<double>(k) > mean)
            break;
    }
    return k;
}

} // namespace

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed)
{
    std::uint64_t sm = seed;
    for (auto& word : s_)
        word = splitmix64(sm);
}

std::uint64_t Rng::next()
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    // 1 - u lies in (0, 1], keeping log() finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::poisson(double mean)
{
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw InvalidParameter("poisson mean must be finite and non-negative");
    if (mean == 0.0)
        return 0;
    std::uint64_t total = 0;
    double remaining = mean;
    while (remaining > kPoissonChunk) {
        total += poisson_inversion(*this, kPoissonChunk);
        remaining -= kPoissonChunk;
    }
    return total + poisson_inversion(*this, remaining);
}

std::uint64_t substream_seed(std::uint64_t base_seed, std::uint32_t density_index,
                             std::uint32_t trial_index)
{
    return base_seed ^ ((static_cast<std::uint64_t>(density_index) << 32) | trial_index);
}

} // namespace udnsim
