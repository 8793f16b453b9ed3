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

#include <array>
#include <cstdint>
#include <limits>

namespace udnsim {

/// SplitMix64 step (Steele, Lea & Flood 2014). Used to expand seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/**
 * xoshiro256** 1.0 (Blackman & Vigna), seeded by four SplitMix64 outputs.
 *
 * All variates are produced by the explicit algorithms below instead of the
 * <random> distributions, whose output is implementation-defined. A port to
 * another language that follows the same recipes reproduces the streams.
 *
 *  - uniform():  (next() >> 11) * 2^-53, in [0, 1)
 *  - normal():   Box-Muller on two uniforms, cosine branch only, no caching
 *  - poisson():  sequential pmf inversion on one uniform, mean split in
 *                chunks of at most 500 to stay clear of exp() underflow
 */
class Rng
{
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next(); }
    result_type next();

    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();
    std::uint64_t poisson(double mean);

    bool operator==(const Rng&) const = default;

private:
    std::array<std::uint64_t, 4> s_{};
};

/// Seed of the substream for one (density, trial) work unit:
/// base ^ ((density_index << 32) | trial_index).
std::uint64_t substream_seed(std::uint64_t base_seed, std::uint32_t density_index,
                             std::uint32_t trial_index);

} // namespace udnsim
