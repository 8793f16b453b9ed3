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

#include <doctest.h>

#include <cmath>
#include <set>

using namespace udnsim;

TEST_CASE("xoshiro256** stream matches the reference algorithm")
{
    // first outputs for seed 42, from an independent Python port
    Rng rng(42);
    CHECK(rng.next() == 0x15780b2e0c2ec716ULL);
    CHECK(rng.next() == 0x6104d9866d113a7eULL);
    CHECK(rng.next() == 0xae17533239e499a1ULL);

    Rng again(42);
    CHECK(again.uniform() == doctest::Approx(0.08386297105988216).epsilon(1e-16));
}

TEST_CASE("equal seeds give equal streams, different seeds do not")
{
    Rng a(7), b(7), c(8);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        CHECK(x == b.next());
        (void)c.next();
    }
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("uniform stays in [0, 1) and has mean 1/2")
{
    Rng rng(1);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    // sd of the mean is sqrt(1/12/n) ~ 6.5e-4
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("normal draws have zero mean and unit variance")
{
    Rng rng(3);
    double s1 = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        REQUIRE(std::isfinite(z));
        s1 += z;
        s2 += z * z;
    }
    CHECK(std::abs(s1 / n) < 0.01);
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("poisson sampler")
{
    Rng rng(11);
    CHECK(rng.poisson(0.0) == 0);
    CHECK_THROWS_AS(rng.poisson(-1.0), InvalidParameter);

    SUBCASE("mean and variance match for small and chunked means")
    {
        for (double mean : {0.7, 6.545, 130.9, 1234.5}) {
            const int n = 20000;
            double s1 = 0.0, s2 = 0.0;
            for (int i = 0; i < n; ++i) {
                const double k = static_cast<double>(rng.poisson(mean));
                s1 += k;
                s2 += k * k;
            }
            const double m = s1 / n;
            const double var = s2 / n - m * m;
            CAPTURE(mean);
            CHECK(std::abs(m - mean) < 5.0 * std::sqrt(mean / n));
            CHECK(var == doctest::Approx(mean).epsilon(0.05));
        }
    }
}

TEST_CASE("substream seeds are distinct per (density, trial)")
{
    std::set<std::uint64_t> seeds;
    for (std::uint32_t d = 0; d < 8; ++d)
        for (std::uint32_t t = 0; t < 1000; ++t)
            seeds.insert(substream_seed(99, d, t));
    CHECK(seeds.size() == 8000);
    CHECK(substream_seed(99, 0, 0) == 99);
    CHECK(substream_seed(0, 1, 2) == ((1ULL << 32) | 2ULL));
}
