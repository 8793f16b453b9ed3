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

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace udnsim {

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

double distance(Point2 a, Point2 b);

/// One macro-cell sector with its apex at the origin, opening counter-clockwise
/// from the positive x axis.
struct SectorGeometry
{
    double macro_radius_m = 500.0;
    double sector_angle_rad = std::numbers::pi / 3.0;
    double close_zone_radius_m = 250.0; // metadata only

    void validate() const;
    double area_m2() const { return 0.5 * sector_angle_rad * macro_radius_m * macro_radius_m; }
    double area_km2() const { return area_m2() * 1e-6; }

    bool operator==(const SectorGeometry&) const = default;
};

/// Per-cell user population.
struct UserDrop
{
    double sc_radius_m = 100.0;
    std::size_t n_dl = 2;
    std::size_t n_ul = 2;

    void validate() const;
    bool operator==(const UserDrop&) const = default;
};

struct Cell
{
    std::size_t sbs_index = 0;
    std::vector<Point2> dl_users;
    std::vector<Point2> ul_users;
    double sc_radius_m = 0.0;

    bool operator==(const Cell&) const = default;
};

struct Topology
{
    std::vector<Point2> sbs_positions;
    std::vector<Cell> cells;
    SectorGeometry geometry;
    double density_per_km2 = 0.0;
    std::uint64_t seed = 0;

    std::size_t num_cells() const { return cells.size(); }
    bool operator==(const Topology&) const = default;
};

/// Links shorter than this are clamped; the path-loss law is only valid above it.
inline constexpr double kMinLinkDistance = 1.0;

bool in_sector(Point2 p, const SectorGeometry& geometry);

/// Homogeneous PPP of the given intensity (SBS/km^2) restricted to the sector.
std::vector<Point2> sample_sbs_positions(double density_per_km2, const SectorGeometry& geometry,
                                         Rng& rng);

/// Uniform users on the annulus [kMinLinkDistance, sc_radius] around \p sbs.
/// DL users are drawn before UL users.
Cell drop_users(Point2 sbs, double sc_radius_m, std::size_t n_dl, std::size_t n_ul, Rng& rng);

/// Full layout for one trial: PPP deployment followed by one user drop per SBS,
/// all consumed from an Rng seeded with \p seed.
Topology generate_topology(double density_per_km2, const SectorGeometry& geometry,
                           const UserDrop& drop, std::uint64_t seed);

/// Same, drawing from a caller-owned stream; \p seed is recorded only.
Topology generate_topology(double density_per_km2, const SectorGeometry& geometry,
                           const UserDrop& drop, Rng& rng, std::uint64_t seed);

/// Lossless text dump (17 significant digits) used for determinism checks.
std::string serialize(const Topology& topology);

} // namespace udnsim
