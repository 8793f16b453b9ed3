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

#include "udnsim/topology.hpp"

#include "udnsim/error.hpp"

#include <cmath>
#include <cstdio>

namespace udnsim {

double distance(Point2 a, Point2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void SectorGeometry::validate() const
{
    if (!(macro_radius_m > 0.0) || !std::isfinite(macro_radius_m))
        throw InvalidParameter("macro_radius_m must be positive");
    if (!(close_zone_radius_m > 0.0 && close_zone_radius_m < macro_radius_m))
        throw InvalidParameter("close_zone_radius_m must lie in (0, macro_radius_m)");
    if (!(sector_angle_rad > 0.0 && sector_angle_rad <= 2.0 * std::numbers::pi))
        throw InvalidParameter("sector_angle_rad must lie in (0, 2*pi]");
}

void UserDrop::validate() const
{
    if (!(sc_radius_m >= kMinLinkDistance) || !std::isfinite(sc_radius_m))
        throw InvalidParameter("sc_radius_m must be at least 1 m");
}

bool in_sector(Point2 p, const SectorGeometry& geometry)
{
    const double r = std::hypot(p.x, p.y);
    if (r > geometry.macro_radius_m)
        return false;
    if (r == 0.0)
        return true;
    double angle = std::atan2(p.y, p.x);
    if (angle < 0.0)
        angle += 2.0 * std::numbers::pi;
    return angle <= geometry.sector_angle_rad;
}

std::vector<Point2> sample_sbs_positions(double density_per_km2, const SectorGeometry& geometry,
                                         Rng& rng)
{
    if (!(density_per_km2 >= 0.0) || !std::isfinite(density_per_km2))
        throw InvalidParameter("density must be finite and non-negative");
    geometry.validate();

    const auto count = rng.poisson(density_per_km2 * geometry.area_km2());
    std::vector<Point2> points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double r = geometry.macro_radius_m * std::sqrt(rng.uniform());
        const double phi = geometry.sector_angle_rad * rng.uniform();
        points.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return points;
}

Cell drop_users(Point2 sbs, double sc_radius_m, std::size_t n_dl, std::size_t n_ul, Rng& rng)
{
    if (!(sc_radius_m >= kMinLinkDistance) || !std::isfinite(sc_radius_m))
        throw InvalidParameter("sc_radius_m must be at least 1 m");

    const double inner2 = kMinLinkDistance * kMinLinkDistance;
    const double outer2 = sc_radius_m * sc_radius_m;
    auto draw = [&] {
        const double r = std::sqrt(inner2 + (outer2 - inner2) * rng.uniform());
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        return Point2{sbs.x + r * std::cos(phi), sbs.y + r * std::sin(phi)};
    };

    Cell cell;
    cell.sc_radius_m = sc_radius_m;
    cell.dl_users.reserve(n_dl);
    cell.ul_users.reserve(n_ul);
    for (std::size_t i = 0; i < n_dl; ++i)
        cell.dl_users.push_back(draw());
    for (std::size_t i = 0; i < n_ul; ++i)
        cell.ul_users.push_back(draw());
    return cell;
}

Topology generate_topology(double density_per_km2, const SectorGeometry& geometry,
                           const UserDrop& drop, std::uint64_t seed)
{
    Rng rng(seed);
    return generate_topology(density_per_km2, geometry, drop, rng, seed);
}

Topology generate_topology(double density_per_km2, const SectorGeometry& geometry,
                           const UserDrop& drop, Rng& rng, std::uint64_t seed)
{
    drop.validate();
    Topology topo;
    topo.geometry = geometry;
    topo.density_per_km2 = density_per_km2;
    topo.seed = seed;
    topo.sbs_positions = sample_sbs_positions(density_per_km2, geometry, rng);
    topo.cells.reserve(topo.sbs_positions.size());
    for (std::size_t i = 0; i < topo.sbs_positions.size(); ++i) {
        Cell cell = drop_users(topo.sbs_positions[i], drop.sc_radius_m, drop.n_dl, drop.n_ul, rng);
        cell.sbs_index = i;
        topo.cells.push_back(std::move(cell));
    }
    return topo;
}

std::string serialize(const Topology& topology)
{
    std::string out;
    char buf[128];
    auto put_point = [&](const char* tag, Point2 p) {
        std::snprintf(buf, sizeof buf, "%s %.17g %.17g\n", tag, p.x, p.y);
        out += buf;
    };
    std::snprintf(buf, sizeof buf, "topology seed=%llu density=%.17g cells=%zu\n",
                  static_cast<unsigned long long>(topology.seed), topology.density_per_km2,
                  topology.cells.size());
    out += buf;
    for (const auto& cell : topology.cells) {
        put_point("sbs", topology.sbs_positions.at(cell.sbs_index));
        for (auto p : cell.dl_users)
            put_point("  dl", p);
        for (auto p : cell.ul_users)
            put_point("  ul", p);
    }
    return out;
}

} // namespace udnsim
