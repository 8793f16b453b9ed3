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

#include "udnsim/engine.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace udnsim {

/// File output failed; the message names the path.
class OutputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "density_per_km2,scheme,trials,mean_sum_rate_bps,std_dev_bps,ci95_low_bps,ci95_high_bps";

/// CSV text: header plus one row per (density, scheme), densities ascending
/// and schemes in declaration order, floats with 6 significant digits.
std::string format_csv(const SweepResult& result);
void write_csv(const SweepResult& result, const std::filesystem::path& path);

/// Display label, e.g. "NOMA-FD".
std::string scheme_label(Scheme scheme);

/// Mean sum rate against density, one polyline per scheme (omitted when there
/// is a single density), a marker and a 95% CI whisker per row, and a legend.
std::string render_svg(const SweepResult& result);
void render_plot(const SweepResult& result, const std::filesystem::path& path);

} // namespace udnsim
