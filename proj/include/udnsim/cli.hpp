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

#include <iosfwd>
#include <string>
#include <vector>

namespace udnsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Command-line driver. \p args excludes the program name.
///
///   run       --config PATH --densities LIST --trials N --seed N --schemes LIST
///             --out CSV --plot SVG --workers N --quiet
///   validate  --config PATH        print the normalised configuration
///   defaults                       print the default configuration
///
/// Flags override the config file, which overrides the defaults. Without
/// --seed, UDNSIM_SEED (if set) supplies the seed. Returns 0 on success,
/// 1 on usage errors and 2 on runtime errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace udnsim
