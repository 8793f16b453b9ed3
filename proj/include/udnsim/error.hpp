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

#include <stdexcept>

namespace udnsim {

/// A function argument or configuration value is outside its domain.
class InvalidParameter : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Every candidate beam carries zero energy, so the link cannot be served.
class DeadLinkError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// NOMA pair handed over with the weak user stronger than the strong one.
class OrderingViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Trial state is internally inconsistent (e.g. a cross link was never sampled).
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace udnsim
