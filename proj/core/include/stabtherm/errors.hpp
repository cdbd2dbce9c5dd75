// Copyright 2026 The stabtherm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABTHERM_ERRORS_HPP
#define STABTHERM_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabtherm {

/// Arbitrary-precision count type used for enumerator coefficients and degeneracies.
using BigInt = boost::multiprecision::cpp_int;

/// Invalid arguments: size mismatches, out-of-range parameters, malformed configs.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because it would exceed a configured resource cap.
/// The message names the cap, the requested size and an alternative.
struct ResourceRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verification that was expected to hold did not.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stabtherm

#endif
