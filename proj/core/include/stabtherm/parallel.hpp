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

#ifndef STABTHERM_PARALLEL_HPP
#define STABTHERM_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace stabtherm {

/// Environment variable holding the default worker-thread count.
inline constexpr const char* kThreadsEnvVar = "STABTHERM_THREADS";

/// `requested` if nonzero, else $STABTHERM_THREADS if set and valid, else the hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Splits [0, n) into at most `parts` contiguous ranges and runs fn(part, begin, end)
/// for each, on separate threads when parts > 1. Exceptions are rethrown on the caller.
void parallel_ranges(std::uint64_t n, unsigned parts,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace stabtherm

#endif
