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

#include "stabtherm/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace stabtherm {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        try {
            long v = std::stol(env);
            if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_ranges(std::uint64_t n, unsigned parts,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (parts == 0) parts = 1;
    if (n < parts) parts = n == 0 ? 1 : static_cast<unsigned>(n);
    if (parts == 1) {
        fn(0, 0, n);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(parts);
    for (unsigned p = 0; p < parts; ++p) {
        std::uint64_t begin = n / parts * p + std::min<std::uint64_t>(p, n % parts);
        std::uint64_t end = begin + n / parts + (p < n % parts ? 1 : 0);
        workers.emplace_back([&, p, begin, end] {
            try {
                fn(p, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace stabtherm
