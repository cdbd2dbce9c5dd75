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

#include <random>

#include <benchmark/benchmark.h>

#include "stabtherm/gf2.hpp"
#include "stabtherm/models.hpp"

using namespace stabtherm;

namespace {

void BM_rank_random(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::bernoulli_distribution bit(0.5);
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, bit(rng));
    }
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_random)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_haah_gsd(benchmark::State& state) {
    CssModel m = build_haah(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m.a_gens));
        benchmark::DoNotOptimize(rank(m.b_gens));
    }
}
BENCHMARK(BM_haah_gsd)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_kernel_basis(benchmark::State& state) {
    CssModel m = build_toric_4d(static_cast<int>(state.range(0)));
    BitMatrix t = m.b_gens.transposed();
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(t));
}
BENCHMARK(BM_kernel_basis)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
