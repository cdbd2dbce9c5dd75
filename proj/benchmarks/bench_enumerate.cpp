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

#include "stabtherm/enumerate.hpp"

using namespace stabtherm;

namespace {

std::vector<BitVector> random_basis(std::size_t dim, std::size_t length) {
    std::mt19937_64 rng(2024);
    std::bernoulli_distribution bit(0.5);
    std::vector<BitVector> basis;
    while (basis.size() < dim) {
        BitVector v(length);
        for (std::size_t i = 0; i < length; ++i) v.set(i, bit(rng));
        basis.push_back(v);
        if (rank(std::span<const BitVector>(basis), length) != basis.size()) basis.pop_back();
    }
    return basis;
}

void BM_gray_walk(benchmark::State& state) {
    auto dim = static_cast<std::size_t>(state.range(0));
    auto threads = static_cast<unsigned>(state.range(1));
    auto basis = random_basis(dim, 128);
    for (auto _ : state) {
        auto w = weight_enumerator_full(std::span<const BitVector>(basis), 128, {28, threads});
        benchmark::DoNotOptimize(w.coeffs);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << dim));
}
BENCHMARK(BM_gray_walk)->Args({20, 1})->Args({24, 1})->Args({24, 2})->Args({24, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_toric4d_kernel_walk(benchmark::State& state) {
    CssModel m = build_toric_4d(2);
    ConstraintKernel k = constraint_kernel(m, Side::B);
    for (auto _ : state) {
        auto w = weight_enumerator_full(k, {28, 1});
        benchmark::DoNotOptimize(w.coeffs);
    }
}
BENCHMARK(BM_toric4d_kernel_walk)->Unit(benchmark::kMillisecond);

void BM_mitm(benchmark::State& state) {
    auto basis = random_basis(32, 96);
    for (auto _ : state) {
        auto w = weight_enumerator_mitm(std::span<const BitVector>(basis), 96, 8, {28, 1});
        benchmark::DoNotOptimize(w.coeffs);
    }
}
BENCHMARK(BM_mitm)->Unit(benchmark::kMillisecond);

}  // namespace
