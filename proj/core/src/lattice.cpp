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

#include "stabtherm/lattice.hpp"

#include <bit>
#include <string>

#include "stabtherm/errors.hpp"

namespace stabtherm {

Torus::Torus(int dimension, int length) : dimension_(dimension), length_(length), num_vertices_(1) {
    if (dimension < 1 || dimension > kMaxDimension) {
        throw InputError("Torus: dimension " + std::to_string(dimension) + " outside [1, " +
                         std::to_string(kMaxDimension) + "]");
    }
    if (length < 2) throw InputError("Torus: linear size L=" + std::to_string(length) + " must be >= 2");
    for (int d = dimension - 1; d >= 0; --d) {
        stride_[d] = num_vertices_;
        num_vertices_ *= static_cast<std::size_t>(length);
    }
}

std::size_t Torus::index(const Coords& c) const {
    std::size_t idx = 0;
    for (int d = 0; d < dimension_; ++d) {
        int x = c[d] % length_;
        if (x < 0) x += length_;
        idx += static_cast<std::size_t>(x) * stride_[d];
    }
    return idx;
}

Coords Torus::coords(std::size_t vertex) const {
    Coords c{};
    for (int d = 0; d < dimension_; ++d) {
        c[d] = static_cast<int>((vertex / stride_[d]) % length_);
    }
    return c;
}

std::size_t Torus::shifted(std::size_t vertex, int direction, int step) const {
    Coords c = coords(vertex);
    c[direction] += step;
    return index(c);
}

std::size_t Torus::shifted_by_mask(std::size_t vertex, unsigned mask, int step) const {
    Coords c = coords(vertex);
    for (int d = 0; d < dimension_; ++d) {
        if (mask & (1u << d)) c[d] += step;
    }
    return index(c);
}

DirectionSubsets::DirectionSubsets(int dimension, int k) : rank_of_mask_(std::size_t{1} << dimension, -1) {
    if (k < 0 || k > dimension) throw InputError("DirectionSubsets: k out of range");
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            unsigned m = 0;
            for (int d : chosen) m |= 1u << d;
            rank_of_mask_[m] = static_cast<std::int32_t>(masks_.size());
            masks_.push_back(m);
            return;
        }
        for (int d = start; d < dimension; ++d) {
            chosen.push_back(d);
            self(self, d + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
}

std::size_t DirectionSubsets::rank(unsigned mask) const {
    if (mask >= rank_of_mask_.size() || rank_of_mask_[mask] < 0) {
        throw InputError("DirectionSubsets::rank: mask has wrong cardinality");
    }
    return static_cast<std::size_t>(rank_of_mask_[mask]);
}

CellIndexer::CellIndexer(const Torus& torus, int k) : torus_(torus), k_(k), subsets_(torus.dimension(), k) {}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

}  // namespace stabtherm
