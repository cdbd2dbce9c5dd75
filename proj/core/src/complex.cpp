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

#include "stabtherm/complex.hpp"

#include <string>

#include "stabtherm/errors.hpp"

namespace stabtherm {

HypercubicComplex::HypercubicComplex(int dimension, int length) : torus_(dimension, length) {
    for (int k = 0; k <= dimension; ++k) indexers_.emplace_back(torus_, k);
}

void HypercubicComplex::check_k(int k, int lo, int hi, const char* what) const {
    if (k < lo || k > hi) {
        throw InputError(std::string(what) + ": k=" + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    }
}

const CellIndexer& HypercubicComplex::cells(int k) const {
    check_k(k, 0, dimension(), "HypercubicComplex::cells");
    return indexers_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> HypercubicComplex::faces(int k, std::size_t cell) const {
    check_k(k, 1, dimension(), "HypercubicComplex::faces");
    const CellIndexer& top = cells(k);
    const CellIndexer& bottom = cells(k - 1);
    std::size_t v = top.vertex_of(cell);
    unsigned mask = top.mask_of(cell);
    std::vector<std::size_t> out;
    out.reserve(2 * static_cast<std::size_t>(k));
    for (int d = 0; d < dimension(); ++d) {
        if (!(mask & (1u << d))) continue;
        unsigned face_mask = mask & ~(1u << d);
        out.push_back(bottom.index(v, face_mask));
        out.push_back(bottom.index(torus_.shifted(v, d), face_mask));
    }
    return out;
}

BitMatrix HypercubicComplex::boundary_matrix(int k) const {
    check_k(k, 1, dimension(), "boundary_matrix");
    std::size_t n_top = num_cells(k);
    BitMatrix m(num_cells(k - 1), n_top);
    for (std::size_t cell = 0; cell < n_top; ++cell) {
        for (std::size_t f : faces(k, cell)) m.row(f).flip(cell);
    }
    return m;
}

std::size_t HypercubicComplex::homology_rank(int k) const {
    check_k(k, 0, dimension(), "homology_rank");
    std::size_t cycles = num_cells(k) - (k == 0 ? 0 : rank(boundary_matrix(k)));
    std::size_t boundaries = k == dimension() ? 0 : rank(boundary_matrix(k + 1));
    return cycles - boundaries;
}

std::vector<BitVector> HypercubicComplex::cycle_space(int k) const {
    check_k(k, 0, dimension(), "cycle_space");
    if (k == 0) {
        std::vector<BitVector> basis;
        std::size_t n = num_cells(0);
        for (std::size_t i = 0; i < n; ++i) basis.push_back(BitVector::from_indices(n, {i}));
        return basis;
    }
    return kernel_basis(boundary_matrix(k));
}

std::vector<BitVector> HypercubicComplex::boundary_space(int k) const {
    check_k(k, 0, dimension(), "boundary_space");
    if (k == dimension()) return {};
    RowEchelon e = row_reduce(boundary_matrix(k + 1).transposed());
    std::vector<BitVector> basis;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) basis.push_back(e.reduced.row(i));
    return basis;
}

}  // namespace stabtherm
