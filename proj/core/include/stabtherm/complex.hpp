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

#ifndef STABTHERM_COMPLEX_HPP
#define STABTHERM_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include "stabtherm/gf2.hpp"
#include "stabtherm/lattice.hpp"

namespace stabtherm {

/// The cubical cell complex of the D-torus Z_L^D with Z_2 coefficients.
///
/// A k-cell is identified by its base vertex and a k-element set of directions;
/// it spans [v, v + sum of e_d for d in the set]. Cells are indexed by
/// `CellIndexer` (base vertex major, direction subset minor, both lexicographic).
class HypercubicComplex {
   public:
    HypercubicComplex(int dimension, int length);

    int dimension() const { return torus_.dimension(); }
    int length() const { return torus_.length(); }
    const Torus& torus() const { return torus_; }
    const CellIndexer& cells(int k) const;
    std::size_t num_cells(int k) const { return cells(k).size(); }

    /// Matrix with one row per (k-1)-cell and one column per k-cell, 1 ≤ k ≤ D.
    BitMatrix boundary_matrix(int k) const;
    /// The 2k faces of a k-cell, as (k-1)-cell indices, repeated faces kept.
    std::vector<std::size_t> faces(int k, std::size_t cell) const;

    /// dim ker ∂_k - rank ∂_{k+1}, with ∂_0 and ∂_{D+1} the zero maps.
    std::size_t homology_rank(int k) const;
    /// Basis of ker ∂_k (the k-cycles).
    std::vector<BitVector> cycle_space(int k) const;
    /// Basis of im ∂_{k+1} (the k-boundaries).
    std::vector<BitVector> boundary_space(int k) const;

   private:
    void check_k(int k, int lo, int hi, const char* what) const;

    Torus torus_;
    std::vector<CellIndexer> indexers_;
};

}  // namespace stabtherm

#endif
