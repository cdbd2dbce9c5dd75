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

#ifndef STABTHERM_LATTICE_HPP
#define STABTHERM_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace stabtherm {

inline constexpr int kMaxDimension = 8;

using Coords = std::array<int, kMaxDimension>;

/// Vertices of the periodic lattice Z_L^D, indexed row-major with the first
/// coordinate most significant.
class Torus {
   public:
    Torus(int dimension, int length);

    int dimension() const { return dimension_; }
    int length() const { return length_; }
    std::size_t num_vertices() const { return num_vertices_; }

    std::size_t index(const Coords& c) const;
    Coords coords(std::size_t vertex) const;
    /// Vertex reached by moving `step` units along `direction`, wrapping periodically.
    std::size_t shifted(std::size_t vertex, int direction, int step = 1) const;
    /// Vertex reached by moving one unit along every direction in `mask`.
    std::size_t shifted_by_mask(std::size_t vertex, unsigned mask, int step = 1) const;

   private:
    int dimension_;
    int length_;
    std::size_t num_vertices_;
    std::array<std::size_t, kMaxDimension> stride_{};
};

/// The size-k subsets of {0..D-1} in lexicographic order of their sorted elements,
/// encoded as bit masks.
class DirectionSubsets {
   public:
    DirectionSubsets(int dimension, int k);

    std::size_t size() const { return masks_.size(); }
    unsigned mask(std::size_t rank) const { return masks_[rank]; }
    std::size_t rank(unsigned mask) const;
    const std::vector<unsigned>& masks() const { return masks_; }

   private:
    std::vector<unsigned> masks_;
    std::vector<std::int32_t> rank_of_mask_;
};

/// Dense index of k-cells (base vertex, direction subset): vertex * C(D,k) + subset rank.
class CellIndexer {
   public:
    CellIndexer(const Torus& torus, int k);

    int k() const { return k_; }
    std::size_t size() const { return torus_.num_vertices() * subsets_.size(); }
    std::size_t index(std::size_t vertex, unsigned mask) const { return vertex * subsets_.size() + subsets_.rank(mask); }
    std::size_t vertex_of(std::size_t cell) const { return cell / subsets_.size(); }
    unsigned mask_of(std::size_t cell) const { return subsets_.mask(cell % subsets_.size()); }
    const DirectionSubsets& subsets() const { return subsets_; }

   private:
    Torus torus_;
    int k_;
    DirectionSubsets subsets_;
};

std::size_t binomial(int n, int k);

}  // namespace stabtherm

#endif
