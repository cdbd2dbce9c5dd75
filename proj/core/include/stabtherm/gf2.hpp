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

#ifndef STABTHERM_GF2_HPP
#define STABTHERM_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stabtherm {

/// A dense, bit-packed vector over GF(2).
///
/// Bits are stored little-endian inside 64-bit words. Every bit at position
/// `>= size()` is kept at zero, so word-wise popcounts and comparisons are exact.
class BitVector {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length);

    /// Builds a vector by toggling each listed coordinate; an index listed twice cancels.
    static BitVector from_indices(std::size_t length, std::span<const std::size_t> indices);
    static BitVector from_indices(std::size_t length, std::initializer_list<std::size_t> indices);
    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return length_; }
    std::size_t num_words() const { return words_.size(); }
    std::span<const word_t> words() const { return words_; }
    std::span<word_t> words() { return words_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Parity of the bitwise AND: the GF(2) inner product.
    bool dot(const BitVector& other) const;
    /// Number of coordinates set in both vectors.
    std::size_t overlap(const BitVector& other) const;
    std::vector<std::size_t> indices() const;

    /// XORs `other` into this vector, touching only words at or after `first_word`.
    void xor_from(const BitVector& other, std::size_t first_word);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    bool operator==(const BitVector& other) const = default;

    std::string str() const;

   private:
    std::size_t length_ = 0;
    std::vector<word_t> words_;
};

/// A dense GF(2) matrix stored as a list of packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
    /// Convenience for literals: every entry is 0 or 1.
    static BitMatrix from_dense(const std::vector<std::vector<int>>& entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVector>& row_list() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    void append_row(BitVector row);

    BitMatrix transposed() const;
    BitVector column(std::size_t c) const;
    bool is_zero() const;

    /// M·x over GF(2).
    BitVector operator*(const BitVector& x) const;
    BitMatrix operator*(const BitMatrix& other) const;
    bool operator==(const BitMatrix& other) const = default;

    std::string str() const;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Reduced row echelon form. Row i of `reduced` (for i < pivot_cols.size()) has its
/// leading one at column pivot_cols[i] and is the only row with a one there;
/// remaining rows are zero.
struct RowEchelon {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination with leftmost-column-first pivoting.
RowEchelon row_reduce(BitMatrix m);

std::size_t rank(const BitMatrix& m);
std::size_t rank(std::span<const BitVector> vectors, std::size_t length);

/// Basis of {x : M·x = 0}, one vector per free column, in increasing free-column order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Some x with M·x = b, or nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// True iff v is a GF(2) combination of the rows of m.
bool in_row_space(const BitMatrix& m, const BitVector& v);

}  // namespace stabtherm

#endif
