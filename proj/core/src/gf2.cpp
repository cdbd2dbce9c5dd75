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

#include "stabtherm/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "stabtherm/errors.hpp"

namespace stabtherm {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

void require_same_length(const BitVector& a, const BitVector& b, const char* what) {
    if (a.size() != b.size()) {
        std::ostringstream msg;
        msg << what << ": length mismatch (" << a.size() << " vs " << b.size() << ")";
        throw InputError(msg.str());
    }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::from_indices(std::size_t length, std::span<const std::size_t> indices) {
    BitVector v(length);
    for (std::size_t i : indices) {
        if (i >= length) {
            throw InputError("BitVector::from_indices: index " + std::to_string(i) + " out of range " +
                             std::to_string(length));
        }
        v.flip(i);
    }
    return v;
}

BitVector BitVector::from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
    return from_indices(length, std::span<const std::size_t>(indices.begin(), indices.size()));
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw InputError("BitVector::from_string: unexpected character '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    word_t mask = word_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (word_t w : words_) n += std::popcount(w);
    return n;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const { return overlap(other) & 1u; }

std::size_t BitVector::overlap(const BitVector& other) const {
    require_same_length(*this, other, "BitVector::overlap");
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) n += std::popcount(words_[k] & other.words_[k]);
    return n;
}

std::vector<std::size_t> BitVector::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        word_t w = words_[k];
        while (w) {
            out.push_back(k * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

void BitVector::xor_from(const BitVector& other, std::size_t first_word) {
    for (std::size_t k = first_word; k < words_.size(); ++k) words_[k] ^= other.words_[k];
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_length(*this, other, "BitVector::operator^=");
    xor_from(other, 0);
    return *this;
}

std::string BitVector::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
    BitMatrix m(0, cols);
    m.rows_.reserve(rows.size());
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

BitMatrix BitMatrix::from_dense(const std::vector<std::vector<int>>& entries) {
    std::size_t cols = entries.empty() ? 0 : entries.front().size();
    BitMatrix m(entries.size(), cols);
    for (std::size_t r = 0; r < entries.size(); ++r) {
        if (entries[r].size() != cols) throw InputError("BitMatrix::from_dense: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (entries[r][c] & 1) m.set(r, c);
        }
    }
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw InputError("BitMatrix::append_row: row length " + std::to_string(row.size()) + " != cols " +
                         std::to_string(cols_));
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c : rows_[r].indices()) t.set(c, r);
    }
    return t;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].get(c)) v.set(r);
    }
    return v;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

BitVector BitMatrix::operator*(const BitVector& x) const {
    if (x.size() != cols_) {
        throw InputError("BitMatrix * BitVector: length " + std::to_string(x.size()) + " != cols " +
                         std::to_string(cols_));
    }
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(x)) out.set(r);
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (other.rows() != cols_) {
        throw InputError("BitMatrix * BitMatrix: inner dimensions " + std::to_string(cols_) + " and " +
                         std::to_string(other.rows()) + " differ");
    }
    // Row r of the product is the XOR of the rows of `other` selected by row r of this.
    BitMatrix out(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t k : rows_[r].indices()) out.rows_[r] ^= other.rows_[k];
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

namespace {

// Forward elimination (and optionally back substitution) in place. Returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t cols, bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t w = c / BitVector::kWordBits;
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(c)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        const BitVector& pivot = rows[next];
        // The pivot row is zero left of c, so only words from c's word onwards change.
        std::size_t begin = reduce_above ? 0 : next + 1;
        for (std::size_t r = begin; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) rows[r].xor_from(pivot, w);
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

RowEchelon row_reduce(BitMatrix m) {
    std::vector<BitVector> rows = m.row_list();
    std::size_t cols = m.cols();
    auto pivots = eliminate(rows, cols, true);
    return RowEchelon{BitMatrix::from_rows(cols, std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_list();
    return eliminate(rows, m.cols(), false).size();
}

std::size_t rank(std::span<const BitVector> vectors, std::size_t length) {
    std::vector<BitVector> rows(vectors.begin(), vectors.end());
    for (const auto& v : rows) {
        if (v.size() != length) throw InputError("rank: vector length mismatch");
    }
    return eliminate(rows, length, false).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    RowEchelon e = row_reduce(m);
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<BitVector> basis;
    basis.reserve(cols - e.pivot_cols.size());
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            if (e.reduced.get(i, f)) v.set(e.pivot_cols[i]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) {
        throw InputError("solve: right-hand side length " + std::to_string(b.size()) + " != rows " +
                         std::to_string(m.rows()));
    }
    std::size_t cols = m.cols();
    std::vector<BitVector> augmented;
    augmented.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector row(cols + 1);
        for (std::size_t c : m.row(r).indices()) row.set(c);
        if (b.get(r)) row.set(cols);
        augmented.push_back(std::move(row));
    }
    auto pivots = eliminate(augmented, cols + 1, true);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    BitVector x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (augmented[i].get(cols)) x.set(pivots[i]);
    }
    return x;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw InputError("in_row_space: vector length != cols");
    if (v.none()) return true;
    std::vector<BitVector> rows = m.row_list();
    std::size_t base = eliminate(rows, m.cols(), false).size();
    rows.resize(base);
    rows.push_back(v);
    return eliminate(rows, m.cols(), false).size() == base;
}

}  // namespace stabtherm
