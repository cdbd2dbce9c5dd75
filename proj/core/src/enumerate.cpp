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

#include "stabtherm/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "stabtherm/parallel.hpp"

namespace stabtherm {

using word_t = BitVector::word_t;

char to_char(Side side) { return side == Side::A ? 'A' : 'B'; }

ConstraintKernel constraint_kernel(const CssModel& m, Side side) {
    const BitMatrix& gens = side == Side::A ? m.a_gens : m.b_gens;
    ConstraintKernel k;
    k.side = side;
    k.n_generators = gens.rows();
    k.basis = kernel_basis(gens.transposed());
    return k;
}

BigInt WeightEnumerator::coefficient(std::size_t n) const {
    auto it = coeffs.find(n);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

BigInt WeightEnumerator::total() const {
    BigInt t = 0;
    for (const auto& [n, c] : coeffs) t += c;
    return t;
}

namespace {


// Basis vectors packed into one contiguous array, plus the indices of each vector's
// nonzero words so a Gray-code step only touches the words that change.
struct PackedBasis {
    std::size_t dim = 0;
    std::size_t words = 0;
    std::vector<word_t> data;
    std::vector<std::vector<std::uint32_t>> nonzero;

    PackedBasis(std::span<const BitVector> basis, std::size_t length) : dim(basis.size()) {
        words = (length + BitVector::kWordBits - 1) / BitVector::kWordBits;
        data.assign(dim * words, 0);
        nonzero.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (basis[j].size() != length) throw InputError("weight enumerator: basis vector length mismatch");
            auto w = basis[j].words();
            for (std::size_t k = 0; k < words; ++k) {
                data[j * words + k] = w[k];
                if (w[k] != 0) nonzero[j].push_back(static_cast<std::uint32_t>(k));
            }
        }
    }

    const word_t* vec(std::size_t j) const { return data.data() + j * words; }
};

void walk_range_single_word(const PackedBasis& pb, std::uint64_t begin, std::uint64_t end,
                            std::vector<std::uint64_t>& hist) {
    const word_t* b = pb.data.data();
    std::uint64_t gray = begin ^ (begin >> 1);
    word_t acc = 0;
    for (std::size_t j = 0; j < pb.dim; ++j) {
        if ((gray >> j) & 1u) acc ^= b[j];
    }
    ++hist[static_cast<std::size_t>(std::popcount(acc))];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        acc ^= b[std::countr_zero(i)];
        ++hist[static_cast<std::size_t>(std::popcount(acc))];
    }
}

void walk_range(const PackedBasis& pb, std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& hist) {
    if (begin >= end) return;
    if (pb.words == 1) {
        walk_range_single_word(pb, begin, end, hist);
        return;
    }
    std::vector<word_t> acc(pb.words, 0);
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; j < pb.dim; ++j) {
        if ((gray >> j) & 1u) {
            const word_t* v = pb.vec(j);
            for (std::size_t k = 0; k < pb.words; ++k) acc[k] ^= v[k];
        }
    }
    std::ptrdiff_t weight = 0;
    for (word_t w : acc) weight += std::popcount(w);
    ++hist[static_cast<std::size_t>(weight)];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(i));
        const word_t* v = pb.vec(j);
        for (std::uint32_t k : pb.nonzero[j]) {
            word_t before = acc[k];
            acc[k] = before ^ v[k];
            weight += std::popcount(acc[k]) - std::popcount(before);
        }
        ++hist[static_cast<std::size_t>(weight)];
    }
}

WeightEnumerator from_histogram(const std::vector<std::uint64_t>& hist, std::size_t dim, std::size_t length) {
    WeightEnumerator w;
    w.dimension = dim;
    w.length = length;
    for (std::size_t n = 0; n < hist.size(); ++n) {
        if (hist[n] != 0) w.coeffs.emplace(n, BigInt(hist[n]));
    }
    return w;
}

std::string refusal_message(const char* op, std::size_t dim, std::size_t limit, const char* alternative) {
    std::ostringstream msg;
    msg << op << ": subspace dimension " << dim << " exceeds the enumeration cap " << limit
        << " (2^" << dim << " elements requested); " << alternative;
    return msg.str();
}

}  // namespace

WeightEnumerator weight_enumerator_full(std::span<const BitVector> basis, std::size_t length,
                                        const EnumerationOptions& options) {
    std::size_t dim = basis.size();
    if (options.cap > kMaxCap) throw InputError("weight_enumerator_full: cap above " + std::to_string(kMaxCap));
    if (dim > options.cap) {
        throw ResourceRefusal(refusal_message("weight_enumerator_full", dim, options.cap,
                                              "use weight_enumerator_mitm with a max weight, or raise the cap"));
    }
    PackedBasis pb(basis, length);
    std::uint64_t total = std::uint64_t{1} << dim;
    unsigned threads = resolve_threads(options.threads);
    // Small walks are not worth a thread each.
    if (total < (std::uint64_t{1} << 16)) threads = 1;

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(length + 1, 0));
    parallel_ranges(total, threads, [&](unsigned part, std::uint64_t begin, std::uint64_t end) {
        walk_range(pb, begin, end, partial[part]);
    });
    std::vector<std::uint64_t> hist(length + 1, 0);
    for (const auto& p : partial) {
        for (std::size_t n = 0; n <= length; ++n) hist[n] += p[n];
    }
    return from_histogram(hist, dim, length);
}

WeightEnumerator weight_enumerator_full(const ConstraintKernel& kernel, const EnumerationOptions& options) {
    return weight_enumerator_full(kernel.basis, kernel.n_generators, options);
}

WeightEnumerator weight_enumerator_mitm(std::span<const BitVector> basis, std::size_t length,
                                        std::size_t max_weight, const EnumerationOptions& options) {
    std::size_t dim = basis.size();
    if (options.cap > kMaxCap) throw InputError("weight_enumerator_mitm: cap above " + std::to_string(kMaxCap));
    if (dim > 2 * options.cap) {
        throw ResourceRefusal(refusal_message("weight_enumerator_mitm", dim, 2 * options.cap,
                                              "reduce L; no exact alternative covers this size"));
    }

    // In reduced row echelon form, coordinate pivot_cols[i] of a span element equals its
    // i-th combination coefficient, so an element built from k basis vectors has weight >= k.
    std::vector<BitVector> reduced;
    if (dim > 0) {
        RowEchelon e = row_reduce(BitMatrix::from_rows(length, std::vector<BitVector>(basis.begin(), basis.end())));
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) reduced.push_back(e.reduced.row(i));
    }
    if (reduced.size() != dim) throw InputError("weight_enumerator_mitm: basis vectors are linearly dependent");

    std::size_t first = dim / 2;
    std::span<const BitVector> all(reduced);
    PackedBasis lo(all.subspan(0, first), length);
    PackedBasis hi(all.subspan(first), length);
    std::size_t words = lo.words;

    // Half-span tables bucketed by the number of basis vectors combined.
    auto tabulate = [&](const PackedBasis& pb) {
        std::vector<std::vector<word_t>> buckets(pb.dim + 1);
        std::uint64_t count = std::uint64_t{1} << pb.dim;
        std::vector<word_t> acc(words, 0);
        for (std::uint64_t i = 0; i < count; ++i) {
            if (i > 0) {
                const word_t* v = pb.vec(static_cast<std::size_t>(std::countr_zero(i)));
                for (std::size_t k = 0; k < words; ++k) acc[k] ^= v[k];
            }
            std::size_t used = static_cast<std::size_t>(std::popcount(i ^ (i >> 1)));
            if (used > max_weight) continue;
            buckets[used].insert(buckets[used].end(), acc.begin(), acc.end());
        }
        return buckets;
    };
    auto left = tabulate(lo);
    auto right = tabulate(hi);

    std::vector<std::uint64_t> hist(std::min(length, max_weight) + 1, 0);
    for (std::size_t k1 = 0; k1 < left.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < right.size() && k1 + k2 <= max_weight; ++k2) {
            const auto& L = left[k1];
            const auto& R = right[k2];
            for (std::size_t a = 0; a < L.size(); a += words) {
                for (std::size_t b = 0; b < R.size(); b += words) {
                    std::size_t weight = 0;
                    for (std::size_t k = 0; k < words; ++k) weight += std::popcount(L[a + k] ^ R[b + k]);
                    if (weight <= max_weight) ++hist[weight];
                }
            }
        }
    }
    WeightEnumerator w = from_histogram(hist, dim, length);
    if (max_weight < length) {
        w.complete = false;
        w.max_tracked = max_weight;
    }
    return w;
}

WeightEnumerator weight_enumerator_mitm(const ConstraintKernel& kernel, std::size_t max_weight,
                                        const EnumerationOptions& options) {
    return weight_enumerator_mitm(kernel.basis, kernel.n_generators, max_weight, options);
}

double log_bigint(const BigInt& value) {
    if (value <= 0) return -std::numeric_limits<double>::infinity();
    if (boost::multiprecision::msb(value) < 1000) return std::log(value.convert_to<double>());
    return boost::multiprecision::log(boost::multiprecision::cpp_bin_float_50(value)).convert_to<double>();
}

double evaluate_log_T(const WeightEnumerator& w, double T) {
    if (!(T >= 0.0 && T < 1.0)) {
        throw InputError("evaluate_log_T: T=" + std::to_string(T) + " outside [0, 1)");
    }
    return evaluate_log_T_from_log(w, T == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(T));
}

double evaluate_log_T_from_log(const WeightEnumerator& w, double log_t) {
    if (std::isnan(log_t) || !(log_t < 0.0)) {
        throw InputError("evaluate_log_T: log T=" + std::to_string(log_t) + " must be negative");
    }
    std::vector<double> terms;
    terms.reserve(w.coeffs.size());
    for (const auto& [n, c] : w.coeffs) {
        if (n == 0) {
            terms.push_back(log_bigint(c));
        } else if (std::isfinite(log_t)) {
            terms.push_back(log_bigint(c) + static_cast<double>(n) * log_t);
        }
    }
    if (terms.empty()) return -std::numeric_limits<double>::infinity();
    double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - top);
    return top + std::log(sum);
}

double truncation_tail_bound(const WeightEnumerator& w, double T) {
    if (T <= 0.0) return 0.0;
    return truncation_tail_bound_from_log(w, std::log(T));
}

double truncation_tail_bound_from_log(const WeightEnumerator& w, double log_t) {
    if (w.complete || !std::isfinite(log_t)) return 0.0;
    return std::exp(static_cast<double>(w.dimension) * std::log(2.0) + static_cast<double>(w.max_tracked + 1) * log_t);
}

void write_enumerator_csv(std::ostream& out, const WeightEnumerator& w) {
    out << "weight,count\n";
    for (std::size_t n = 0; n <= w.max_weight(); ++n) out << n << ',' << w.coefficient(n) << '\n';
}

}  // namespace stabtherm
