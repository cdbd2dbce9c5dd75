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

#ifndef STABTHERM_ENUMERATE_HPP
#define STABTHERM_ENUMERATE_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "stabtherm/errors.hpp"
#include "stabtherm/gf2.hpp"
#include "stabtherm/models.hpp"

namespace stabtherm {

enum class Side { A, B };

char to_char(Side side);

/// The subsets of one generator family whose product is the identity, as a GF(2)
/// subspace of the generator-index space.
struct ConstraintKernel {
    Side side = Side::A;
    std::size_t n_generators = 0;
    std::vector<BitVector> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Left kernel of the generator-support matrix of the requested side.
ConstraintKernel constraint_kernel(const CssModel& m, Side side);

/// Weight distribution c_n of a GF(2) subspace: how many of its vectors have Hamming weight n.
///
/// Only nonzero coefficients are stored. When `complete` is false the coefficients are exact
/// for n ≤ max_tracked and nothing is known above.
struct WeightEnumerator {
    std::map<std::size_t, BigInt> coeffs;
    bool complete = true;
    std::size_t max_tracked = 0;
    std::size_t dimension = 0;
    std::size_t length = 0;

    BigInt coefficient(std::size_t n) const;
    BigInt total() const;
    std::size_t max_weight() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
};

/// Hard ceiling on EnumerationOptions::cap.
inline constexpr std::size_t kMaxCap = 40;

struct EnumerationOptions {
    /// Largest subspace dimension walked exhaustively (2^cap elements).
    std::size_t cap = 28;
    /// Worker threads; 0 defers to resolve_threads().
    unsigned threads = 0;
};

/// Exhaustive Gray-code walk over all 2^dim elements of span(basis).
WeightEnumerator weight_enumerator_full(std::span<const BitVector> basis, std::size_t length,
                                        const EnumerationOptions& options = {});
WeightEnumerator weight_enumerator_full(const ConstraintKernel& kernel, const EnumerationOptions& options = {});

/// Exact coefficients up to `max_weight`, joining weight-bucketed half-span tables.
/// Accepts dimensions up to twice the cap.
WeightEnumerator weight_enumerator_mitm(std::span<const BitVector> basis, std::size_t length,
                                        std::size_t max_weight, const EnumerationOptions& options = {});
WeightEnumerator weight_enumerator_mitm(const ConstraintKernel& kernel, std::size_t max_weight,
                                        const EnumerationOptions& options = {});

/// log Σ_n c_n T^n, evaluated by log-sum-exp. T must lie in [0, 1).
double evaluate_log_T(const WeightEnumerator& w, double T);
/// Same sum given log T < 0 directly, so that T within rounding of 1 stays usable.
double evaluate_log_T_from_log(const WeightEnumerator& w, double log_t);

/// Upper bound 2^dim · T^(max_tracked+1) on the omitted tail of a truncated enumerator; 0 if complete.
double truncation_tail_bound(const WeightEnumerator& w, double T);
double truncation_tail_bound_from_log(const WeightEnumerator& w, double log_t);

/// Natural log of a nonnegative big integer (-inf for zero).
double log_bigint(const BigInt& value);

/// CSV with header "weight,count", one row per weight from 0 to the largest nonzero weight.
void write_enumerator_csv(std::ostream& out, const WeightEnumerator& w);

}  // namespace stabtherm

#endif
