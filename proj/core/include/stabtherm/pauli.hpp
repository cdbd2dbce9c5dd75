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

#ifndef STABTHERM_PAULI_HPP
#define STABTHERM_PAULI_HPP

#include <cstddef>
#include <string>

#include "stabtherm/gf2.hpp"

namespace stabtherm {

/// A phase-free Pauli operator on n qubits, stored as an (x-mask, z-mask) pair.
/// A qubit with both bits set carries a Y.
struct PauliOp {
    BitVector x;
    BitVector z;

    PauliOp() = default;
    explicit PauliOp(std::size_t n_qubits) : x(n_qubits), z(n_qubits) {}
    PauliOp(BitVector x_mask, BitVector z_mask);

    static PauliOp identity(std::size_t n_qubits) { return PauliOp(n_qubits); }
    static PauliOp x_type(BitVector support);
    static PauliOp z_type(BitVector support);
    static PauliOp y_type(BitVector support);
    static PauliOp single(std::size_t n_qubits, std::size_t qubit, char kind);
    /// Parses "X3 Z7 Y12" (whitespace separated). An empty string is the identity.
    static PauliOp parse(std::size_t n_qubits, std::string_view text);

    std::size_t n_qubits() const { return x.size(); }
    std::size_t weight() const;
    bool is_identity() const { return x.none() && z.none(); }

    /// Renders as "X3 Z7 Y12"; the identity renders as "I".
    std::string str() const;

    bool operator==(const PauliOp& other) const = default;
};

/// True iff the symplectic form <p.x, q.z> + <p.z, q.x> vanishes mod 2.
bool commutes(const PauliOp& p, const PauliOp& q);

/// Phase-free product: both masks XORed.
PauliOp multiply(const PauliOp& p, const PauliOp& q);
inline PauliOp operator*(const PauliOp& p, const PauliOp& q) { return multiply(p, q); }

}  // namespace stabtherm

#endif
