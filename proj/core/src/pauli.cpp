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

#include "stabtherm/pauli.hpp"

#include <bit>
#include <sstream>

#include "stabtherm/errors.hpp"

namespace stabtherm {

namespace {

void require_same_size(const PauliOp& p, const PauliOp& q, const char* what) {
    if (p.n_qubits() != q.n_qubits()) {
        std::ostringstream msg;
        msg << what << ": qubit count mismatch (" << p.n_qubits() << " vs " << q.n_qubits() << ")";
        throw InputError(msg.str());
    }
}

}  // namespace

PauliOp::PauliOp(BitVector x_mask, BitVector z_mask) : x(std::move(x_mask)), z(std::move(z_mask)) {
    if (x.size() != z.size()) throw InputError("PauliOp: x and z masks differ in length");
}

PauliOp PauliOp::x_type(BitVector support) {
    std::size_t n = support.size();
    return PauliOp(std::move(support), BitVector(n));
}

PauliOp PauliOp::z_type(BitVector support) {
    std::size_t n = support.size();
    return PauliOp(BitVector(n), std::move(support));
}

PauliOp PauliOp::y_type(BitVector support) { return PauliOp(support, support); }

PauliOp PauliOp::single(std::size_t n_qubits, std::size_t qubit, char kind) {
    if (qubit >= n_qubits) {
        throw InputError("PauliOp::single: qubit " + std::to_string(qubit) + " out of range " +
                         std::to_string(n_qubits));
    }
    PauliOp p(n_qubits);
    switch (kind) {
        case 'X': p.x.set(qubit); break;
        case 'Z': p.z.set(qubit); break;
        case 'Y':
            p.x.set(qubit);
            p.z.set(qubit);
            break;
        case 'I': break;
        default: throw InputError(std::string("PauliOp::single: unknown Pauli '") + kind + "'");
    }
    return p;
}

PauliOp PauliOp::parse(std::size_t n_qubits, std::string_view text) {
    PauliOp p(n_qubits);
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "I") continue;
        if (token.size() < 2) throw InputError("PauliOp::parse: malformed token '" + token + "'");
        std::size_t qubit = 0;
        try {
            std::size_t used = 0;
            qubit = std::stoul(token.substr(1), &used);
            if (used != token.size() - 1) throw InputError("trailing characters");
        } catch (const std::exception&) {
            throw InputError("PauliOp::parse: malformed token '" + token + "'");
        }
        p = p * single(n_qubits, qubit, token[0]);
    }
    return p;
}

std::size_t PauliOp::weight() const {
    std::size_t n = 0;
    auto xs = x.words();
    auto zs = z.words();
    for (std::size_t k = 0; k < xs.size(); ++k) n += std::popcount(xs[k] | zs[k]);
    return n;
}

std::string PauliOp::str() const {
    std::string out;
    for (std::size_t q = 0; q < n_qubits(); ++q) {
        bool bx = x.get(q);
        bool bz = z.get(q);
        if (!bx && !bz) continue;
        if (!out.empty()) out += ' ';
        out += bx ? (bz ? 'Y' : 'X') : 'Z';
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

bool commutes(const PauliOp& p, const PauliOp& q) {
    require_same_size(p, q, "commutes");
    return ((p.x.overlap(q.z) + p.z.overlap(q.x)) & 1u) == 0;
}

PauliOp multiply(const PauliOp& p, const PauliOp& q) {
    require_same_size(p, q, "multiply");
    return PauliOp(p.x ^ q.x, p.z ^ q.z);
}

}  // namespace stabtherm
