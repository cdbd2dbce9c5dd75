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

#ifndef STABTHERM_MODELS_HPP
#define STABTHERM_MODELS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabtherm/gf2.hpp"
#include "stabtherm/pauli.hpp"

namespace stabtherm {

enum class ModelKind { toric2d, toric3d, toric4d, haah, ising };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// A CSS stabilizer Hamiltonian H = -a Σ A_r - b Σ B_s.
///
/// Row r of `a_gens` is the X-support of A_r, row s of `b_gens` the Z-support of B_s.
/// `dimension`/`length` describe the lattice when there is one; toy models leave them 0.
struct CssModel {
    std::size_t n_qubits = 0;
    BitMatrix a_gens;
    BitMatrix b_gens;
    double coupling_a = 1.0;
    double coupling_b = 1.0;
    std::string label;
    int dimension = 0;
    int length = 0;

    std::size_t num_a() const { return a_gens.rows(); }
    std::size_t num_b() const { return b_gens.rows(); }
    /// Number of lattice sites L^D used to normalize densities; 1 without a lattice.
    double volume() const;

    PauliOp a_op(std::size_t r) const { return PauliOp::x_type(a_gens.row(r)); }
    PauliOp b_op(std::size_t s) const { return PauliOp::z_type(b_gens.row(s)); }
};

/// Checks shapes and couplings and rejects generators whose support is empty.
CssModel make_css_model(std::string label, std::size_t n_qubits, BitMatrix a_gens, BitMatrix b_gens,
                        double coupling_a = 1.0, double coupling_b = 1.0);

/// True iff every A-row has even overlap with every B-row.
bool css_validate(const CssModel& m);

/// Qubits on the k-cells of Z_L^D; A per (k-1)-cell acting on the k-cells that contain it,
/// B per (k+1)-cell acting on its faces.
CssModel build_toric(int dimension, int qubit_cell_dim, int L, double a = 1.0, double b = 1.0);
CssModel build_toric_2d(int L, double a = 1.0, double b = 1.0);
CssModel build_toric_3d(int L, double a = 1.0, double b = 1.0);
CssModel build_toric_4d(int L, double a = 1.0, double b = 1.0);

/// Haah's cubic code. Qubit 2v is σ_v and 2v+1 is τ_v for vertex v of Z_L^3.
CssModel build_haah(int L, double a = 1.0, double b = 1.0);

inline std::size_t haah_sigma(std::size_t vertex) { return 2 * vertex; }
inline std::size_t haah_tau(std::size_t vertex) { return 2 * vertex + 1; }

/// Classical nearest-neighbour Ising model H = -J Σ s_i s_j.
///
/// There is one bond per lattice link; at L = 2 the two links joining a pair of
/// neighbours along a periodic direction are both kept, so the pair appears twice.
struct IsingModel {
    std::size_t n_spins = 0;
    std::vector<std::pair<std::size_t, std::size_t>> bonds;
    double J = 1.0;

    double ground_energy() const { return -J * static_cast<double>(bonds.size()); }
};

IsingModel build_ising(int dimension, int L, double J = 1.0);

/// What the CLI and config files use to name a model.
struct ModelDescriptor {
    ModelKind kind = ModelKind::toric2d;
    int L = 2;
    double coupling_a = 1.0;
    double coupling_b = 1.0;
    /// Only meaningful for `ising`.
    int dimension = 4;

    std::string label() const;
    bool operator==(const ModelDescriptor&) const = default;
};

/// Structured text (JSON) form: {"model": "...", "L": n, "a": x, "b": y, "D": d, "label": "..."}.
std::string to_config(const ModelDescriptor& d);
ModelDescriptor descriptor_from_config(std::string_view text);

/// Builds the CSS model named by a descriptor; `ising` is not a CSS model and is rejected.
CssModel build_model(const ModelDescriptor& d);

}  // namespace stabtherm

#endif
