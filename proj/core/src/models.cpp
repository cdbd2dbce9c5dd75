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

#include "stabtherm/models.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "stabtherm/errors.hpp"
#include "stabtherm/lattice.hpp"

namespace stabtherm {

namespace {

void require_size(int L, const char* what) {
    if (L < 2) throw InputError(std::string(what) + ": L=" + std::to_string(L) + " must be >= 2");
}

}  // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::toric2d: return "toric2d";
        case ModelKind::toric3d: return "toric3d";
        case ModelKind::toric4d: return "toric4d";
        case ModelKind::haah: return "haah";
        case ModelKind::ising: return "ising";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
    for (ModelKind k : {ModelKind::toric2d, ModelKind::toric3d, ModelKind::toric4d, ModelKind::haah, ModelKind::ising}) {
        if (to_string(k) == name) return k;
    }
    throw InputError("unknown model '" + std::string(name) + "' (expected toric2d, toric3d, toric4d, haah or ising)");
}

double CssModel::volume() const {
    if (dimension <= 0 || length <= 0) return 1.0;
    return std::pow(static_cast<double>(length), dimension);
}

CssModel make_css_model(std::string label, std::size_t n_qubits, BitMatrix a_gens, BitMatrix b_gens,
                        double coupling_a, double coupling_b) {
    if (a_gens.cols() != n_qubits || b_gens.cols() != n_qubits) {
        throw InputError(label + ": generator matrices must have one column per qubit");
    }
    if (!(coupling_a > 0.0) || !(coupling_b > 0.0)) {
        throw InputError(label + ": couplings a and b must be positive");
    }
    for (std::size_t r = 0; r < a_gens.rows(); ++r) {
        if (a_gens.row(r).none()) {
            throw InputError(label + ": A generator " + std::to_string(r) + " cancels to the identity");
        }
    }
    for (std::size_t s = 0; s < b_gens.rows(); ++s) {
        if (b_gens.row(s).none()) {
            throw InputError(label + ": B generator " + std::to_string(s) + " cancels to the identity");
        }
    }
    CssModel m;
    m.n_qubits = n_qubits;
    m.a_gens = std::move(a_gens);
    m.b_gens = std::move(b_gens);
    m.coupling_a = coupling_a;
    m.coupling_b = coupling_b;
    m.label = std::move(label);
    return m;
}

bool css_validate(const CssModel& m) {
    for (const auto& a : m.a_gens.row_list()) {
        for (const auto& b : m.b_gens.row_list()) {
            if (a.dot(b)) return false;
        }
    }
    return true;
}

CssModel build_toric(int dimension, int qubit_cell_dim, int L, double a, double b) {
    require_size(L, "build_toric");
    if (qubit_cell_dim < 1 || qubit_cell_dim >= dimension) {
        throw InputError("build_toric: qubit cell dimension must lie in [1, D-1]");
    }
    Torus torus(dimension, L);
    CellIndexer lower(torus, qubit_cell_dim - 1);
    CellIndexer qubits(torus, qubit_cell_dim);
    CellIndexer upper(torus, qubit_cell_dim + 1);
    std::size_t n = qubits.size();

    // A: every qubit cell that has the lower cell on its boundary. Extending the lower
    // cell (v, S) by a direction d not in S gives the cells (v, S+d) and (v - e_d, S+d).
    BitMatrix a_gens(lower.size(), n);
    for (std::size_t c = 0; c < lower.size(); ++c) {
        std::size_t v = lower.vertex_of(c);
        unsigned mask = lower.mask_of(c);
        for (int d = 0; d < dimension; ++d) {
            if (mask & (1u << d)) continue;
            unsigned up = mask | (1u << d);
            a_gens.row(c).flip(qubits.index(v, up));
            a_gens.row(c).flip(qubits.index(torus.shifted(v, d, -1), up));
        }
    }

    // B: the faces of each upper cell.
    BitMatrix b_gens(upper.size(), n);
    for (std::size_t c = 0; c < upper.size(); ++c) {
        std::size_t v = upper.vertex_of(c);
        unsigned mask = upper.mask_of(c);
        for (int d = 0; d < dimension; ++d) {
            if (!(mask & (1u << d))) continue;
            unsigned down = mask & ~(1u << d);
            b_gens.row(c).flip(qubits.index(v, down));
            b_gens.row(c).flip(qubits.index(torus.shifted(v, d), down));
        }
    }

    std::ostringstream label;
    label << "toric" << dimension << "d(L=" << L << ")";
    CssModel m = make_css_model(label.str(), n, std::move(a_gens), std::move(b_gens), a, b);
    m.dimension = dimension;
    m.length = L;
    return m;
}

CssModel build_toric_2d(int L, double a, double b) { return build_toric(2, 1, L, a, b); }
CssModel build_toric_3d(int L, double a, double b) { return build_toric(3, 1, L, a, b); }
CssModel build_toric_4d(int L, double a, double b) { return build_toric(4, 2, L, a, b); }

CssModel build_haah(int L, double a, double b) {
    require_size(L, "build_haah");
    Torus torus(3, L);
    std::size_t nv = torus.num_vertices();
    std::size_t n = 2 * nv;
    constexpr unsigned X = 1, Y = 2, Z = 4;

    BitMatrix a_gens(nv, n);
    BitMatrix b_gens(nv, n);
    for (std::size_t v = 0; v < nv; ++v) {
        auto at = [&](unsigned offset) { return torus.shifted_by_mask(v, offset); };
        // A_v = σ_v τ_v τ_{v+x} τ_{v+y} τ_{v+z} σ_{v+x+y} σ_{v+x+z} σ_{v+y+z}
        for (std::size_t q : {haah_sigma(at(0)), haah_tau(at(0)), haah_tau(at(X)), haah_tau(at(Y)), haah_tau(at(Z)),
                              haah_sigma(at(X | Y)), haah_sigma(at(X | Z)), haah_sigma(at(Y | Z))}) {
            a_gens.row(v).flip(q);
        }
        // B_v = τ_{v+x} τ_{v+y} τ_{v+z} σ_{v+x+y} σ_{v+x+z} σ_{v+y+z} σ_{v+x+y+z} τ_{v+x+y+z}
        for (std::size_t q : {haah_tau(at(X)), haah_tau(at(Y)), haah_tau(at(Z)), haah_sigma(at(X | Y)),
                              haah_sigma(at(X | Z)), haah_sigma(at(Y | Z)), haah_sigma(at(X | Y | Z)),
                              haah_tau(at(X | Y | Z))}) {
            b_gens.row(v).flip(q);
        }
    }
    CssModel m = make_css_model("haah(L=" + std::to_string(L) + ")", n, std::move(a_gens), std::move(b_gens), a, b);
    m.dimension = 3;
    m.length = L;
    return m;
}

IsingModel build_ising(int dimension, int L, double J) {
    require_size(L, "build_ising");
    if (!(J > 0.0)) throw InputError("build_ising: J must be positive");
    Torus torus(dimension, L);
    IsingModel m;
    m.n_spins = torus.num_vertices();
    m.J = J;
    m.bonds.reserve(m.n_spins * static_cast<std::size_t>(dimension));
    for (std::size_t v = 0; v < m.n_spins; ++v) {
        for (int d = 0; d < dimension; ++d) m.bonds.emplace_back(v, torus.shifted(v, d));
    }
    return m;
}

std::string ModelDescriptor::label() const {
    std::ostringstream out;
    out << to_string(kind);
    if (kind == ModelKind::ising) out << "(D=" << dimension << ")";
    out << "(L=" << L << ")";
    return out.str();
}

std::string to_config(const ModelDescriptor& d) {
    nlohmann::ordered_json j;
    j["model"] = std::string(to_string(d.kind));
    j["L"] = d.L;
    j["a"] = d.coupling_a;
    j["b"] = d.coupling_b;
    if (d.kind == ModelKind::ising) j["D"] = d.dimension;
    j["label"] = d.label();
    return j.dump(2);
}

ModelDescriptor descriptor_from_config(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("model config: ") + e.what());
    }
    if (!j.is_object()) throw InputError("model config: expected a JSON object");
    auto field = [&](const char* key) -> const nlohmann::json* {
        auto it = j.find(key);
        return it == j.end() ? nullptr : &*it;
    };
    ModelDescriptor d;
    try {
        const auto* model = field("model");
        if (model == nullptr) throw InputError("model config: missing field 'model'");
        d.kind = parse_model_kind(model->get<std::string>());
        if (const auto* L = field("L")) d.L = L->get<int>();
        if (const auto* a = field("a")) d.coupling_a = a->get<double>();
        if (const auto* b = field("b")) d.coupling_b = b->get<double>();
        if (const auto* D = field("D")) d.dimension = D->get<int>();
    } catch (const nlohmann::json::type_error& e) {
        throw InputError(std::string("model config: wrong field type: ") + e.what());
    }
    if (d.L < 2) throw InputError("model config: field 'L' must be >= 2");
    if (!(d.coupling_a > 0.0) || !(d.coupling_b > 0.0)) throw InputError("model config: couplings must be positive");
    return d;
}

CssModel build_model(const ModelDescriptor& d) {
    switch (d.kind) {
        case ModelKind::toric2d: return build_toric_2d(d.L, d.coupling_a, d.coupling_b);
        case ModelKind::toric3d: return build_toric_3d(d.L, d.coupling_a, d.coupling_b);
        case ModelKind::toric4d: return build_toric_4d(d.L, d.coupling_a, d.coupling_b);
        case ModelKind::haah: return build_haah(d.L, d.coupling_a, d.coupling_b);
        case ModelKind::ising: break;
    }
    throw InputError("build_model: 'ising' is a classical model, not a CSS stabilizer model");
}

}  // namespace stabtherm
