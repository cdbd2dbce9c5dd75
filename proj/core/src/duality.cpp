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

#include "stabtherm/duality.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cmath>
#include <sstream>

#include "stabtherm/complex.hpp"
#include "stabtherm/lattice.hpp"
#include "stabtherm/oracle.hpp"
#include "stabtherm/thermo.hpp"

namespace stabtherm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Coefficients to_coefficients(const WeightEnumerator& w) { return Coefficients(w.coeffs.begin(), w.coeffs.end()); }

BigInt lookup(const Coefficients& c, std::size_t n) {
    auto it = c.find(n);
    return it == c.end() ? BigInt(0) : it->second;
}

std::size_t cube(int L) { return static_cast<std::size_t>(L) * L * L; }

}  // namespace

SeriesComparison compare_series(std::string claim, std::string lhs_name, const Coefficients& lhs,
                                std::string rhs_name, const Coefficients& rhs, std::size_t cutoff) {
    SeriesComparison c;
    c.claim = std::move(claim);
    c.lhs_name = std::move(lhs_name);
    c.rhs_name = std::move(rhs_name);
    c.cutoff = cutoff;
    std::size_t top = 0;
    if (!lhs.empty()) top = std::max(top, lhs.rbegin()->first);
    if (!rhs.empty()) top = std::max(top, rhs.rbegin()->first);
    for (std::size_t n = 0; n <= top; ++n) {
        SeriesRow row{n, lookup(lhs, n), lookup(rhs, n)};
        if (n < cutoff && row.lhs != row.rhs && c.matched) {
            c.matched = false;
            c.first_mismatch = SeriesMismatch{n, row.lhs, row.rhs};
        }
        c.rows.push_back(std::move(row));
    }
    return c;
}

void write_series_csv(std::ostream& out, const SeriesComparison& c) {
    out << "weight,lhs,rhs\n";
    for (const auto& r : c.rows) out << r.weight << ',' << r.lhs << ',' << r.rhs << '\n';
}

void write_series_report(std::ostream& out, const SeriesComparison& c) {
    out << "claim: " << c.claim << '\n';
    out << "lhs: " << c.lhs_name << '\n';
    out << "rhs: " << c.rhs_name << '\n';
    out << "cutoff: " << c.cutoff << '\n';
    out << "matched: " << (c.matched ? "true" : "false") << '\n';
    out << "first_mismatch: ";
    if (c.first_mismatch) {
        out << "weight=" << c.first_mismatch->weight << " lhs=" << c.first_mismatch->lhs
            << " rhs=" << c.first_mismatch->rhs << '\n';
    } else {
        out << "none\n";
    }
    out << "coefficients:\n";
    for (const auto& r : c.rows) {
        if (r.lhs == 0 && r.rhs == 0) continue;
        out << "  n=" << r.weight << " lhs=" << r.lhs << " rhs=" << r.rhs << (r.weight < c.cutoff ? "" : " (above cutoff)")
            << '\n';
    }
    out << "seconds: " << c.seconds << '\n';
}

Coefficients ising_low_t_coeffs(const IsingModel& ising, std::size_t n_max) {
    if (ising.n_spins > oracle::kMaxBruteSpins) {
        throw ResourceRefusal("ising_low_t_coeffs: " + std::to_string(ising.n_spins) +
                              " spins exceeds the brute-force cap of " + std::to_string(oracle::kMaxBruteSpins) +
                              "; compare a smaller lattice");
    }
    if (ising.n_spins == 0) return {{0, BigInt(1)}};
    // Fixing the last spin outside C picks exactly one member of each complement pair.
    const std::uint64_t reps = std::uint64_t{1} << (ising.n_spins - 1);
    std::vector<std::uint64_t> hist(ising.bonds.size() + 1, 0);
    for (std::uint64_t s = 0; s < reps; ++s) {
        std::size_t broken = 0;
        for (const auto& [i, j] : ising.bonds) broken += ((s >> i) ^ (s >> j)) & 1u;
        ++hist[broken];
    }
    Coefficients out;
    for (std::size_t n = 0; n < hist.size() && n <= n_max; ++n) {
        if (hist[n] != 0) out.emplace(n, BigInt(hist[n]));
    }
    return out;
}

SeriesComparison check_series_duality_4dtc(int L, const EnumerationOptions& options) {
    auto start = Clock::now();
    CssModel code = build_toric_4d(L);
    IsingModel ising = build_ising(4, L);
    if (ising.n_spins > oracle::kMaxBruteSpins) {
        throw ResourceRefusal("check_series_duality_4dtc: L=" + std::to_string(L) + " needs a 2^" +
                              std::to_string(ising.n_spins) + " Ising enumeration (cap 2^" +
                              std::to_string(oracle::kMaxBruteSpins) + "); only L=2 is supported, use the homology check or a truncated enumerator at larger L");
    }
    ConstraintKernel kernel = constraint_kernel(code, Side::A);
    WeightEnumerator code_side = weight_enumerator_full(kernel, options);
    Coefficients ising_side = ising_low_t_coeffs(ising, ising.bonds.size());
    SeriesComparison c = compare_series("4DTC A-side constraints == 4D Ising broken-bond pairs below L^3",
                                        "toric4d A-side c_n", to_coefficients(code_side), "4D Ising pair counts",
                                        ising_side, cube(L));
    c.seconds = seconds_since(start);
    return c;
}

HomologyDistributions homology_distributions(int L, const EnumerationOptions& options) {
    HypercubicComplex cx(4, L);
    std::size_t n_cubes = cx.num_cells(3);
    auto cycles = cx.cycle_space(3);
    auto boundaries = cx.boundary_space(3);
    if (cycles.size() > options.cap) {
        throw ResourceRefusal("homology_distributions: dim ker d3 = " + std::to_string(cycles.size()) +
                              " exceeds the enumeration cap " + std::to_string(options.cap) + " at L=" +
                              std::to_string(L) + "; only L=2 is enumerable, use a truncated enumerator at larger L");
    }
    HomologyDistributions d;
    d.L = L;
    d.cycles = weight_enumerator_full(cycles, n_cubes, options);
    d.boundaries = weight_enumerator_full(boundaries, n_cubes, options);
    return d;
}

SeriesComparison check_homology_identity(const HomologyDistributions& d) {
    return compare_series("3-cycles and contractible 3-cycles agree below L^3 on the 4-torus", "b_n (cycles)",
                          to_coefficients(d.cycles), "b*_n (boundaries)", to_coefficients(d.boundaries), cube(d.L));
}

SeriesComparison check_homology_identity(int L, const EnumerationOptions& options) {
    auto start = Clock::now();
    SeriesComparison c = check_homology_identity(homology_distributions(L, options));
    c.seconds = seconds_since(start);
    return c;
}

CoefficientBoundReport check_coefficient_bound(const HomologyDistributions& d) {
    CoefficientBoundReport r;
    r.pointwise = true;
    std::size_t top = std::max(d.cycles.max_weight(), d.boundaries.max_weight());
    for (std::size_t n = 0; n <= top; ++n) {
        if (d.cycles.coefficient(n) < d.boundaries.coefficient(n)) r.pointwise = false;
    }
    r.total_cycles = d.cycles.total();
    r.total_boundaries = d.boundaries.total();
    r.total_ratio = r.total_cycles <= 16 * r.total_boundaries;
    return r;
}

CoefficientBoundReport check_coefficient_bound(int L, const EnumerationOptions& options) {
    return check_coefficient_bound(homology_distributions(L, options));
}

bool bond_algebra_isomorphic(const BondMap& map) {
    if (map.source_ops.size() != map.target_ops.size()) {
        throw InputError("bond_algebra_isomorphic: source and target lists differ in length");
    }
    if (!map.labels.empty() && map.labels.size() != map.source_ops.size()) {
        throw InputError("bond_algebra_isomorphic: label list has the wrong length");
    }
    auto consistent = [](const std::vector<PauliOp>& ops) {
        return std::all_of(ops.begin(), ops.end(), [&](const PauliOp& p) { return p.n_qubits() == ops[0].n_qubits(); });
    };
    if (!consistent(map.source_ops) || !consistent(map.target_ops)) {
        throw InputError("bond_algebra_isomorphic: operators on one side act on different qubit counts");
    }
    std::size_t n = map.source_ops.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (commutes(map.source_ops[i], map.source_ops[j]) != commutes(map.target_ops[i], map.target_ops[j])) {
                return false;
            }
        }
    }
    return true;
}

std::size_t BathLayout::x_link(int i, int j) const {
    if (i < 0 || i >= L || j < 0 || j > L) throw InputError("BathLayout::x_link out of range");
    return static_cast<std::size_t>(i) * (L + 1) + j;
}

std::size_t BathLayout::y_link(int i, int j) const {
    if (i < 0 || i > L || j < 0 || j >= L) throw InputError("BathLayout::y_link out of range");
    return static_cast<std::size_t>(L) * (L + 1) + static_cast<std::size_t>(i) * L + j;
}

std::size_t BathLayout::tau(int i, int j) const {
    if (i < 0 || i >= L || j < 0 || j > L) throw InputError("BathLayout::tau out of range");
    return static_cast<std::size_t>(i) * (L + 1) + j;
}

std::size_t BathLayout::aux(int k) const {
    if (k < 1 || k > (L - 1) * (L - 1)) throw InputError("BathLayout::aux out of range");
    return static_cast<std::size_t>(L) * (L + 1) + (k - 1);
}

std::size_t BathLayout::rho(int i, int j) const {
    if (i < 0 || i > L || j < 0 || j > L) throw InputError("BathLayout::rho out of range");
    return static_cast<std::size_t>(L) * (L + 1) + static_cast<std::size_t>(i) * (L + 1) + j;
}

std::size_t BathLayout::n_target(Bath bath) const {
    std::size_t taus = static_cast<std::size_t>(L) * (L + 1);
    if (bath == Bath::Vx) return taus + static_cast<std::size_t>(L - 1) * (L - 1);
    return taus + static_cast<std::size_t>(L + 1) * (L + 1);
}

BondMap build_2dtc_bath_mapping(int L, Bath bath) {
    if (L < 2) throw InputError("build_2dtc_bath_mapping: L must be >= 2");
    BathLayout g{L};
    const std::size_t ns = g.n_source();
    const std::size_t nt = g.n_target(bath);
    BondMap map;
    auto add = [&](PauliOp src, PauliOp dst, std::string label) {
        map.source_ops.push_back(std::move(src));
        map.target_ops.push_back(std::move(dst));
        map.labels.push_back(std::move(label));
    };
    auto name = [](char kind, int i, int j) {
        return std::string(1, kind) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };

    // Interior stars only; boundary stars are dropped from the open-boundary Hamiltonian.
    int k = 0;
    for (int i = 1; i <= L - 1; ++i) {
        for (int j = 1; j <= L - 1; ++j) {
            ++k;
            PauliOp star = PauliOp::x_type(
                BitVector::from_indices(ns, {g.x_link(i - 1, j), g.x_link(i, j), g.y_link(i, j - 1), g.y_link(i, j)}));
            PauliOp image = bath == Bath::Vx ? PauliOp::z_type(BitVector::from_indices(nt, {g.aux(k)}))
                                             : PauliOp::z_type(BitVector::from_indices(nt, {g.rho(i, j), g.rho(i + 1, j)}));
            add(std::move(star), std::move(image), name('A', i, j));
        }
    }
    for (int i = 0; i <= L - 1; ++i) {
        for (int j = 0; j <= L - 1; ++j) {
            PauliOp plaquette = PauliOp::z_type(
                BitVector::from_indices(ns, {g.x_link(i, j), g.x_link(i, j + 1), g.y_link(i, j), g.y_link(i + 1, j)}));
            PauliOp image = PauliOp::z_type(BitVector::from_indices(nt, {g.tau(i, j), g.tau(i, j + 1)}));
            add(std::move(plaquette), std::move(image), name('B', i, j));
        }
    }
    for (int i = 0; i <= L - 1; ++i) {
        for (int j = 0; j <= L; ++j) {
            BitVector link = BitVector::from_indices(ns, {g.x_link(i, j)});
            if (bath == Bath::Vx) {
                add(PauliOp::x_type(link), PauliOp::x_type(BitVector::from_indices(nt, {g.tau(i, j)})), name('V', i, j));
            } else {
                // The star A_{i+1,j} owns this link as its left arm, so the ρ partner sits at i+1.
                add(PauliOp::y_type(link), PauliOp::x_type(BitVector::from_indices(nt, {g.tau(i, j), g.rho(i + 1, j)})),
                    name('V', i, j));
            }
        }
    }
    return map;
}

GsdReport gsd_report(const CssModel& m) {
    GsdReport r;
    r.n_qubits = m.n_qubits;
    r.rank_a = rank(m.a_gens);
    r.rank_b = rank(m.b_gens);
    if (r.rank_a + r.rank_b > m.n_qubits) throw InputError("gsd: generator ranks exceed qubit count; not a CSS code");
    r.log2_gsd = m.n_qubits - r.rank_a - r.rank_b;
    r.gsd = BigInt(1) << r.log2_gsd;
    return r;
}

BigInt gsd(const CssModel& m) { return gsd_report(m).gsd; }

namespace {

const char* kAxisNames = "xyzw";

std::string axis_pair(int mu, int nu) { return std::string{kAxisNames[mu], kAxisNames[nu]}; }

// Z-type 𝒫 and X-type 𝒬 operators are checked against the stabilizers of the matching type
// for membership, and against the opposite type for commutation.
LogicalReport verify_family(const CssModel& m, const LogicalFamily& fam,
                            const std::function<bool(std::size_t, std::size_t)>& expect_anticommute) {
    LogicalReport r;
    r.model = m.label;
    r.n_p = fam.p_ops.size();
    r.n_q = fam.q_ops.size();

    r.commute_with_stabilizers = true;
    auto check_commute = [&](const PauliOp& op, const std::string& label) {
        for (std::size_t i = 0; i < m.num_a(); ++i) {
            if (!commutes(op, m.a_op(i))) {
                r.commute_with_stabilizers = false;
                r.failures.push_back(label + " anticommutes with A[" + std::to_string(i) + "]");
                return;
            }
        }
        for (std::size_t i = 0; i < m.num_b(); ++i) {
            if (!commutes(op, m.b_op(i))) {
                r.commute_with_stabilizers = false;
                r.failures.push_back(label + " anticommutes with B[" + std::to_string(i) + "]");
                return;
            }
        }
    };
    for (std::size_t i = 0; i < fam.p_ops.size(); ++i) check_commute(fam.p_ops[i], fam.p_labels[i]);
    for (std::size_t i = 0; i < fam.q_ops.size(); ++i) check_commute(fam.q_ops[i], fam.q_labels[i]);

    r.pattern_holds = true;
    for (std::size_t i = 0; i < fam.p_ops.size(); ++i) {
        for (std::size_t j = 0; j < fam.q_ops.size(); ++j) {
            bool anti = !commutes(fam.p_ops[i], fam.q_ops[j]);
            if (anti != expect_anticommute(i, j)) {
                r.pattern_holds = false;
                r.failures.push_back(fam.p_labels[i] + " vs " + fam.q_labels[j] +
                                     (anti ? " anticommute unexpectedly" : " commute unexpectedly"));
            }
        }
    }
    auto all_commute = [&](const std::vector<PauliOp>& ops, const std::vector<std::string>& labels) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = i + 1; j < ops.size(); ++j) {
                if (!commutes(ops[i], ops[j])) {
                    r.pattern_holds = false;
                    r.failures.push_back(labels[i] + " vs " + labels[j] + " anticommute unexpectedly");
                }
            }
        }
    };
    all_commute(fam.p_ops, fam.p_labels);
    all_commute(fam.q_ops, fam.q_labels);

    r.outside_stabilizer_group = true;
    for (std::size_t i = 0; i < fam.p_ops.size(); ++i) {
        if (in_row_space(m.b_gens, fam.p_ops[i].z)) {
            r.outside_stabilizer_group = false;
            r.failures.push_back(fam.p_labels[i] + " is a product of B generators");
        }
    }
    for (std::size_t i = 0; i < fam.q_ops.size(); ++i) {
        if (in_row_space(m.a_gens, fam.q_ops[i].x)) {
            r.outside_stabilizer_group = false;
            r.failures.push_back(fam.q_labels[i] + " is a product of A generators");
        }
    }

    auto gained_rank = [](const BitMatrix& gens, const std::vector<PauliOp>& ops, bool z_part) {
        BitMatrix stacked = gens;
        for (const auto& op : ops) stacked.append_row(z_part ? op.z : op.x);
        return rank(stacked) - rank(gens);
    };
    r.independent_p = gained_rank(m.b_gens, fam.p_ops, true);
    r.independent_q = gained_rank(m.a_gens, fam.q_ops, false);
    return r;
}

}  // namespace

LogicalFamily logical_family_4dtc(int L) {
    if (L < 2) throw InputError("logical_family_4dtc: L must be >= 2");
    Torus torus(4, L);
    CellIndexer plaquettes(torus, 2);
    const std::size_t n = plaquettes.size();
    LogicalFamily fam;
    for (unsigned mask : plaquettes.subsets().masks()) {
        int dirs[4];
        int nd = 0;
        int others[2];
        int no = 0;
        for (int d = 0; d < 4; ++d) {
            if (mask & (1u << d)) {
                dirs[nd++] = d;
            } else {
                others[no++] = d;
            }
        }
        const int mu = dirs[0], nu = dirs[1];
        for (int i = 0; i < L; ++i) {
            for (int j = 0; j < L; ++j) {
                BitVector p(n), q(n);
                for (std::size_t v = 0; v < torus.num_vertices(); ++v) {
                    Coords c = torus.coords(v);
                    if (c[others[0]] == i && c[others[1]] == j) p.set(plaquettes.index(v, mask));
                    if (c[mu] == i && c[nu] == j) q.set(plaquettes.index(v, mask));
                }
                std::string idx = "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
                fam.p_ops.push_back(PauliOp::z_type(std::move(p)));
                fam.p_labels.push_back("P^{" + axis_pair(mu, nu) + "}" + idx);
                fam.q_ops.push_back(PauliOp::x_type(std::move(q)));
                fam.q_labels.push_back("Q^{" + axis_pair(mu, nu) + "}" + idx);
            }
        }
    }
    return fam;
}

LogicalFamily logical_family_haah(int L) {
    if (L < 2) throw InputError("logical_family_haah: L must be >= 2");
    Torus torus(3, L);
    const std::size_t n = 2 * torus.num_vertices();
    LogicalFamily fam;
    for (int mu = 0; mu < 3; ++mu) {
        for (int i = 0; i < L; ++i) {
            BitVector p(n), q(n);
            for (std::size_t v = 0; v < torus.num_vertices(); ++v) {
                if (torus.coords(v)[mu] != i) continue;
                p.set(haah_sigma(v));
                q.set(haah_tau(v));
            }
            std::string idx = std::string("^") + kAxisNames[mu] + "_" + std::to_string(i + 1);
            fam.p_ops.push_back(PauliOp::z_type(std::move(p)));
            fam.p_labels.push_back("P" + idx);
            fam.q_ops.push_back(PauliOp::x_type(std::move(q)));
            fam.q_labels.push_back("Q" + idx);
        }
    }
    return fam;
}

LogicalReport logical_operators_4dtc(int L) {
    CssModel m = build_toric_4d(L);
    LogicalFamily fam = logical_family_4dtc(L);
    // Both families are generated orientation-major, L^2 operators per orientation.
    const std::size_t per_orientation = static_cast<std::size_t>(L) * L;
    return verify_family(m, fam, [&](std::size_t i, std::size_t j) {
        return i / per_orientation == j / per_orientation;
    });
}

LogicalReport logical_operators_haah(int L) {
    CssModel m = build_haah(L);
    return verify_family(m, logical_family_haah(L), [](std::size_t, std::size_t) { return false; });
}

void write_logical_report(std::ostream& out, const LogicalReport& r) {
    out << "model: " << r.model << '\n';
    out << "p_operators: " << r.n_p << '\n';
    out << "q_operators: " << r.n_q << '\n';
    out << "commute_with_stabilizers: " << (r.commute_with_stabilizers ? "true" : "false") << '\n';
    out << "pattern_holds: " << (r.pattern_holds ? "true" : "false") << '\n';
    out << "outside_stabilizer_group: " << (r.outside_stabilizer_group ? "true" : "false") << '\n';
    out << "independent_p_classes: " << r.independent_p << '\n';
    out << "independent_q_classes: " << r.independent_q << '\n';
    out << "failures: " << r.failures.size() << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
}

HaahChainReport check_haah_chain_duality(int L, const std::vector<double>& betas, double a, double b) {
    CssModel m = build_haah(L, a, b);
    ConstraintKernel ka = constraint_kernel(m, Side::A);
    ConstraintKernel kb = constraint_kernel(m, Side::B);
    HaahChainReport r;
    r.L = L;
    r.kernel_dim_a = ka.dimension();
    r.kernel_dim_b = kb.dimension();
    WeightEnumerator wa = weight_enumerator_full(ka);
    WeightEnumerator wb = weight_enumerator_full(kb);
    const std::size_t sites = cube(L);
    for (double beta : betas) {
        double code = log_partition(m, wa, wb, beta);
        double chains = oracle::ising_chain_closed(sites, a, beta) + oracle::ising_chain_closed(sites, b, beta);
        r.betas.push_back(beta);
        r.log_z_code.push_back(code);
        r.log_z_chains.push_back(chains);
        r.max_relative_deviation = std::max(r.max_relative_deviation, std::fabs(code - chains) / std::fabs(chains));
    }
    return r;
}

}  // namespace stabtherm
