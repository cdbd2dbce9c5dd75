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

#ifndef STABTHERM_DUALITY_HPP
#define STABTHERM_DUALITY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stabtherm/enumerate.hpp"
#include "stabtherm/errors.hpp"
#include "stabtherm/models.hpp"
#include "stabtherm/pauli.hpp"

namespace stabtherm {

using Coefficients = std::map<std::size_t, BigInt>;

struct SeriesMismatch {
    std::size_t weight = 0;
    BigInt lhs;
    BigInt rhs;
};

struct SeriesRow {
    std::size_t weight = 0;
    BigInt lhs;
    BigInt rhs;
};

/// Coefficient-by-coefficient comparison of two series below a cutoff.
struct SeriesComparison {
    std::string claim;
    std::string lhs_name;
    std::string rhs_name;
    std::size_t cutoff = 0;
    bool matched = true;
    std::optional<SeriesMismatch> first_mismatch;
    /// Every weight from 0 to the largest weight present on either side.
    std::vector<SeriesRow> rows;
    double seconds = 0.0;
};

/// matched iff lhs[n] == rhs[n] for every n < cutoff.
SeriesComparison compare_series(std::string claim, std::string lhs_name, const Coefficients& lhs,
                                std::string rhs_name, const Coefficients& rhs, std::size_t cutoff);

/// Header "weight,lhs,rhs".
void write_series_csv(std::ostream& out, const SeriesComparison& c);
/// Plain-text report with a fixed section order.
void write_series_report(std::ostream& out, const SeriesComparison& c);

/// Number of complement pairs {C, Λ∖C} of spin sets with Δ broken bonds, for Δ ≤ n_max.
Coefficients ising_low_t_coeffs(const IsingModel& ising, std::size_t n_max);

/// 4D toric code A-side constraint counts against 4D Ising broken-bond pair counts,
/// compared below L^3. Only L = 2 fits the brute-force budget.
SeriesComparison check_series_duality_4dtc(int L, const EnumerationOptions& options = {});

/// Weight distributions of the 3-cycles (b_n) and 3-boundaries (b*_n) of the 4-torus.
struct HomologyDistributions {
    int L = 0;
    WeightEnumerator cycles;
    WeightEnumerator boundaries;
};

HomologyDistributions homology_distributions(int L, const EnumerationOptions& options = {});

/// b_n == b*_n for n < L^3.
SeriesComparison check_homology_identity(int L, const EnumerationOptions& options = {});
SeriesComparison check_homology_identity(const HomologyDistributions& d);

struct CoefficientBoundReport {
    bool pointwise = false;     // b_n >= b*_n for every n
    bool total_ratio = false;   // Σ b_n <= 16 Σ b*_n
    BigInt total_cycles;
    BigInt total_boundaries;
    bool holds() const { return pointwise && total_ratio; }
};

/// Finite-size stand-in for the upper bound on 𝒯_b in terms of the contractible series.
CoefficientBoundReport check_coefficient_bound(int L, const EnumerationOptions& options = {});
CoefficientBoundReport check_coefficient_bound(const HomologyDistributions& d);

/// Two Pauli systems whose operators are paired by position.
struct BondMap {
    std::vector<PauliOp> source_ops;
    std::vector<PauliOp> target_ops;
    /// Optional human-readable names, one per pair.
    std::vector<std::string> labels;
};

/// True iff every pair commutes in the source exactly when it commutes in the target.
bool bond_algebra_isomorphic(const BondMap& map);

enum class Bath { Vx, Vy };

/// Qubit layout of the open-boundary 2D toric code and its Ising-chain duals.
///
/// Source qubits sit on x-links (i+1/2, j), 0 ≤ i < L, 0 ≤ j ≤ L, then on y-links
/// (i, j+1/2), 0 ≤ i ≤ L, 0 ≤ j < L. Target τ spins are (i, j), 0 ≤ i < L, 0 ≤ j ≤ L;
/// the Vx dual adds (L-1)^2 auxiliary spins, the Vy dual adds ρ spins (i, j), 0 ≤ i, j ≤ L.
struct BathLayout {
    int L = 2;

    std::size_t x_link(int i, int j) const;
    std::size_t y_link(int i, int j) const;
    std::size_t n_source() const { return 2 * static_cast<std::size_t>(L) * (L + 1); }

    std::size_t tau(int i, int j) const;
    std::size_t aux(int k) const;
    std::size_t rho(int i, int j) const;
    std::size_t n_target(Bath bath) const;
};

/// Stars A_{i,j} (1 ≤ i,j ≤ L-1), plaquettes B_{i,j} (0 ≤ i,j ≤ L-1) and the bath field
/// terms on x-links, each paired with its Ising-chain image. Labels start with "A", "B" or "V".
BondMap build_2dtc_bath_mapping(int L, Bath bath);

struct GsdReport {
    std::size_t n_qubits = 0;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    std::size_t log2_gsd = 0;
    BigInt gsd;
};

GsdReport gsd_report(const CssModel& m);
/// 2^(n - rank A - rank B).
BigInt gsd(const CssModel& m);

/// Plane-like logical operators: Z-type 𝒫 and X-type 𝒬.
struct LogicalFamily {
    std::vector<PauliOp> p_ops;
    std::vector<std::string> p_labels;
    std::vector<PauliOp> q_ops;
    std::vector<std::string> q_labels;
};

/// 𝒫^{μν}_{ij}: Z on the μν plaquettes whose other two coordinates are (i,j).
/// 𝒬^{μν}_{ij}: X on the μν plaquettes with μ-coordinate i and ν-coordinate j.
LogicalFamily logical_family_4dtc(int L);
/// 𝒫^μ_i: Z on σ over the vertex plane x_μ = i. 𝒬^μ_i: X on τ over the same plane.
LogicalFamily logical_family_haah(int L);

struct LogicalReport {
    std::string model;
    std::size_t n_p = 0;
    std::size_t n_q = 0;
    bool commute_with_stabilizers = false;
    bool pattern_holds = false;
    bool outside_stabilizer_group = false;
    /// Rank gained by adjoining all 𝒫 (resp. 𝒬) supports to the stabilizer supports.
    std::size_t independent_p = 0;
    std::size_t independent_q = 0;
    std::vector<std::string> failures;

    bool ok() const { return commute_with_stabilizers && pattern_holds && outside_stabilizer_group; }
};

/// Checks commutation with every generator, 𝒫/𝒬 anticommuting exactly for equal
/// orientation (μν) = (ρσ), and non-membership in the stabilizer group.
LogicalReport logical_operators_4dtc(int L);
/// Same, with every 𝒫 and 𝒬 expected to commute.
LogicalReport logical_operators_haah(int L);

void write_logical_report(std::ostream& out, const LogicalReport& r);

/// Haah's code against two periodic Ising chains of L^3 spins on a β grid.
struct HaahChainReport {
    int L = 0;
    std::size_t kernel_dim_a = 0;
    std::size_t kernel_dim_b = 0;
    double max_relative_deviation = 0.0;
    std::vector<double> betas;
    std::vector<double> log_z_code;
    std::vector<double> log_z_chains;
};

HaahChainReport check_haah_chain_duality(int L, const std::vector<double>& betas, double a = 1.0, double b = 1.0);

}  // namespace stabtherm

#endif
