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
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "stabtherm/complex.hpp"
#include "stabtherm/errors.hpp"
#include "stabtherm/lattice.hpp"
#include "stabtherm/oracle.hpp"

using namespace stabtherm;

namespace {

Coefficients coeffs(std::initializer_list<std::pair<const std::size_t, BigInt>> list) { return Coefficients(list); }

// Contractible 3-cycle counts of the 4-torus at L=2, which also equal the 4D Ising pair counts.
const Coefficients kBoundariesL2 = {
    {0, 1},     {8, 16},     {12, 32},  {16, 212}, {20, 864}, {24, 3344}, {28, 6784}, {32, 10262},
    {36, 6784}, {40, 3344},  {44, 864}, {48, 212}, {52, 32},  {56, 16},   {64, 1}};

std::size_t count_anticommuting(const PauliOp& p, const std::vector<PauliOp>& ops) {
    std::size_t n = 0;
    for (const auto& q : ops) n += !commutes(p, q);
    return n;
}

}  // namespace

TEST(CompareSeries, ReflexiveAndMismatch) {
    Coefficients a = coeffs({{0, 1}, {3, 5}, {7, 2}});
    SeriesComparison self = compare_series("self", "a", a, "a", a, 100);
    EXPECT_TRUE(self.matched);
    EXPECT_FALSE(self.first_mismatch);

    Coefficients b = coeffs({{0, 1}, {3, 5}, {7, 4}});
    SeriesComparison below = compare_series("x", "a", a, "b", b, 7);
    EXPECT_TRUE(below.matched);
    SeriesComparison at = compare_series("x", "a", a, "b", b, 8);
    EXPECT_FALSE(at.matched);
    ASSERT_TRUE(at.first_mismatch);
    EXPECT_EQ(at.first_mismatch->weight, 7u);
    EXPECT_EQ(at.first_mismatch->lhs, 2);
    EXPECT_EQ(at.first_mismatch->rhs, 4);
    EXPECT_EQ(at.rows.size(), 8u);
}

TEST(CompareSeries, ReportAndCsv) {
    Coefficients a = coeffs({{0, 1}, {2, 3}});
    Coefficients b = coeffs({{0, 1}, {2, 4}});
    SeriesComparison c = compare_series("claim text", "left", a, "right", b, 3);
    std::ostringstream csv;
    write_series_csv(csv, c);
    EXPECT_EQ(csv.str(), "weight,lhs,rhs\n0,1,1\n1,0,0\n2,3,4\n");
    std::ostringstream report;
    write_series_report(report, c);
    std::string text = report.str();
    for (const char* key : {"claim: claim text", "cutoff: 3", "matched: false", "first_mismatch: weight=2",
                            "coefficients:", "seconds:"}) {
        EXPECT_NE(text.find(key), std::string::npos) << key;
    }
}

TEST(IsingLowT, ChainOfFour) {
    Coefficients c = ising_low_t_coeffs(build_ising(1, 4), 4);
    EXPECT_EQ(c, coeffs({{0, 1}, {2, 6}, {4, 1}}));
    EXPECT_EQ(ising_low_t_coeffs(build_ising(1, 4), 2), coeffs({{0, 1}, {2, 6}}));
}

TEST(IsingLowT, UniformPairAlwaysAtZero) {
    for (int D = 1; D <= 3; ++D) EXPECT_EQ(ising_low_t_coeffs(build_ising(D, 2), 0).at(0), 1);
}

TEST(IsingLowT, FourDTwoFrozen) {
    IsingModel m = build_ising(4, 2);
    Coefficients c = ising_low_t_coeffs(m, m.bonds.size());
    EXPECT_EQ(c, kBoundariesL2);
    // Δ=8: the 16 single-site flips are the only area-8 classes.
    EXPECT_EQ(c.at(8), 16);
}

TEST(IsingLowT, MatchesBruteForceOracle) {
    IsingModel m = build_ising(4, 2);
    Coefficients c = ising_low_t_coeffs(m, m.bonds.size());
    const double beta = 0.2;
    long double sum = 0;
    for (const auto& [delta, count] : c) sum += count.convert_to<long double>() * std::exp(-2.0L * beta * delta);
    double series = static_cast<double>(std::log(2.0L) + 64.0L * beta + std::log(sum));
    double brute = oracle::ising_brute_log_z(m, beta);
    EXPECT_LT(std::abs(series - brute) / std::abs(brute), 1e-12);
}

TEST(IsingLowT, RefusesLargeLattices) {
    EXPECT_THROW(ising_low_t_coeffs(build_ising(4, 3), 10), ResourceRefusal);
    EXPECT_THROW(check_series_duality_4dtc(3), ResourceRefusal);
}

TEST(SeriesDuality, ToricFourDAgainstIsing) {
    SeriesComparison c = check_series_duality_4dtc(2);
    EXPECT_EQ(c.cutoff, 8u);
    EXPECT_TRUE(c.matched);
    ASSERT_GT(c.rows.size(), 8u);
    EXPECT_EQ(c.rows[8].lhs, 24);
    EXPECT_EQ(c.rows[8].rhs, 16);
    EXPECT_GE(c.rows[8].lhs, c.rows[8].rhs);
}

TEST(SeriesDuality, ToricThreeDAgainstChainAndIsing) {
    CssModel m = build_toric_3d(2);
    WeightEnumerator wa = weight_enumerator_full(constraint_kernel(m, Side::A));
    EXPECT_EQ(wa.coeffs, coeffs({{0, 1}, {8, 1}}));

    WeightEnumerator wb = weight_enumerator_full(constraint_kernel(m, Side::B));
    IsingModel ising = build_ising(3, 2);
    Coefficients pairs = ising_low_t_coeffs(ising, ising.bonds.size());
    SeriesComparison c = compare_series("3DTC B-side == 3D Ising pairs below L^2", "toric3d B", wb.coeffs, "ising3d",
                                        pairs, 4);
    EXPECT_TRUE(c.matched);
    // Weight-4 planes are non-contractible; weight-6 cube surfaces are single spin flips.
    EXPECT_EQ(wb.coefficient(4), 6);
    EXPECT_EQ(pairs.count(4), 0u);
    EXPECT_EQ(wb.coefficient(6), 8);
    EXPECT_EQ(pairs.at(6), 8);
}

TEST(Homology, IdentityAtTwo) {
    HomologyDistributions d = homology_distributions(2);
    SeriesComparison c = check_homology_identity(d);
    EXPECT_TRUE(c.matched);
    EXPECT_EQ(c.cutoff, 8u);
    EXPECT_EQ(d.cycles.total(), BigInt(1) << 19);
    EXPECT_EQ(d.boundaries.total(), BigInt(1) << 15);
    EXPECT_EQ(d.cycles.coefficient(0), 1);
    EXPECT_EQ(d.boundaries.coefficient(0), 1);
    EXPECT_EQ(d.boundaries.coeffs, kBoundariesL2);
    EXPECT_EQ(d.cycles.coefficient(8), 24);
}

TEST(Homology, ConstraintKernelEqualsCycleSpace) {
    ConstraintKernel kb = constraint_kernel(build_toric_4d(2), Side::B);
    auto cycles = HypercubicComplex(4, 2).cycle_space(3);
    ASSERT_EQ(kb.dimension(), cycles.size());
    BitMatrix kernel_rows = BitMatrix::from_rows(kb.n_generators, kb.basis);
    BitMatrix cycle_rows = BitMatrix::from_rows(kb.n_generators, cycles);
    for (const auto& v : cycles) EXPECT_TRUE(in_row_space(kernel_rows, v));
    for (const auto& v : kb.basis) EXPECT_TRUE(in_row_space(cycle_rows, v));
}

TEST(Homology, RefusesAboveCap) {
    EXPECT_THROW(homology_distributions(3), ResourceRefusal);
}

TEST(CoefficientBound, HoldsAtTwo) {
    CoefficientBoundReport r = check_coefficient_bound(2);
    EXPECT_TRUE(r.pointwise);
    EXPECT_TRUE(r.total_ratio);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.total_cycles, 16 * r.total_boundaries);
}

TEST(CoefficientBound, DetectsViolation) {
    HomologyDistributions d = homology_distributions(2);
    std::swap(d.cycles, d.boundaries);
    EXPECT_FALSE(check_coefficient_bound(d).pointwise);
}

TEST(BondAlgebra, IdentityAndSymmetry) {
    BondMap m = build_2dtc_bath_mapping(3, Bath::Vx);
    BondMap same{m.source_ops, m.source_ops, m.labels};
    EXPECT_TRUE(bond_algebra_isomorphic(same));
    BondMap reversed{m.target_ops, m.source_ops, m.labels};
    EXPECT_EQ(bond_algebra_isomorphic(reversed), bond_algebra_isomorphic(m));
    BondMap bad{m.source_ops, {m.target_ops.begin(), m.target_ops.end() - 1}, {}};
    EXPECT_THROW(bond_algebra_isomorphic(bad), InputError);
}

TEST(BondAlgebra, BathMappingsPreserveAlgebra) {
    for (int L = 2; L <= 4; ++L) {
        for (Bath bath : {Bath::Vx, Bath::Vy}) {
            BondMap m = build_2dtc_bath_mapping(L, bath);
            EXPECT_TRUE(bond_algebra_isomorphic(m)) << "L=" << L;
            BathLayout g{L};
            for (const auto& p : m.source_ops) ASSERT_EQ(p.n_qubits(), g.n_source());
            for (const auto& p : m.target_ops) ASSERT_EQ(p.n_qubits(), g.n_target(bath));
        }
    }
}

TEST(BondAlgebra, VxTermCounts) {
    const int L = 2;
    BondMap m = build_2dtc_bath_mapping(L, Bath::Vx);
    std::vector<PauliOp> stars, plaquettes, fields;
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        char kind = m.labels[i][0];
        (kind == 'A' ? stars : kind == 'B' ? plaquettes : fields).push_back(m.source_ops[i]);
    }
    EXPECT_EQ(stars.size(), static_cast<std::size_t>((L - 1) * (L - 1)));
    EXPECT_EQ(plaquettes.size(), static_cast<std::size_t>(L * L));
    EXPECT_EQ(fields.size(), static_cast<std::size_t>(L * (L + 1)));
}

TEST(BondAlgebra, VxSourceRelations) {
    BondMap m = build_2dtc_bath_mapping(3, Bath::Vx);
    std::vector<PauliOp> stars, plaquettes, fields;
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        char kind = m.labels[i][0];
        (kind == 'A' ? stars : kind == 'B' ? plaquettes : fields).push_back(m.source_ops[i]);
    }
    for (const auto& s : stars) EXPECT_EQ(count_anticommuting(s, fields), 0u);
    for (const auto& p : plaquettes) EXPECT_EQ(count_anticommuting(p, fields), 2u);
}

TEST(BondAlgebra, MutatedMappingFails) {
    for (Bath bath : {Bath::Vx, Bath::Vy}) {
        BondMap m = build_2dtc_bath_mapping(3, bath);
        // Send the first plaquette to the image of the second.
        std::size_t first = 0;
        while (m.labels[first][0] != 'B') ++first;
        m.target_ops[first] = m.target_ops[first + 1];
        EXPECT_FALSE(bond_algebra_isomorphic(m));
    }
}

TEST(BondAlgebra, VyFieldPartnerMustTrackTheStar) {
    // Pairing the field on x-link (i, j) with ρ(i, j) instead of ρ(i+1, j) breaks the algebra.
    for (int L = 2; L <= 4; ++L) {
        BondMap m = build_2dtc_bath_mapping(L, Bath::Vy);
        BathLayout g{L};
        std::size_t nt = g.n_target(Bath::Vy);
        std::size_t f = 0;
        for (std::size_t idx = 0; idx < m.labels.size(); ++idx) {
            if (m.labels[idx][0] != 'V') continue;
            int i = static_cast<int>(f / (L + 1));
            int j = static_cast<int>(f % (L + 1));
            ++f;
            m.target_ops[idx] = PauliOp::x_type(BitVector::from_indices(nt, {g.tau(i, j), g.rho(i, j)}));
        }
        EXPECT_FALSE(bond_algebra_isomorphic(m)) << "L=" << L;
    }
}

TEST(Gsd, KnownValues) {
    for (int L = 2; L <= 5; ++L) EXPECT_EQ(gsd(build_toric_2d(L)), 4) << L;
    EXPECT_EQ(gsd(build_toric_3d(2)), 8);
    EXPECT_EQ(gsd(build_toric_4d(2)), 64);
    for (int L : {3, 5, 7, 9}) EXPECT_EQ(gsd(build_haah(L)), 4) << L;
    // Even sizes, frozen from independent rank computations.
    EXPECT_EQ(gsd_report(build_haah(2)).log2_gsd, 6u);
    EXPECT_EQ(gsd_report(build_haah(4)).log2_gsd, 14u);
    EXPECT_EQ(gsd_report(build_haah(6)).log2_gsd, 6u);
    EXPECT_EQ(gsd_report(build_haah(3)).rank_a, 26u);
}

TEST(Gsd, InvariantUnderRowOperations) {
    for (CssModel m : {build_toric_4d(2), build_haah(4)}) {
        BigInt before = gsd(m);
        m.a_gens.row(0) ^= m.a_gens.row(1);
        m.b_gens.row(3) ^= m.b_gens.row(0);
        EXPECT_EQ(gsd(m), before);
    }
}

TEST(Logicals, ToricFourD) {
    LogicalReport r = logical_operators_4dtc(2);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.n_p, 24u);
    EXPECT_EQ(r.n_q, 24u);
    EXPECT_EQ(r.independent_p, 6u);
    EXPECT_EQ(r.independent_q, 6u);
    EXPECT_TRUE(logical_operators_4dtc(3).ok());
}

TEST(Logicals, ToricFourDPattern) {
    CssModel m = build_toric_4d(2);
    LogicalFamily f = logical_family_4dtc(2);
    for (const auto& p : f.p_ops) {
        for (std::size_t r = 0; r < m.num_a(); ++r) ASSERT_TRUE(commutes(p, m.a_op(r)));
        for (std::size_t s = 0; s < m.num_b(); ++s) ASSERT_TRUE(commutes(p, m.b_op(s)));
    }
    auto find = [](const std::vector<std::string>& labels, const std::string& name) {
        auto it = std::find(labels.begin(), labels.end(), name);
        EXPECT_NE(it, labels.end()) << name;
        return static_cast<std::size_t>(it - labels.begin());
    };
    const PauliOp& p = f.p_ops[find(f.p_labels, "P^{xy}_{1,1}")];
    EXPECT_FALSE(commutes(p, f.q_ops[find(f.q_labels, "Q^{xy}_{1,1}")]));
    EXPECT_TRUE(commutes(p, f.q_ops[find(f.q_labels, "Q^{xz}_{1,1}")]));
}

TEST(Logicals, Haah) {
    for (int L : {3, 5}) {
        LogicalReport r = logical_operators_haah(L);
        EXPECT_TRUE(r.ok()) << "L=" << L;
        EXPECT_EQ(r.n_p, static_cast<std::size_t>(3 * L));
        EXPECT_GE(r.independent_p, 1u);
        EXPECT_LE(r.independent_p, 2u);
    }
}

TEST(Logicals, HaahZPlanesOnTauDoNotCommute) {
    CssModel m = build_haah(3);
    Torus torus(3, 3);
    BitVector plane(m.n_qubits);
    for (std::size_t v = 0; v < torus.num_vertices(); ++v) {
        if (torus.coords(v)[0] == 0) plane.set(haah_tau(v));
    }
    PauliOp tz = PauliOp::z_type(plane);
    bool all = true;
    for (std::size_t r = 0; r < m.num_a(); ++r) all = all && commutes(tz, m.a_op(r));
    EXPECT_FALSE(all);
}

TEST(Logicals, ReportLayout) {
    std::ostringstream out;
    write_logical_report(out, logical_operators_haah(3));
    EXPECT_NE(out.str().find("pattern_holds: true"), std::string::npos);
    EXPECT_NE(out.str().find("failures: 0"), std::string::npos);
}

TEST(HaahChains, ExactAtFiniteSize) {
    HaahChainReport r = check_haah_chain_duality(3, {0.1, 0.5, 1.0, 2.0}, 1.0, 0.7);
    EXPECT_EQ(r.kernel_dim_a, 1u);
    EXPECT_EQ(r.kernel_dim_b, 1u);
    EXPECT_LT(r.max_relative_deviation, 1e-12);
    EXPECT_EQ(r.log_z_code.size(), 4u);
}
