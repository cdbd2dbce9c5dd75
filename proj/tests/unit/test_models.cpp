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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "stabtherm/complex.hpp"
#include "stabtherm/errors.hpp"
#include "stabtherm/lattice.hpp"

using namespace stabtherm;

namespace {

void expect_row_weights(const BitMatrix& m, std::size_t w) {
    for (std::size_t r = 0; r < m.rows(); ++r) ASSERT_EQ(m.row(r).popcount(), w) << "row " << r;
}

std::set<std::string> row_set(const BitMatrix& m) {
    std::set<std::string> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.insert(m.row(r).str());
    return out;
}

std::size_t log2_gsd(const CssModel& m) { return m.n_qubits - rank(m.a_gens) - rank(m.b_gens); }

}  // namespace

TEST(Models, Toric2dShape) {
    CssModel m = build_toric_2d(2);
    EXPECT_EQ(m.n_qubits, 8u);
    EXPECT_EQ(m.num_a(), 4u);
    EXPECT_EQ(m.num_b(), 4u);
    expect_row_weights(m.a_gens, 4);
    expect_row_weights(m.b_gens, 4);
    EXPECT_TRUE(css_validate(build_toric_2d(3)));
    EXPECT_EQ(log2_gsd(build_toric_2d(3)), 2u);
}

TEST(Models, Toric3dShape) {
    CssModel m = build_toric_3d(2);
    EXPECT_EQ(m.n_qubits, 24u);
    EXPECT_EQ(m.num_a(), 8u);
    EXPECT_EQ(m.num_b(), 24u);
    expect_row_weights(m.a_gens, 6);
    expect_row_weights(m.b_gens, 4);
    EXPECT_TRUE(css_validate(m));
    EXPECT_EQ(log2_gsd(m), 3u);
}

TEST(Models, Toric4dShape) {
    CssModel m = build_toric_4d(2);
    EXPECT_EQ(m.n_qubits, 96u);
    EXPECT_EQ(m.num_a(), 64u);
    EXPECT_EQ(m.num_b(), 64u);
    expect_row_weights(m.a_gens, 6);
    expect_row_weights(m.b_gens, 6);
    EXPECT_TRUE(css_validate(m));
    EXPECT_EQ(m.volume(), 16.0);
}

TEST(Models, CountsForSmallSizes) {
    for (int L = 2; L <= 4; ++L) {
        std::size_t v2 = L * L, v3 = v2 * L, v4 = v3 * L;
        CssModel t2 = build_toric_2d(L);
        EXPECT_EQ(t2.n_qubits, 2 * v2);
        EXPECT_EQ(t2.num_a(), v2);
        EXPECT_EQ(t2.num_b(), v2);
        expect_row_weights(t2.a_gens, 4);
        expect_row_weights(t2.b_gens, 4);

        CssModel t3 = build_toric_3d(L);
        EXPECT_EQ(t3.n_qubits, 3 * v3);
        EXPECT_EQ(t3.num_a(), v3);
        EXPECT_EQ(t3.num_b(), 3 * v3);
        expect_row_weights(t3.a_gens, 6);
        expect_row_weights(t3.b_gens, 4);

        CssModel h = build_haah(L);
        EXPECT_EQ(h.n_qubits, 2 * v3);
        EXPECT_EQ(h.num_a(), v3);
        EXPECT_EQ(h.num_b(), v3);
        expect_row_weights(h.a_gens, 8);
        expect_row_weights(h.b_gens, 8);
        EXPECT_TRUE(css_validate(h));

        if (L <= 3) {
            CssModel t4 = build_toric_4d(L);
            EXPECT_EQ(t4.n_qubits, 6 * v4);
            EXPECT_EQ(t4.num_a(), 4 * v4);
            EXPECT_EQ(t4.num_b(), 4 * v4);
            expect_row_weights(t4.a_gens, 6);
            expect_row_weights(t4.b_gens, 6);
            EXPECT_TRUE(css_validate(t4));
        }
    }
}

TEST(Models, NoGeneratorCancelsToIdentity) {
    for (int L = 2; L <= 3; ++L) {
        for (const CssModel& m : {build_toric_2d(L), build_toric_3d(L), build_toric_4d(L), build_haah(L)}) {
            for (std::size_t r = 0; r < m.num_a(); ++r) ASSERT_TRUE(m.a_gens.row(r).any());
            for (std::size_t s = 0; s < m.num_b(); ++s) ASSERT_TRUE(m.b_gens.row(s).any());
        }
    }
}

TEST(Models, Toric4dMatchesBoundaryMatrices) {
    for (int L = 2; L <= 3; ++L) {
        CssModel m = build_toric_4d(L);
        HypercubicComplex c(4, L);
        EXPECT_EQ(m.a_gens, c.boundary_matrix(2));
        EXPECT_EQ(m.b_gens, c.boundary_matrix(3).transposed());
        // Each plaquette is its own qubit, even when periodic faces coincide at L=2.
        EXPECT_EQ(m.n_qubits, c.num_cells(2));
    }
}

TEST(Models, Toric4dConstraintKernelsHaveEqualDimension) {
    for (int L = 2; L <= 3; ++L) {
        CssModel m = build_toric_4d(L);
        EXPECT_EQ(m.num_a() - rank(m.a_gens), m.num_b() - rank(m.b_gens));
    }
    CssModel m = build_toric_4d(2);
    EXPECT_EQ(m.num_a() - rank(m.a_gens), 19u);
}

TEST(Models, HaahReflectionSwapsSides) {
    for (int L = 2; L <= 5; ++L) {
        CssModel m = build_haah(L);
        Torus torus(3, L);
        auto reflect = [&](std::size_t v) {
            Coords c = torus.coords(v);
            for (int d = 0; d < 3; ++d) c[d] = (L - c[d]) % L;
            return torus.index(c);
        };
        BitMatrix image(m.num_a(), m.n_qubits);
        for (std::size_t r = 0; r < m.num_a(); ++r) {
            for (std::size_t q : m.a_gens.row(r).indices()) {
                std::size_t v = q / 2;
                bool is_sigma = q % 2 == 0;
                image.row(r).flip(is_sigma ? haah_tau(reflect(v)) : haah_sigma(reflect(v)));
            }
        }
        EXPECT_EQ(row_set(image), row_set(m.b_gens)) << "L=" << L;
    }
}

TEST(Models, HaahRowsFollowDisplayedOffsets) {
    CssModel m = build_haah(3);
    Torus torus(3, 3);
    std::size_t v = torus.index(Coords{1, 2, 0});
    auto at = [&](int dx, int dy, int dz) {
        Coords c = torus.coords(v);
        c[0] = (c[0] + dx) % 3;
        c[1] = (c[1] + dy) % 3;
        c[2] = (c[2] + dz) % 3;
        return torus.index(c);
    };
    BitVector a = BitVector::from_indices(
        54, {haah_sigma(at(0, 0, 0)), haah_tau(at(0, 0, 0)), haah_tau(at(1, 0, 0)), haah_tau(at(0, 1, 0)),
             haah_tau(at(0, 0, 1)), haah_sigma(at(1, 1, 0)), haah_sigma(at(1, 0, 1)), haah_sigma(at(0, 1, 1))});
    BitVector b = BitVector::from_indices(
        54, {haah_tau(at(1, 0, 0)), haah_tau(at(0, 1, 0)), haah_tau(at(0, 0, 1)), haah_sigma(at(1, 1, 0)),
             haah_sigma(at(1, 0, 1)), haah_sigma(at(0, 1, 1)), haah_sigma(at(1, 1, 1)), haah_tau(at(1, 1, 1))});
    EXPECT_EQ(m.a_gens.row(v), a);
    EXPECT_EQ(m.b_gens.row(v), b);
}

TEST(Models, IsingShapes) {
    IsingModel four = build_ising(4, 2);
    EXPECT_EQ(four.n_spins, 16u);
    EXPECT_EQ(four.bonds.size(), 64u);
    EXPECT_DOUBLE_EQ(four.ground_energy(), -64.0);

    IsingModel big = build_ising(4, 3, 2.5);
    EXPECT_DOUBLE_EQ(big.ground_energy(), -4.0 * 81 * 2.5);

    IsingModel chain = build_ising(1, 4);
    EXPECT_EQ(chain.n_spins, 4u);
    EXPECT_EQ(chain.bonds.size(), 4u);
    std::vector<int> degree(4, 0);
    for (auto [i, j] : chain.bonds) {
        ASSERT_LT(i, 4u);
        ASSERT_LT(j, 4u);
        ++degree[i];
        ++degree[j];
    }
    EXPECT_EQ(degree, (std::vector<int>{2, 2, 2, 2}));
}

TEST(Models, IsingBondsDistinctForLargerLattices) {
    for (int D = 1; D <= 3; ++D) {
        IsingModel m = build_ising(D, 3);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (auto [i, j] : m.bonds) {
            ASSERT_LT(i, m.n_spins);
            ASSERT_LT(j, m.n_spins);
            ASSERT_TRUE(seen.insert({std::min(i, j), std::max(i, j)}).second);
        }
    }
}

TEST(Models, InvalidSizesRejected) {
    EXPECT_THROW(build_toric_2d(1), InputError);
    EXPECT_THROW(build_toric_4d(1), InputError);
    EXPECT_THROW(build_haah(1), InputError);
    EXPECT_THROW(build_ising(0, 3), InputError);
    EXPECT_THROW(build_ising(2, 1), InputError);
    EXPECT_THROW(build_toric_2d(3, -1.0, 1.0), InputError);
}

TEST(Models, CssValidate) {
    CssModel bad;
    bad.n_qubits = 1;
    bad.a_gens = BitMatrix::from_dense({{1}});
    bad.b_gens = BitMatrix::from_dense({{1}});
    EXPECT_FALSE(css_validate(bad));

    CssModel empty;
    empty.n_qubits = 3;
    empty.a_gens = BitMatrix(0, 3);
    empty.b_gens = BitMatrix(0, 3);
    EXPECT_TRUE(css_validate(empty));

    EXPECT_THROW(make_css_model("zero", 2, BitMatrix::from_dense({{0, 0}}), BitMatrix(0, 2)), InputError);
}

TEST(Models, DescriptorConfigRoundTrip) {
    ModelDescriptor d{ModelKind::haah, 5, 1.5, 0.5, 4};
    ModelDescriptor back = descriptor_from_config(to_config(d));
    EXPECT_EQ(back, d);
    EXPECT_EQ(build_model(back).n_qubits, 250u);

    ModelDescriptor partial = descriptor_from_config(R"({"model": "toric4d", "L": 2})");
    EXPECT_EQ(partial.kind, ModelKind::toric4d);
    EXPECT_EQ(partial.coupling_a, 1.0);

    EXPECT_THROW(descriptor_from_config("{"), InputError);
    EXPECT_THROW(descriptor_from_config(R"({"L": 3})"), InputError);
    EXPECT_THROW(descriptor_from_config(R"({"model": "xcube", "L": 3})"), InputError);
    EXPECT_THROW(descriptor_from_config(R"({"model": "haah", "L": 1})"), InputError);
    EXPECT_THROW(descriptor_from_config(R"({"model": "haah", "L": "three"})"), InputError);
    EXPECT_THROW(build_model(ModelDescriptor{ModelKind::ising, 3, 1.0, 1.0, 2}), InputError);
}
