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

#include "stabtherm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "stabtherm/errors.hpp"

namespace stabtherm::oracle {

namespace {

std::uint64_t to_mask(const BitVector& v) {
    std::uint64_t mask = 0;
    for (std::size_t q : v.indices()) mask |= std::uint64_t{1} << q;
    return mask;
}

double log_sum_exp(const std::vector<double>& terms) {
    double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - top);
    return top + std::log(sum);
}

}  // namespace

DenseSpectrum dense_spectrum(const CssModel& m) {
    if (m.n_qubits > kMaxDenseQubits) {
        throw ResourceRefusal("dense_spectrum: " + std::to_string(m.n_qubits) + " qubits exceeds the dense cap of " +
                              std::to_string(kMaxDenseQubits) + "; use the constraint-enumeration route instead");
    }
    const std::size_t dim = std::size_t{1} << m.n_qubits;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    // Basis state i has qubit q in |1> iff bit q of i is set. X-type terms flip bits,
    // Z-type terms contribute (-1)^{popcount(i & z)} on the diagonal.
    for (const auto& row : m.a_gens.row_list()) {
        std::uint64_t x = to_mask(row);
        for (std::size_t i = 0; i < dim; ++i) {
            h(static_cast<Eigen::Index>(i ^ x), static_cast<Eigen::Index>(i)) -= m.coupling_a;
        }
    }
    for (const auto& row : m.b_gens.row_list()) {
        std::uint64_t z = to_mask(row);
        for (std::size_t i = 0; i < dim; ++i) {
            double sign = (std::popcount(i & z) & 1) ? -1.0 : 1.0;
            h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) -= m.coupling_b * sign;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw CheckFailed("dense_spectrum: eigensolver did not converge");
    DenseSpectrum s;
    s.n_qubits = m.n_qubits;
    s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
    return s;
}

double dense_log_trace(const CssModel& m, double beta) {
    DenseSpectrum s = dense_spectrum(m);
    std::vector<double> terms;
    terms.reserve(s.eigenvalues.size());
    for (double e : s.eigenvalues) terms.push_back(-beta * e);
    return log_sum_exp(terms);
}

double ising_brute_log_z(const IsingModel& ising, double beta) {
    if (ising.n_spins > kMaxBruteSpins) {
        throw ResourceRefusal("ising_brute_log_z: " + std::to_string(ising.n_spins) +
                              " spins exceeds the brute-force cap of " + std::to_string(kMaxBruteSpins) +
                              "; use ising_chain_closed for periodic chains or a smaller lattice");
    }
    const std::uint64_t configs = std::uint64_t{1} << ising.n_spins;
    // Every configuration's Boltzmann weight is summed directly, shifted by the largest possible exponent.
    const double shift = beta * std::fabs(ising.J) * static_cast<double>(ising.bonds.size());
    double sum = 0.0;
    for (std::uint64_t s = 0; s < configs; ++s) {
        double bond_sum = 0.0;
        for (const auto& [i, j] : ising.bonds) {
            int si = ((s >> i) & 1u) ? -1 : 1;
            int sj = ((s >> j) & 1u) ? -1 : 1;
            bond_sum += si * sj;
        }
        sum += std::exp(beta * ising.J * bond_sum - shift);
    }
    return shift + std::log(sum);
}

double ising_chain_closed(std::size_t L, double J, double beta) {
    if (L < 1) throw InputError("ising_chain_closed: L must be >= 1");
    double x = beta * J;
    double n = static_cast<double>(L);
    // (2cosh x)^L + (2sinh x)^L = (2cosh x)^L (1 + tanh(x)^L)
    double log_2cosh = std::fabs(x) + std::log1p(std::exp(-2.0 * std::fabs(x)));
    double t = std::tanh(x);
    return n * log_2cosh + std::log1p(std::pow(t, n));
}

}  // namespace stabtherm::oracle
