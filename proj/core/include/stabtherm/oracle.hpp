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

#ifndef STABTHERM_ORACLE_HPP
#define STABTHERM_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "stabtherm/models.hpp"

/// Brute-force references. Nothing here goes through the constraint-kernel or
/// partition-function code; only the model containers are shared.
namespace stabtherm::oracle {

inline constexpr std::size_t kMaxDenseQubits = 12;
inline constexpr std::size_t kMaxBruteSpins = 24;

struct DenseSpectrum {
    std::size_t n_qubits = 0;
    std::vector<double> eigenvalues;
};

/// Full spectrum of H = -a Σ A_r - b Σ B_s built as a 2^n × 2^n matrix.
DenseSpectrum dense_spectrum(const CssModel& m);

/// log Tr e^{-βH} by full diagonalization.
double dense_log_trace(const CssModel& m, double beta);

/// log Σ_s exp(βJ Σ_bonds s_i s_j) over all 2^n configurations.
double ising_brute_log_z(const IsingModel& ising, double beta);

/// log[(2 cosh βJ)^L + (2 sinh βJ)^L], the periodic chain of L spins.
double ising_chain_closed(std::size_t L, double J, double beta);

}  // namespace stabtherm::oracle

#endif
