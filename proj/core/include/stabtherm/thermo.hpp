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

#ifndef STABTHERM_THERMO_HPP
#define STABTHERM_THERMO_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stabtherm/enumerate.hpp"
#include "stabtherm/models.hpp"

namespace stabtherm {

/// One temperature point. Densities are per site (or per whatever volume the sweep used).
struct ThermoPoint {
    double beta = 0.0;
    double log_z = 0.0;
    double f_density = 0.0;
    std::optional<double> u_density;
    std::optional<double> c_density;
    std::string flags;
};

/// Numerically stable log(cosh(x)).
double log_cosh(double x);
/// log(tanh(x)) for x > 0, accurate where tanh(x) rounds to 1.
double log_tanh(double x);

/// log Z = N log 2 + R log cosh(βa) + S log cosh(βb) + log 𝒯_a(tanh βa) + log 𝒯_b(tanh βb).
///
/// Truncated enumerators are accepted only while their tail bound stays below `max_tail`;
/// otherwise a ResourceRefusal carrying the bound is thrown.
double log_partition(const CssModel& m, const WeightEnumerator& wa, const WeightEnumerator& wb, double beta,
                     double max_tail = 1e-12);

double free_energy_density(double log_z, double beta, double volume);

enum class Spacing { linear, log };

std::vector<double> make_beta_grid(double min, double max, std::size_t count, Spacing spacing = Spacing::linear);

struct SweepOptions {
    /// Finite-difference step h = relative_step · β.
    double relative_step = 1e-3;
    /// Normalization volume; 0 uses the model's L^D.
    double volume = 0.0;
    double max_tail = 1e-12;
};

/// Evaluates log Z on the grid and derives u = -∂_β log Z / V and c = β² ∂²_β log Z / V.
///
/// Each point is differentiated with its own stencil of step h. Interior points use central
/// differences; the first and last grid points use one-sided stencils pointing into the grid
/// and are flagged "one_sided".
std::vector<ThermoPoint> sweep_function(const std::function<double(double)>& log_z, const std::vector<double>& grid,
                                        double volume, double relative_step = 1e-3);
std::vector<ThermoPoint> sweep(const CssModel& m, const WeightEnumerator& wa, const WeightEnumerator& wb,
                               const std::vector<double>& grid, const SweepOptions& options = {});

/// Header "beta,logZ,f,u,c,flags"; numbers with 17 significant digits.
void write_thermo_csv(std::ostream& out, const std::vector<ThermoPoint>& points);

}  // namespace stabtherm

#endif
