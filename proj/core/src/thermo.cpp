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

#include "stabtherm/thermo.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace stabtherm {

double log_cosh(double x) {
    double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

double log_tanh(double x) {
    double e = std::exp(-2.0 * x);
    return std::log1p(-e) - std::log1p(e);
}

double log_partition(const CssModel& m, const WeightEnumerator& wa, const WeightEnumerator& wb, double beta,
                     double max_tail) {
    if (!(beta > 0.0)) throw InputError("log_partition: beta must be positive");
    if (wa.length != m.num_a() || wb.length != m.num_b()) {
        throw InputError("log_partition: enumerators do not match the model's generator counts");
    }
    double log_ta = log_tanh(beta * m.coupling_a);
    double log_tb = log_tanh(beta * m.coupling_b);
    for (const auto* w : {&wa, &wb}) {
        double bound = truncation_tail_bound_from_log(*w, w == &wa ? log_ta : log_tb);
        if (bound > max_tail) {
            std::ostringstream msg;
            msg << "log_partition: truncated enumerator (max weight " << w->max_tracked << ") has tail bound " << bound
                << " > " << max_tail << " at beta=" << beta << "; raise max weight or use the full enumerator";
            throw ResourceRefusal(msg.str());
        }
    }
    return static_cast<double>(m.n_qubits) * std::log(2.0) +
           static_cast<double>(m.num_a()) * log_cosh(beta * m.coupling_a) +
           static_cast<double>(m.num_b()) * log_cosh(beta * m.coupling_b) + evaluate_log_T_from_log(wa, log_ta) +
           evaluate_log_T_from_log(wb, log_tb);
}

double free_energy_density(double log_z, double beta, double volume) { return -log_z / (beta * volume); }

std::vector<double> make_beta_grid(double min, double max, std::size_t count, Spacing spacing) {
    if (count == 0) throw InputError("beta grid: count must be >= 1");
    if (!(min > 0.0)) throw InputError("beta grid: minimum beta must be positive");
    if (count > 1 && !(max > min)) throw InputError("beta grid: max must exceed min");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        grid[i] = spacing == Spacing::linear ? min + t * (max - min) : min * std::pow(max / min, t);
    }
    return grid;
}

std::vector<ThermoPoint> sweep_function(const std::function<double(double)>& log_z, const std::vector<double>& grid,
                                        double volume, double relative_step) {
    if (grid.size() < 3) throw InputError("sweep: beta grid needs at least 3 points");
    if (!(grid.front() > 0.0)) throw InputError("sweep: betas must be positive");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw InputError("sweep: beta grid must be strictly increasing");
    }
    if (!(volume > 0.0)) throw InputError("sweep: volume must be positive");
    if (!(relative_step > 0.0 && relative_step < 0.5)) throw InputError("sweep: relative step must lie in (0, 0.5)");

    std::vector<ThermoPoint> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double beta = grid[i];
        double h = relative_step * beta;
        ThermoPoint p;
        p.beta = beta;
        p.log_z = log_z(beta);
        p.f_density = free_energy_density(p.log_z, beta, volume);
        double d1 = 0.0;
        double d2 = 0.0;
        if (i == 0) {
            double f1 = log_z(beta + h), f2 = log_z(beta + 2 * h), f3 = log_z(beta + 3 * h);
            d1 = (-3.0 * p.log_z + 4.0 * f1 - f2) / (2.0 * h);
            d2 = (2.0 * p.log_z - 5.0 * f1 + 4.0 * f2 - f3) / (h * h);
            p.flags = "one_sided";
        } else if (i + 1 == grid.size()) {
            double f1 = log_z(beta - h), f2 = log_z(beta - 2 * h), f3 = log_z(beta - 3 * h);
            d1 = (3.0 * p.log_z - 4.0 * f1 + f2) / (2.0 * h);
            d2 = (2.0 * p.log_z - 5.0 * f1 + 4.0 * f2 - f3) / (h * h);
            p.flags = "one_sided";
        } else {
            double fp = log_z(beta + h), fm = log_z(beta - h);
            d1 = (fp - fm) / (2.0 * h);
            d2 = (fp - 2.0 * p.log_z + fm) / (h * h);
            p.flags = "ok";
        }
        p.u_density = -d1 / volume;
        p.c_density = beta * beta * d2 / volume;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<ThermoPoint> sweep(const CssModel& m, const WeightEnumerator& wa, const WeightEnumerator& wb,
                               const std::vector<double>& grid, const SweepOptions& options) {
    double volume = options.volume > 0.0 ? options.volume : m.volume();
    auto points = sweep_function([&](double beta) { return log_partition(m, wa, wb, beta, options.max_tail); }, grid,
                                 volume, options.relative_step);
    if (!wa.complete || !wb.complete) {
        for (auto& p : points) p.flags += "|truncated";
    }
    return points;
}

namespace {

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void write_thermo_csv(std::ostream& out, const std::vector<ThermoPoint>& points) {
    out << "beta,logZ,f,u,c,flags\n";
    for (const auto& p : points) {
        out << format17(p.beta) << ',' << format17(p.log_z) << ',' << format17(p.f_density) << ','
            << (p.u_density ? format17(*p.u_density) : std::string()) << ','
            << (p.c_density ? format17(*p.c_density) : std::string()) << ',' << p.flags << '\n';
    }
}

}  // namespace stabtherm
