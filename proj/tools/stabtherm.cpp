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

// stabtherm command-line driver.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabtherm/stabtherm.hpp"

using namespace stabtherm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRefusal = 3;
constexpr int kExitCheck = 4;

struct BetaGrid {
    double min = 0.1;
    double max = 2.0;
    std::size_t count = 50;
};

// Values given on the command line; unset fields fall back to the config file.
struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> model;
    std::optional<int> L;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<int> D;
    std::optional<std::string> beta;
    std::optional<std::string> spacing;
    std::optional<std::string> out;
    std::optional<std::size_t> cap;
    std::optional<unsigned> threads;
    std::optional<std::string> side;
    std::optional<std::size_t> max_weight;
    std::optional<std::string> normalize;
    std::optional<std::string> check;
    std::optional<double> tol;
};

struct Settings {
    ModelDescriptor model;
    bool model_given = false;
    BetaGrid grid;
    Spacing spacing = Spacing::linear;
    std::string out;
    EnumerationOptions enumeration;
    Side side = Side::A;
    std::optional<std::size_t> max_weight;
    bool per_qubit = false;
    std::string check;
    std::optional<double> tol;
};

BetaGrid parse_beta(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw InputError("--beta: expected min:max:count, got '" + text + "'");
    BetaGrid g;
    try {
        std::size_t used = 0;
        g.min = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        g.max = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        long long count = std::stoll(parts[2], &used);
        if (used != parts[2].size() || count < 1) throw std::invalid_argument(parts[2]);
        g.count = static_cast<std::size_t>(count);
    } catch (const std::logic_error&) {
        throw InputError("--beta: cannot parse '" + text + "' as min:max:count with count >= 1");
    }
    if (!(g.min > 0.0)) throw InputError("--beta: minimum beta must be positive");
    if (g.count > 1 && !(g.max > g.min)) throw InputError("--beta: max must exceed min");
    return g;
}

Spacing parse_spacing(const std::string& s) {
    if (s == "linear") return Spacing::linear;
    if (s == "log") return Spacing::log;
    throw InputError("--spacing: expected 'linear' or 'log', got '" + s + "'");
}

Side parse_side(const std::string& s) {
    if (s == "A" || s == "a") return Side::A;
    if (s == "B" || s == "b") return Side::B;
    throw InputError("--side: expected 'A' or 'B', got '" + s + "'");
}

bool parse_normalize(const std::string& s) {
    if (s == "sites") return false;
    if (s == "qubits") return true;
    throw InputError("--normalize: expected 'sites' or 'qubits', got '" + s + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::vector<std::string> kConfigKeys = {"model", "L",   "a",          "b",         "D",     "label",
                                              "beta",  "spacing", "out",    "cap",       "threads", "side",
                                              "max_weight", "normalize", "check", "tol"};

// Merges a JSON config file into the flags; flags already set win.
void merge_config(Flags& f) {
    if (!f.config) return;
    std::string text = read_file(*f.config);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("config '" + *f.config + "': " + e.what());
    }
    if (!j.is_object()) throw InputError("config '" + *f.config + "': expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end()) {
            throw InputError("config '" + *f.config + "': unknown field '" + key + "'");
        }
    }
    auto take = [&](const char* key, auto& slot) {
        auto it = j.find(key);
        if (it == j.end() || slot) return;
        using T = typename std::decay_t<decltype(slot)>::value_type;
        try {
            slot = it->template get<T>();
        } catch (const nlohmann::json::exception&) {
            throw InputError("config '" + *f.config + "': field '" + key + "' has the wrong type");
        }
    };
    take("model", f.model);
    take("L", f.L);
    take("a", f.a);
    take("b", f.b);
    take("D", f.D);
    take("beta", f.beta);
    take("spacing", f.spacing);
    take("out", f.out);
    take("cap", f.cap);
    take("threads", f.threads);
    take("side", f.side);
    take("max_weight", f.max_weight);
    take("normalize", f.normalize);
    take("check", f.check);
    take("tol", f.tol);
}

Settings resolve(Flags f) {
    merge_config(f);
    Settings s;
    if (f.model) {
        s.model.kind = parse_model_kind(*f.model);
        s.model_given = true;
    }
    if (f.L) s.model.L = *f.L;
    if (s.model.L < 2) throw InputError("--L: must be >= 2");
    if (f.a) s.model.coupling_a = *f.a;
    if (f.b) s.model.coupling_b = *f.b;
    if (!(s.model.coupling_a > 0.0) || !(s.model.coupling_b > 0.0)) throw InputError("--a/--b: couplings must be positive");
    if (f.D) s.model.dimension = *f.D;
    if (f.beta) s.grid = parse_beta(*f.beta);
    if (f.spacing) s.spacing = parse_spacing(*f.spacing);
    if (f.out) s.out = *f.out;
    if (f.cap) {
        if (*f.cap == 0 || *f.cap > kMaxCap) {
            throw InputError("--cap: must lie in [1, " + std::to_string(kMaxCap) + "]");
        }
        s.enumeration.cap = *f.cap;
    }
    if (f.threads) s.enumeration.threads = *f.threads;
    if (f.side) s.side = parse_side(*f.side);
    s.max_weight = f.max_weight;
    if (f.normalize) s.per_qubit = parse_normalize(*f.normalize);
    if (f.check) s.check = *f.check;
    s.tol = f.tol;
    return s;
}

CssModel require_model(const Settings& s) {
    if (!s.model_given) throw InputError("--model is required");
    return build_model(s.model);
}

// Writes to --out when given, otherwise to stdout.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file '" + path + "'");
    write(out);
}

WeightEnumerator enumerator_for(const CssModel& m, Side side, const Settings& s) {
    ConstraintKernel k = constraint_kernel(m, side);
    if (s.max_weight) return weight_enumerator_mitm(k, *s.max_weight, s.enumeration);
    return weight_enumerator_full(k, s.enumeration);
}

int cmd_gsd(const Settings& s) {
    CssModel m = require_model(s);
    GsdReport r = gsd_report(m);
    emit(s.out, [&](std::ostream& out) {
        out << "model: " << m.label << '\n';
        out << "n_qubits: " << r.n_qubits << '\n';
        out << "rank_a: " << r.rank_a << '\n';
        out << "rank_b: " << r.rank_b << '\n';
        out << "log2_gsd: " << r.log2_gsd << '\n';
        out << "gsd: " << r.gsd << '\n';
    });
    return kExitOk;
}

int cmd_enumerate(const Settings& s) {
    CssModel m = require_model(s);
    WeightEnumerator w = enumerator_for(m, s.side, s);
    std::cerr << m.label << " side " << to_char(s.side) << ": kernel dimension " << w.dimension
              << (w.complete ? ", complete" : ", truncated at weight " + std::to_string(w.max_tracked)) << '\n';
    emit(s.out, [&](std::ostream& out) { write_enumerator_csv(out, w); });
    return kExitOk;
}

int cmd_thermo(const Settings& s) {
    CssModel m = require_model(s);
    WeightEnumerator wa = enumerator_for(m, Side::A, s);
    WeightEnumerator wb = enumerator_for(m, Side::B, s);
    std::vector<double> grid = make_beta_grid(s.grid.min, s.grid.max, s.grid.count, s.spacing);
    double volume = s.per_qubit ? static_cast<double>(m.n_qubits) : m.volume();
    std::vector<ThermoPoint> points;
    if (grid.size() >= 3) {
        SweepOptions opts;
        opts.volume = volume;
        points = sweep(m, wa, wb, grid, opts);
    } else {
        for (double beta : grid) {
            ThermoPoint p;
            p.beta = beta;
            p.log_z = log_partition(m, wa, wb, beta);
            p.f_density = free_energy_density(p.log_z, beta, volume);
            p.flags = "no_derivative";
            points.push_back(p);
        }
    }
    emit(s.out, [&](std::ostream& out) { write_thermo_csv(out, points); });
    return kExitOk;
}

int finish_series(const Settings& s, const SeriesComparison& c) {
    write_series_report(std::cout, c);
    if (!s.out.empty()) emit(s.out, [&](std::ostream& out) { write_series_csv(out, c); });
    return c.matched ? kExitOk : kExitCheck;
}

int cmd_duality(const Settings& s) {
    const int L = s.model.L;
    if (s.check == "4dtc-ising") return finish_series(s, check_series_duality_4dtc(L, s.enumeration));
    if (s.check == "homology") return finish_series(s, check_homology_identity(L, s.enumeration));
    if (s.check == "bound") {
        CoefficientBoundReport r = check_coefficient_bound(L, s.enumeration);
        std::cout << "claim: b_n >= b*_n for all n and sum b_n <= 16 sum b*_n\n";
        std::cout << "L: " << L << '\n';
        std::cout << "pointwise: " << (r.pointwise ? "true" : "false") << '\n';
        std::cout << "total_ratio: " << (r.total_ratio ? "true" : "false") << '\n';
        std::cout << "sum_b: " << r.total_cycles << '\n';
        std::cout << "sum_b_star: " << r.total_boundaries << '\n';
        std::cout << "holds: " << (r.holds() ? "true" : "false") << '\n';
        return r.holds() ? kExitOk : kExitCheck;
    }
    if (s.check == "bath-vx" || s.check == "bath-vy") {
        Bath bath = s.check == "bath-vx" ? Bath::Vx : Bath::Vy;
        BondMap map = build_2dtc_bath_mapping(L, bath);
        bool ok = bond_algebra_isomorphic(map);
        std::cout << "claim: open-boundary 2D toric code with " << (bath == Bath::Vx ? "Vx" : "Vy")
                  << " bath maps to Ising chains preserving the bond algebra\n";
        std::cout << "L: " << L << '\n';
        std::cout << "operators: " << map.source_ops.size() << '\n';
        std::cout << "isomorphic: " << (ok ? "true" : "false") << '\n';
        if (!s.out.empty()) {
            emit(s.out, [&](std::ostream& out) {
                out << "label,source,target\n";
                for (std::size_t i = 0; i < map.source_ops.size(); ++i) {
                    out << map.labels[i] << ',' << map.source_ops[i].str() << ',' << map.target_ops[i].str() << '\n';
                }
            });
        }
        return ok ? kExitOk : kExitCheck;
    }
    if (s.check == "haah-chains") {
        double tol = s.tol.value_or(1e-12);
        std::vector<double> grid = make_beta_grid(s.grid.min, s.grid.max, s.grid.count, s.spacing);
        HaahChainReport r = check_haah_chain_duality(L, grid, s.model.coupling_a, s.model.coupling_b);
        bool ok = r.max_relative_deviation <= tol;
        std::cout << "claim: log Z of Haah's code equals two periodic Ising chains of L^3 spins\n";
        std::cout << "L: " << L << '\n';
        std::cout << "kernel_dims: " << r.kernel_dim_a << ',' << r.kernel_dim_b << '\n';
        std::cout << "max_relative_deviation: " << r.max_relative_deviation << '\n';
        std::cout << "tolerance: " << tol << '\n';
        std::cout << "matched: " << (ok ? "true" : "false") << '\n';
        if (!s.out.empty()) {
            emit(s.out, [&](std::ostream& out) {
                out << "beta,logZ_code,logZ_chains\n";
                char buf[128];
                for (std::size_t i = 0; i < r.betas.size(); ++i) {
                    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", r.betas[i], r.log_z_code[i],
                                  r.log_z_chains[i]);
                    out << buf;
                }
            });
        }
        return ok ? kExitOk : kExitCheck;
    }
    throw InputError("--check: expected one of 4dtc-ising, homology, bound, bath-vx, bath-vy, haah-chains; got '" +
                     s.check + "'");
}

int cmd_oracle_compare(const Settings& s) {
    CssModel m = require_model(s);
    double tol = s.tol.value_or(1e-9);
    WeightEnumerator wa = weight_enumerator_full(constraint_kernel(m, Side::A), s.enumeration);
    WeightEnumerator wb = weight_enumerator_full(constraint_kernel(m, Side::B), s.enumeration);
    std::vector<double> grid = make_beta_grid(s.grid.min, s.grid.max, s.grid.count, s.spacing);
    double worst = 0.0;
    std::ostringstream csv;
    csv << "beta,logZ,logZ_dense,rel_dev\n";
    for (double beta : grid) {
        double z = log_partition(m, wa, wb, beta);
        double dense = oracle::dense_log_trace(m, beta);
        double dev = std::abs(z - dense) / std::abs(dense);
        worst = std::max(worst, dev);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", beta, z, dense, dev);
        csv << buf;
    }
    bool ok = worst <= tol;
    std::cout << "model: " << m.label << '\n';
    std::cout << "points: " << grid.size() << '\n';
    std::cout << "max_relative_deviation: " << worst << '\n';
    std::cout << "tolerance: " << tol << '\n';
    std::cout << "matched: " << (ok ? "true" : "false") << '\n';
    if (!s.out.empty()) emit(s.out, [&](std::ostream& out) { out << csv.str(); });
    return ok ? kExitOk : kExitCheck;
}

int cmd_logicals(const Settings& s) {
    if (!s.model_given) throw InputError("--model is required");
    LogicalReport r;
    if (s.model.kind == ModelKind::toric4d) {
        r = logical_operators_4dtc(s.model.L);
    } else if (s.model.kind == ModelKind::haah) {
        r = logical_operators_haah(s.model.L);
    } else {
        throw InputError("logicals: only toric4d and haah have logical families");
    }
    emit(s.out, [&](std::ostream& out) { write_logical_report(out, r); });
    return r.ok() ? kExitOk : kExitCheck;
}

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file; flags override its fields");
    sub->add_option("--model", f.model, "toric2d, toric3d, toric4d, haah or ising");
    sub->add_option("--L", f.L, "linear lattice size (>= 2)");
    sub->add_option("--a", f.a, "A-side coupling");
    sub->add_option("--b", f.b, "B-side coupling");
    sub->add_option("--out", f.out, "output file (CSV or report)");
    sub->add_option("--cap", f.cap, "enumeration cap: largest kernel dimension walked exhaustively");
    sub->add_option("--threads", f.threads, "worker threads (default: STABTHERM_THREADS or hardware)");
}

void add_grid(CLI::App* sub, Flags& f) {
    sub->add_option("--beta", f.beta, "beta grid as min:max:count");
    sub->add_option("--spacing", f.spacing, "linear or log");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact thermodynamics and duality checks for CSS stabilizer models"};
    app.require_subcommand(1);
    Flags flags;

    auto* gsd_cmd = app.add_subcommand("gsd", "ground-state degeneracy from generator ranks");
    add_common(gsd_cmd, flags);

    auto* enum_cmd = app.add_subcommand("enumerate", "constraint-kernel weight enumerator as CSV");
    add_common(enum_cmd, flags);
    enum_cmd->add_option("--side", flags.side, "A or B");
    enum_cmd->add_option("--max-weight", flags.max_weight, "truncate at this weight (meet-in-the-middle)");

    auto* thermo_cmd = app.add_subcommand("thermo", "log Z, f, u, c over a beta grid as CSV");
    add_common(thermo_cmd, flags);
    add_grid(thermo_cmd, flags);
    thermo_cmd->add_option("--max-weight", flags.max_weight, "use truncated enumerators up to this weight");
    thermo_cmd->add_option("--normalize", flags.normalize, "sites (L^D, default) or qubits");

    auto* duality_cmd = app.add_subcommand("duality", "coefficient, homology and bond-algebra checks");
    add_common(duality_cmd, flags);
    add_grid(duality_cmd, flags);
    duality_cmd->add_option("--check", flags.check, "4dtc-ising, homology, bound, bath-vx, bath-vy or haah-chains");
    duality_cmd->add_option("--tol", flags.tol, "relative tolerance for haah-chains");

    auto* oracle_cmd = app.add_subcommand("oracle-compare", "log Z against dense diagonalization");
    add_common(oracle_cmd, flags);
    add_grid(oracle_cmd, flags);
    oracle_cmd->add_option("--tol", flags.tol, "relative tolerance (default 1e-9)");

    auto* logicals_cmd = app.add_subcommand("logicals", "verify plane-like logical operators");
    add_common(logicals_cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        Settings s = resolve(flags);
        if (*gsd_cmd) return cmd_gsd(s);
        if (*enum_cmd) return cmd_enumerate(s);
        if (*thermo_cmd) return cmd_thermo(s);
        if (*duality_cmd) return cmd_duality(s);
        if (*oracle_cmd) return cmd_oracle_compare(s);
        if (*logicals_cmd) return cmd_logicals(s);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceRefusal& e) {
        std::cerr << "resource refusal: " << e.what() << '\n';
        return kExitRefusal;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return kExitCheck;
    }
    return kExitInput;
}
