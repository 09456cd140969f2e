// Copyright 2026 the qgsa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgsa/dac.hpp"
#include "qgsa/fermion.hpp"
#include "qgsa/hypergraph.hpp"
#include "qgsa/models.hpp"
#include "qgsa/oracle.hpp"
#include "qgsa/product_approx.hpp"
#include "qgsa/sac.hpp"
#include "qgsa/statevector.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qgsa;

namespace {

struct CommonOpts {
    uint64_t seed = 1;
    double theta_min = 0.0, theta_max = 0.0;  // 0/0 means algorithm default
    int theta_points = 401;
    int trials = 200;
    unsigned threads = 1;
    std::string out_dir = ".";
    std::string encoding = "jw";
    bool skip_exact = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "rng seed");
    cmd->add_option("--theta-min", o.theta_min, "grid lower bound");
    cmd->add_option("--theta-max", o.theta_max, "grid upper bound");
    cmd->add_option("--theta-points", o.theta_points, "grid point count");
    cmd->add_option("--trials", o.trials, "trial count");
    cmd->add_option("--threads", o.threads, "worker threads");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--encoding", o.encoding, "fermion encoding, jw or bk");
    cmd->add_flag("--no-exact", o.skip_exact, "skip the exact-energy oracle");
}

struct LatticeOpts {
    int rows = 4, cols = 4;
    bool periodic = false;
    double t = 1.0, v = 1.0;
    std::vector<double> t_range, v_range;
};

void add_lattice(CLI::App* cmd, LatticeOpts& o) {
    cmd->add_option("--rows", o.rows, "lattice rows");
    cmd->add_option("--cols", o.cols, "lattice columns");
    cmd->add_flag("--periodic", o.periodic, "periodic boundaries");
    cmd->add_option("--t", o.t, "uniform hopping");
    cmd->add_option("--v", o.v, "uniform interaction");
    cmd->add_option("--t-disorder", o.t_range, "hopping range lo hi")->expected(2);
    cmd->add_option("--v-disorder", o.v_range, "interaction range lo hi")->expected(2);
}

LatticeSpec lattice_spec(const LatticeOpts& o, uint64_t seed) {
    LatticeSpec spec;
    spec.rows = o.rows;
    spec.cols = o.cols;
    spec.periodic = o.periodic;
    spec.t = o.t;
    spec.v = o.v;
    spec.seed = seed;
    if (o.t_range.size() == 2) spec.t_disorder = {o.t_range[0], o.t_range[1]};
    if (o.v_range.size() == 2) spec.v_disorder = {o.v_range[0], o.v_range[1]};
    return spec;
}

ThetaGrid make_grid(const CommonOpts& o, const ThetaGrid& fallback) {
    ThetaGrid g = fallback;
    if (o.theta_min != 0.0 || o.theta_max != 0.0) {
        g.min = o.theta_min;
        g.max = o.theta_max;
    }
    g.points = o.theta_points;
    return g;
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_curve(const fs::path& path, const std::vector<std::pair<double, double>>& c) {
    std::ofstream out(path);
    out << "theta,energy\n";
    for (const auto& [t, e] : c) out << fmt12(t) << "," << fmt12(e) << "\n";
}

void write_report(const fs::path& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

std::optional<double> maybe_exact(const PauliSum& h, const CommonOpts& o,
                                  const StateVector* guess, json& report) {
    if (o.skip_exact || h.n_qubits() > 24) return std::nullopt;
    const SpectrumResult s =
        ground_energy(h, SpectrumMethod::kIterative, LanczosOptions{}, guess);
    report["oracle"] = {{"residual", s.residual}, {"matvecs", s.iterations}};
    return s.energy;
}

json curve_summary(const SacResult& r) {
    return {{"theta_star", r.theta_star},
            {"optimized", r.e_star},
            {"reference", r.e_ref},
            {"variance", r.variance}};
}

std::pair<Preparation, uint64_t> reference_state(const std::string& name,
                                                 const IntegralSet* integrals,
                                                 int rows, int cols, Encoding e) {
    if (name == "hf") {
        if (!integrals) throw std::runtime_error("hf reference needs integrals");
        return hartree_fock_preparation(*integrals, e);
    }
    if (name == "checkerboard") return checkerboard_state(rows, cols, e);
    throw std::runtime_error("unknown reference state: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"Quantum ground-state approximation experiments"};
    app.require_subcommand(1);

    CommonOpts common;
    LatticeOpts lattice;
    std::string fcidump_path, pauli_path, state_name = "checkerboard";
    std::string method_name = "exact", out_file = "hamiltonian.txt";
    int trotter_steps = 16;
    uint64_t flips = 0;

    auto* product = app.add_subcommand("hubbard-product",
                                       "randomized product-state rounding");
    add_common(product, common);
    add_lattice(product, lattice);

    auto* hsac = app.add_subcommand("hubbard-sac", "shallow circuit on a lattice");
    add_common(hsac, common);
    add_lattice(hsac, lattice);
    hsac->add_option("--state", state_name, "reference: checkerboard");

    auto* hdac = app.add_subcommand("hubbard-dac", "deep circuit on a lattice");
    add_common(hdac, common);
    add_lattice(hdac, lattice);
    hdac->add_option("--state", state_name, "reference: checkerboard");
    hdac->add_option("--method", method_name, "exact or trotter");
    hdac->add_option("--trotter-steps", trotter_steps, "repetitions for trotter");

    auto* csac = app.add_subcommand("chem-sac", "shallow circuit on a molecule");
    add_common(csac, common);
    csac->add_option("--fcidump", fcidump_path, "FCIDUMP path")->required();
    csac->add_option("--state", state_name, "reference: hf");

    auto* cdac = app.add_subcommand("chem-dac", "deep circuit on a molecule");
    add_common(cdac, common);
    cdac->add_option("--fcidump", fcidump_path, "FCIDUMP path")->required();
    cdac->add_option("--state", state_name, "reference: hf");
    cdac->add_option("--method", method_name, "exact or trotter");
    cdac->add_option("--trotter-steps", trotter_steps, "repetitions for trotter");

    auto* scan = app.add_subcommand("theta-scan", "energy curve of a Pauli file");
    add_common(scan, common);
    scan->add_option("--pauli", pauli_path, "Pauli text Hamiltonian")->required();
    scan->add_option("--flips", flips, "reference basis state flip mask");

    auto* exp = app.add_subcommand("export-hamiltonian", "write the Pauli text form");
    add_common(exp, common);
    add_lattice(exp, lattice);
    exp->add_option("--fcidump", fcidump_path, "FCIDUMP source instead of a lattice");
    exp->add_option("--out-file", out_file, "output file name");

    CLI11_PARSE(app, argc, argv);
    set_thread_count(common.threads);
    const fs::path out_dir(common.out_dir);
    fs::create_directories(out_dir);
    const Encoding enc = encoding_from_string(common.encoding);
    const auto started = std::chrono::steady_clock::now();

    json report;
    report["seed"] = common.seed;
    report["encoding"] = common.encoding;
    std::vector<std::pair<double, double>> curve;

    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    };

    if (product->parsed() || hsac->parsed() || hdac->parsed() || exp->parsed()) {
        report["unit"] = "hopping";
        if (exp->parsed() && !fcidump_path.empty()) {
            report["unit"] = "hartree";
            const IntegralSet ints = load_fcidump_file(fcidump_path);
            save_pauli_file(encode(build_fermion_hamiltonian(ints), enc),
                            (out_dir / out_file).string());
            std::cout << "wrote " << (out_dir / out_file).string() << "\n";
            return 0;
        }
        const LatticeSpec spec = lattice_spec(lattice, common.seed);
        const LatticeInstance inst = realize_lattice(spec);
        const PauliSum h = encode(build_spinless_hubbard(inst), enc);
        report["lattice"] = {{"rows", inst.rows},
                             {"cols", inst.cols},
                             {"periodic", spec.periodic},
                             {"edges", inst.edges.size()},
                             {"hopping", inst.hopping},
                             {"interaction", inst.interaction}};

        if (exp->parsed()) {
            save_pauli_file(h, (out_dir / out_file).string());
            std::cout << "wrote " << (out_dir / out_file).string() << "\n";
            return 0;
        }
        if (product->parsed()) {
            report["experiment"] = "hubbard-product";
            Rng rng(common.seed);
            const Theorem1Report rep =
                improve_product_state(h, common.trials, rng, OptMode::kMinimize);
            double mean_impr = 0, mean_rand = 0;
            for (double e : rep.trial_energies) mean_impr += e;
            for (double e : rep.unimproved_energies) mean_rand += e;
            mean_impr /= rep.trials;
            mean_rand /= rep.trials;
            report["energies"] = {{"baseline", rep.baseline},
                                  {"best", rep.best_energy},
                                  {"mean_improved", mean_impr},
                                  {"mean_random", mean_rand}};
            if (auto exact = maybe_exact(h, common, nullptr, report))
                report["energies"]["exact"] = *exact;
            report["counts"] = {{"trials", rep.trials},
                                {"d", rep.d},
                                {"k", rep.k},
                                {"f_strict", rep.f_strict},
                                {"triangle_free", rep.triangle_free}};
            for (int i = 0; i < rep.trials; ++i)
                curve.emplace_back(i, rep.trial_energies[i]);
        } else {
            const auto [w, occ] =
                reference_state(state_name, nullptr, inst.rows, inst.cols, enc);
            report["occupation"] = occ;
            const StateVector psi0 = prepare(w);
            std::optional<double> exact;
            SacResult res;
            if (hsac->parsed()) {
                report["experiment"] = "hubbard-sac";
                auto [plan, r] = sac_auto(h, w, make_grid(common, ThetaGrid{}));
                res = std::move(r);
                report["counts"] = {{"t_hat", plan.t_hat},
                                    {"subsets", plan.subsets.size()},
                                    {"retained", plan.retained.size()},
                                    {"evaluations", plan.evaluations},
                                    {"bound", plan.bound}};
            } else {
                report["experiment"] = "hubbard-dac";
                const DacPlan plan = build_A(h, build_F(w));
                const ExpMethod method = method_name == "trotter"
                                             ? ExpMethod::kTrotter
                                             : ExpMethod::kExact;
                res = dac_optimize(h, psi0, plan, method,
                                   make_grid(common, dac_default_grid()), 1e-8,
                                   trotter_steps);
                report["counts"] = {{"a_terms", plan.term_count},
                                    {"bound", plan.bound},
                                    {"nh_times_n", plan.nh_times_n}};
            }
            exact = maybe_exact(h, common, &psi0, report);
            report["energies"] = curve_summary(res);
            report["theta_star"] = res.theta_star;
            if (exact) {
                report["energies"]["exact"] = *exact;
                if (res.e_ref > *exact)
                    report["fraction"] =
                        correlation_fraction(res.e_ref, res.e_star, *exact);
            }
            curve = res.curve;
        }
    } else if (csac->parsed() || cdac->parsed()) {
        report["unit"] = "hartree";
        const IntegralSet ints = load_fcidump_file(fcidump_path);
        const PauliSum h = encode(build_fermion_hamiltonian(ints), enc);
        const auto [w, occ] = reference_state(state_name, &ints, 0, 0, enc);
        report["occupation"] = occ;
        const StateVector psi0 = prepare(w);
        SacResult res;
        if (csac->parsed()) {
            report["experiment"] = "chem-sac";
            auto [plan, r] = sac_auto(h, w, make_grid(common, ThetaGrid{}), 1e-6);
            res = std::move(r);
            report["counts"] = {{"t_hat", plan.t_hat},
                                {"subsets", plan.subsets.size()},
                                {"retained", plan.retained.size()},
                                {"evaluations", plan.evaluations},
                                {"bound", plan.bound}};
        } else {
            report["experiment"] = "chem-dac";
            const DacPlan plan = build_A(h, build_F(w));
            const ExpMethod method =
                method_name == "trotter" ? ExpMethod::kTrotter : ExpMethod::kExact;
            res = dac_optimize(h, psi0, plan, method,
                               make_grid(common, dac_default_grid()), 1e-8,
                               trotter_steps);
            report["counts"] = {{"a_terms", plan.term_count},
                                {"bound", plan.bound},
                                {"nh_times_n", plan.nh_times_n}};
        }
        const auto exact = maybe_exact(h, common, &psi0, report);
        report["energies"] = curve_summary(res);
        report["theta_star"] = res.theta_star;
        if (exact) {
            report["energies"]["exact"] = *exact;
            if (res.e_ref > *exact)
                report["fraction"] = correlation_fraction(res.e_ref, res.e_star, *exact);
        }
        curve = res.curve;
    } else if (scan->parsed()) {
        report["experiment"] = "theta-scan";
        report["unit"] = "problem";
        const PauliSum h = load_pauli_file(pauli_path);
        const Preparation w = Preparation::basis_flips(h.n_qubits(), flips);
        const SacPlan plan = sac_build(h, w, SacBranch::kP);
        const SacResult res = sac_optimize(h, w, plan, make_grid(common, ThetaGrid{}));
        report["counts"] = {{"t_hat", plan.t_hat},
                            {"subsets", plan.subsets.size()},
                            {"retained", plan.retained.size()},
                            {"evaluations", plan.evaluations},
                            {"bound", plan.bound}};
        report["energies"] = curve_summary(res);
        report["theta_star"] = res.theta_star;
        if (auto exact = maybe_exact(h, common, nullptr, report))
            report["energies"]["exact"] = *exact;
        curve = res.curve;
    }

    report["timings"] = {{"total_seconds", elapsed()}};
    write_curve(out_dir / "curve.csv", curve);
    write_report(out_dir / "report.json", report);
    std::cout << report["experiment"].get<std::string>() << ": wrote "
              << (out_dir / "report.json").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
