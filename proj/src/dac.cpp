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

#include "qgsa/dac.hpp"

#include <cmath>
#include <stdexcept>

#include "qgsa/hypergraph.hpp"

namespace qgsa {

namespace {

// Pauli 3-vector of U Z U^+ for a 2x2 unitary U.
std::array<double, 3> rotated_z_axis(const std::array<complex, 4>& u) {
    // U Z U^+ columns from the spinor U|0> = (u00, u10): the axis is its
    // Bloch vector.
    const complex a = u[0], b = u[2];
    return {2.0 * (std::conj(a) * b).real(), 2.0 * (std::conj(a) * b).imag(),
            std::norm(a) - std::norm(b)};
}

}  // namespace

PauliSum build_F(const Preparation& w) {
    const uint32_t n = w.n_qubits;
    PauliSum f(n);
    f.add(0, 0, 0.5 * n);
    if (w.is_basis_flip()) {
        const uint64_t flips = std::get<BasisFlip>(w.op).flips;
        for (uint32_t j = 0; j < n; ++j)
            f.add(0, 1ull << j, ((flips >> j) & 1) ? 0.5 : -0.5);
        return f;
    }
    const auto& gates = std::get<LocalRotations>(w.op).gates;
    for (uint32_t j = 0; j < n; ++j) {
        const auto m = rotated_z_axis(gates[j]);
        const uint64_t bit = 1ull << j;
        f.add(bit, 0, -0.5 * m[0]);
        f.add(bit, bit, -0.5 * m[1]);
        f.add(0, bit, -0.5 * m[2]);
    }
    return f;
}

DacPlan build_A(const PauliSum& h, const PauliSum& f) {
    if (!h.is_hermitian(1e-10) || !f.is_hermitian(1e-10))
        throw std::invalid_argument("build_A: inputs must be Hermitian");
    if (h.n_qubits() != f.n_qubits())
        throw std::invalid_argument("build_A: size mismatch");
    DacPlan plan;
    plan.f = f;
    plan.a = commutator(h, f);
    plan.a *= complex{0, 1};
    plan.a.prune();
    if (!plan.a.is_hermitian(1e-10))
        throw std::runtime_error("build_A: commutator lost Hermiticity");
    plan.term_count = plan.a.size();
    size_t nontrivial = 0;
    for (const auto& [key, c] : h.terms()) {
        (void)c;
        if (key.x | key.z) ++nontrivial;
    }
    plan.nh_times_n = nontrivial * h.n_qubits();
    if (nontrivial) {
        const InteractionHypergraph g = hypergraph_of(h);
        plan.bound = static_cast<double>(g.k) * std::pow(4.0, g.k) *
                     static_cast<double>(g.edges.size());
    }
    return plan;
}

SacResult dac_optimize(const PauliSum& h, const StateVector& psi0, const DacPlan& plan,
                       ExpMethod method, const ThetaGrid& grid, double refine_tol,
                       int trotter_steps) {
    SacResult res;
    res.e_ref = expectation(h, psi0);
    res.variance = variance(h, psi0);
    const double step = (grid.max - grid.min) / (grid.points - 1);
    if (plan.a.empty()) {
        res.theta_star = 0.0;
        res.e_star = res.e_ref;
        for (int i = 0; i < grid.points; ++i)
            res.curve.emplace_back(grid.min + i * step, res.e_ref);
        return res;
    }

    if (method == ExpMethod::kTrotter) {
        const auto f = [&](double theta) {
            return expectation(
                h, apply_exponential(plan.a, theta, psi0, method, trotter_steps));
        };
        const ScanResult scan = minimize_on_grid(f, grid, refine_tol);
        res.theta_star = scan.theta_star;
        res.e_star = scan.value_star;
        res.curve = scan.curve;
        return res;
    }

    // Exact scan: march outward from the grid point nearest theta = 0 so
    // each point costs a single step-sized exponential.
    std::vector<double> thetas(grid.points);
    for (int i = 0; i < grid.points; ++i) thetas[i] = grid.min + i * step;
    int i0 = 0;
    for (int i = 1; i < grid.points; ++i)
        if (std::abs(thetas[i]) < std::abs(thetas[i0])) i0 = i;

    std::vector<double> energies(grid.points, 0.0);
    StateVector anchor = apply_exponential(plan.a, thetas[i0], psi0);
    StateVector best_state = anchor;
    int best = i0;
    energies[i0] = expectation(h, anchor);

    StateVector cur = anchor;
    for (int i = i0 + 1; i < grid.points; ++i) {
        cur = apply_exponential(plan.a, step, cur);
        energies[i] = expectation(h, cur);
        if (energies[i] < energies[best]) {
            best = i;
            best_state = cur;
        }
    }
    cur = anchor;
    for (int i = i0 - 1; i >= 0; --i) {
        cur = apply_exponential(plan.a, -step, cur);
        energies[i] = expectation(h, cur);
        if (energies[i] < energies[best]) {
            best = i;
            best_state = cur;
        }
    }
    res.curve.reserve(grid.points);
    for (int i = 0; i < grid.points; ++i) res.curve.emplace_back(thetas[i], energies[i]);

    // Refine near the best grid point; offsets from it stay below one step.
    const double theta_b = thetas[best];
    const auto f = [&](double theta) {
        return expectation(h, apply_exponential(plan.a, theta - theta_b, best_state));
    };
    const double lo = thetas[std::max(0, best - 1)];
    const double hi = thetas[std::min(grid.points - 1, best + 1)];
    const ThetaGrid local{lo, hi, 5};
    const ScanResult scan = minimize_on_grid(f, local, refine_tol);
    if (scan.value_star <= energies[best]) {
        res.theta_star = scan.theta_star;
        res.e_star = scan.value_star;
    } else {
        res.theta_star = theta_b;
        res.e_star = energies[best];
    }
    return res;
}

}  // namespace qgsa
