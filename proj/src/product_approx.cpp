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

#include "qgsa/product_approx.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qgsa/statevector.hpp"

namespace qgsa {

SurfaceCoefficients surface_coefficients(const PauliSum& h,
                                         const InteractionHypergraph& g) {
    SurfaceCoefficients sc;
    sc.edges = g.edges;
    sc.identity = identity_coefficient(h);
    sc.u.resize(g.edges.size());
    sc.w.assign(g.edges.size(),
                g.edges.empty() ? 0.0 : sc.identity / static_cast<double>(g.edges.size()));
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const uint64_t r = g.edges[e];
        sc.u[e] = {h.coefficient(r, 0).real(),   // all-X word
                   h.coefficient(r, r).real(),   // all-Y word
                   h.coefficient(0, r).real()};  // all-Z word
    }
    return sc;
}

namespace {

// axis index for a non-identity single-qubit factor: X=0, Y=1, Z=2.
inline int axis_of(bool xb, bool zb) { return xb ? (zb ? 1 : 0) : 2; }

}  // namespace

double product_energy(const PauliSum& h, const ProductState& v) {
    if (h.n_qubits() > v.n_qubits())
        throw std::invalid_argument("product_energy: state too small");
    double e = 0.0;
    for (const auto& [key, c] : h.terms()) {
        double prod = c.real();
        uint64_t supp = key.x | key.z;
        while (supp) {
            const int i = std::countr_zero(supp);
            supp &= supp - 1;
            prod *= v.bloch[i][axis_of((key.x >> i) & 1, (key.z >> i) & 1)];
        }
        e += prod;
    }
    return e;
}

namespace {

/// One maximization trial: sample, update, score. Returns (pre, post) energy.
std::pair<double, double> run_trial(const PauliSum& h, const SurfaceCoefficients& sc,
                                    uint32_t n, Rng& rng, ProductState& v) {
    v = random_product_state(n, rng);
    const double pre = product_energy(h, v);

    uint64_t a_mask = 0;
    std::bernoulli_distribution coin(0.5);
    for (uint32_t i = 0; i < n; ++i)
        if (coin(rng)) a_mask |= 1ull << i;

    for (uint32_t i = 0; i < n; ++i) {
        if (!((a_mask >> i) & 1)) continue;
        std::array<double, 3> grad{0, 0, 0};
        for (size_t e = 0; e < sc.edges.size(); ++e) {
            const uint64_t r = sc.edges[e];
            if ((r & a_mask) != (1ull << i)) continue;  // needs R cap A = {i}
            for (int a = 0; a < 3; ++a) {
                if (sc.u[e][a] == 0.0) continue;
                double prod = sc.u[e][a];
                uint64_t rest = r & ~(1ull << i);
                while (rest) {
                    const int j = std::countr_zero(rest);
                    rest &= rest - 1;
                    prod *= v.bloch[j][a];
                }
                grad[a] += prod;
            }
        }
        const double nrm =
            std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
        if (nrm > 1e-14)
            v.bloch[i] = {grad[0] / nrm, grad[1] / nrm, grad[2] / nrm};
    }
    return {pre, product_energy(h, v)};
}

}  // namespace

Theorem1Report improve_product_state(const PauliSum& h, int trials, Rng& rng,
                                     OptMode mode) {
    if (trials < 1) throw std::invalid_argument("improve_product_state: trials < 1");
    if (!h.is_hermitian(1e-10))
        throw std::invalid_argument("improve_product_state: H is not Hermitian");

    // The update rule maximizes; minimization runs it on -H and flips the
    // reported energies back.
    const double flip = mode == OptMode::kMinimize ? -1.0 : 1.0;
    PauliSum work = h;
    work *= complex{flip, 0};

    const InteractionHypergraph g = hypergraph_of(work);
    const SurfaceCoefficients sc = surface_coefficients(work, g);
    const uint32_t n = h.n_qubits();

    Theorem1Report rep;
    rep.trials = trials;
    rep.baseline = identity_coefficient(h);
    rep.d = g.d;
    rep.k = g.k;
    rep.f_strict = strict_local_norm(h, g.k);
    rep.triangle_free = is_triangle_free(g);
    rep.trial_energies.reserve(trials);
    rep.unimproved_energies.reserve(trials);

    std::vector<uint64_t> seeds(trials);
    for (auto& s : seeds) s = rng();

    double best = 0.0;
    bool have_best = false;
    for (int t = 0; t < trials; ++t) {
        Rng trial_rng(seeds[t]);
        ProductState v;
        const auto [pre, post] = run_trial(work, sc, n, trial_rng, v);
        rep.unimproved_energies.push_back(flip * pre);
        rep.trial_energies.push_back(flip * post);
        if (!have_best || post > best) {
            best = post;
            rep.best_state = std::move(v);
            have_best = true;
        }
    }
    rep.best_energy = flip * best;
    return rep;
}

}  // namespace qgsa
