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

#include "qgsa/sac.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qgsa {

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double v = 1.0;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

PauliSum single_qubit_P(int t) {
    if (t < 1) throw std::invalid_argument("single_qubit_P: t < 1");
    const double a = std::numbers::pi / (2.0 * t);
    PauliSum p(1);
    p.add(1, 0, std::cos(a));  // X
    p.add(1, 1, std::sin(a));  // Y
    return p;
}

std::vector<uint64_t> enumerate_S(const InteractionHypergraph& g, int t) {
    if (t < 1 || t > g.k) throw std::invalid_argument("enumerate_S: t out of range");
    std::set<uint64_t> out;
    std::vector<int> bits;
    for (uint64_t edge : g.edges) {
        bits.clear();
        for (uint64_t m = edge; m; m &= m - 1) bits.push_back(std::countr_zero(m));
        const int k = static_cast<int>(bits.size());
        if (t > k) continue;
        // Lexicographic t-combinations of the edge's vertices.
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            uint64_t mask = 0;
            for (int i : idx) mask |= 1ull << bits[i];
            out.insert(mask);
            int pos = t - 1;
            while (pos >= 0 && idx[pos] == k - t + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

namespace {

/// Pauli 3-vector (m_x, m_y, m_z) of W_j (p . sigma) W_j^+ for the single
/// qubit j of the preparation.
std::array<double, 3> conjugate_axis(const Preparation& w, uint32_t j,
                                     const std::array<double, 3>& p) {
    if (w.is_basis_flip()) {
        const bool flipped = (std::get<BasisFlip>(w.op).flips >> j) & 1;
        return flipped ? std::array<double, 3>{p[0], -p[1], -p[2]} : p;
    }
    const auto& u = std::get<LocalRotations>(w.op).gates[j];
    // M = U (p.sigma) U^+ via explicit 2x2 products.
    const complex s[3][4] = {
        {{0, 0}, {1, 0}, {1, 0}, {0, 0}},   // X
        {{0, 0}, {0, -1}, {0, 1}, {0, 0}},  // Y
        {{1, 0}, {0, 0}, {0, 0}, {-1, 0}},  // Z
    };
    complex m[4] = {};
    for (int a = 0; a < 3; ++a) {
        if (p[a] == 0.0) continue;
        // tmp = U * sigma_a
        complex tmp[4] = {u[0] * s[a][0] + u[1] * s[a][2], u[0] * s[a][1] + u[1] * s[a][3],
                          u[2] * s[a][0] + u[3] * s[a][2], u[2] * s[a][1] + u[3] * s[a][3]};
        // m += p_a * tmp * U^+
        m[0] += p[a] * (tmp[0] * std::conj(u[0]) + tmp[1] * std::conj(u[1]));
        m[1] += p[a] * (tmp[0] * std::conj(u[2]) + tmp[1] * std::conj(u[3]));
        m[2] += p[a] * (tmp[2] * std::conj(u[0]) + tmp[3] * std::conj(u[1]));
        m[3] += p[a] * (tmp[2] * std::conj(u[2]) + tmp[3] * std::conj(u[3]));
    }
    return {0.5 * (m[1] + m[2]).real(), 0.5 * ((m[1] - m[2]) * complex{0, 1}).real(),
            0.5 * (m[0] - m[3]).real()};
}

/// K_s = tensor over j in s of (m_j . sigma), expanded into a PauliSum.
PauliSum expand_involution(uint32_t n, const std::vector<uint32_t>& qubits,
                           const std::vector<std::array<double, 3>>& axes) {
    PauliSum k(n);
    struct Partial {
        uint64_t x, z;
        double c;
    };
    std::vector<Partial> acc{{0, 0, 1.0}};
    std::vector<Partial> next;
    for (size_t i = 0; i < qubits.size(); ++i) {
        const uint64_t bit = 1ull << qubits[i];
        next.clear();
        for (const Partial& p : acc)
            for (int a = 0; a < 3; ++a) {
                const double m = axes[i][a];
                if (m == 0.0) continue;
                Partial q = p;
                q.c *= m;
                if (a == 0) q.x |= bit;
                if (a == 1) q.x |= bit, q.z |= bit;
                if (a == 2) q.z |= bit;
                next.push_back(q);
            }
        acc.swap(next);
    }
    for (const Partial& p : acc) k.add(p.x, p.z, p.c);
    return k;
}

std::vector<uint32_t> mask_bits(uint64_t m) {
    std::vector<uint32_t> bits;
    for (; m; m &= m - 1) bits.push_back(std::countr_zero(m));
    return bits;
}

/// Per-qubit Pauli expectations <u|{I,X,Y,Z}|u> for the reference local
/// state u = W_j|0> and for the flipped local state W_j|1> (the state K_s
/// leaves on qubit j in s, up to a phase).
struct LocalMoments {
    std::array<double, 4> keep, flip;
};

std::array<double, 4> pauli_moments(complex a, complex b) {
    const complex z = std::conj(a) * b;
    return {1.0, 2.0 * z.real(), 2.0 * z.imag(), std::norm(a) - std::norm(b)};
}

std::vector<LocalMoments> local_moments(const Preparation& w) {
    std::vector<LocalMoments> out(w.n_qubits);
    for (uint32_t j = 0; j < w.n_qubits; ++j) {
        complex a{1, 0}, b{0, 0};
        if (w.is_basis_flip()) {
            if ((std::get<BasisFlip>(w.op).flips >> j) & 1) std::swap(a, b);
            out[j].keep = pauli_moments(a, b);
            out[j].flip = pauli_moments(b, a);
        } else {
            const auto& u = std::get<LocalRotations>(w.op).gates[j];
            out[j].keep = pauli_moments(u[0], u[2]);
            out[j].flip = pauli_moments(u[1], u[3]);
        }
    }
    return out;
}

/// <u|H|u> for the product state that flips the reference on the given
/// qubits; exact for any PauliSum via per-qubit moments.
double product_expectation(const PauliSum& h, const std::vector<LocalMoments>& lm,
                           uint64_t flips) {
    static constexpr complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    double e = 0;
    for (const auto& [key, c] : h.terms()) {
        double p = (c * kPhase[std::popcount(key.x & key.z) & 3]).real();
        for (uint64_t m = key.x | key.z; m; m &= m - 1) {
            const uint32_t j = std::countr_zero(m);
            const int axis = ((key.x >> j) & 1) | (((key.z >> j) & 1) << 1);
            // axis: 1 = X, 3 = XZ (Y after the phase fold), 2 = Z.
            const int sigma = axis == 1 ? 1 : axis == 3 ? 2 : 3;
            p *= ((flips >> j) & 1) ? lm[j].flip[sigma] : lm[j].keep[sigma];
            if (p == 0.0) break;
        }
        e += p;
    }
    return e;
}

}  // namespace

SacPlan sac_build(const PauliSum& h, const Preparation& w, SacBranch branch,
                  int force_t) {
    if (branch == SacBranch::kAuto)
        throw std::invalid_argument("sac_build: resolve kAuto via sac_auto");
    if (!h.is_hermitian(1e-10))
        throw std::invalid_argument("sac_build: H is not Hermitian");

    const InteractionHypergraph g = hypergraph_of(h);
    const StateVector v = prepare(w);

    SacPlan plan;
    plan.branch = branch;
    plan.k = g.k;
    plan.d = g.d;
    plan.q = weight_resolved_overlap(h, v, w);

    if (force_t > 0) {
        if (force_t > g.k) throw std::invalid_argument("sac_build: forced t > k");
        plan.t_hat = force_t;
    } else {
        const int t_max = std::min<int>(g.k, static_cast<int>(h.n_qubits()));
        plan.t_hat = 1;
        for (int t = 2; t <= t_max; ++t)
            if (plan.q[t] > plan.q[plan.t_hat]) plan.t_hat = t;
    }

    plan.subsets = enumerate_S(g, plan.t_hat);
    plan.bound = binomial(g.k, plan.t_hat) * static_cast<double>(g.edges.size()) *
                 std::pow(4.0, g.k);
    for (const auto& [key, c] : h.terms()) {
        (void)c;
        plan.evaluations += static_cast<size_t>(
            binomial(std::popcount(key.x | key.z), plan.t_hat));
    }

    // Per-qubit generator axis before conjugation.
    std::array<double, 3> base{};
    if (branch == SacBranch::kP) {
        const double a = std::numbers::pi / (2.0 * plan.t_hat);
        base = {std::cos(a), std::sin(a), 0.0};
    } else {
        base = {1.0, 0.0, 0.0};
    }

    const bool flip_frame = w.is_basis_flip();
    uint64_t ref_index = 0;
    std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, complex>>> by_x;
    std::vector<complex> phi;
    if (flip_frame) {
        ref_index = std::get<BasisFlip>(w.op).flips;
        for (const auto& [key, c] : h.terms()) by_x[key.x].emplace_back(key.z, c);
    } else {
        phi = apply_pauli_sum(h, v);
    }

    plan.l = PauliSum(h.n_qubits());
    for (uint64_t s : plan.subsets) {
        const auto qubits = mask_bits(s);
        std::vector<std::array<double, 3>> axes;
        axes.reserve(qubits.size());
        for (uint32_t j : qubits) axes.push_back(conjugate_axis(w, j, base));
        const PauliSum ks = expand_involution(h.n_qubits(), qubits, axes);

        complex overlap{0, 0};  // <v| K_s H |v>
        if (flip_frame) {
            // Only H words with x mask equal to s connect |b> to K_s H |b>.
            const auto it = by_x.find(s);
            if (it == by_x.end()) continue;
            for (const auto& [uk, uc] : ks.terms()) {
                const PauliWord u{h.n_qubits(), uk.x, uk.z};
                for (const auto& [wz, wc] : it->second) {
                    const auto [phase, prod] =
                        word_multiply(u, PauliWord{h.n_qubits(), s, wz});
                    const double sign =
                        (std::popcount(prod.z & ref_index) & 1) ? -1.0 : 1.0;
                    overlap += uc * wc * phase * sign;
                }
            }
        } else {
            std::vector<complex> chi(v.dim(), complex{0, 0});
            static constexpr complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            for (const auto& [uk, uc] : ks.terms()) {
                // chi += u |v>
                const complex f = uc * kPhase[std::popcount(uk.x & uk.z) & 3];
                for (size_t i = 0; i < chi.size(); ++i) {
                    const size_t j = i ^ uk.x;
                    const complex t = f * v.amps()[j];
                    chi[i] += (std::popcount(uk.z & j) & 1) ? -t : t;
                }
            }
            for (size_t i = 0; i < chi.size(); ++i)
                overlap += std::conj(chi[i]) * phi[i];
        }

        const complex beta = complex{0, 2.0 * overlap.imag()};  // <v|[K_s,H]|v>
        if (std::abs(beta) <= 1e-12) continue;
        // i*beta_s is real; its sign makes dE/dtheta at 0 equal -sum|beta|.
        const double c_s = -beta.imag() > 0 ? 1.0 : -1.0;
        plan.retained.push_back(s);
        plan.beta.push_back(beta);
        plan.sign.push_back(c_s);
        plan.beta_total += std::abs(beta);
        PauliSum signed_ks = ks;
        signed_ks *= complex{c_s, 0};
        plan.l += signed_ks;
        plan.factors.push_back({c_s, ks});
    }

    // Outlier cut on the diagonal gap <v|K_s H K_s|v> - <v|H|v>. Every term
    // of L carries unit magnitude, so a subset whose flipped reference sits
    // an order of magnitude above the typical excitation scale adds
    // curvature proportional to its gap while contributing almost nothing
    // to the descent direction, and pins theta* near zero (deep-core
    // excitations in molecules). Subsets beyond ten times the median gap
    // are dropped.
    if (plan.retained.size() > 1) {
        const auto lm = local_moments(w);
        const double e_ref = product_expectation(h, lm, 0);
        const size_t m = plan.retained.size();
        std::vector<double> gap(m);
        for (size_t i = 0; i < m; ++i)
            gap[i] = product_expectation(h, lm, plan.retained[i]) - e_ref;
        std::vector<double> sorted = gap;
        std::sort(sorted.begin(), sorted.end());
        const double median = 0.5 * (sorted[(m - 1) / 2] + sorted[m / 2]);
        if (median > 0) {
            const double cut = 10.0 * median;
            SacPlan kept = plan;
            kept.retained.clear();
            kept.beta.clear();
            kept.sign.clear();
            kept.factors.clear();
            kept.beta_total = 0.0;
            kept.l = PauliSum(h.n_qubits());
            for (size_t i = 0; i < m; ++i) {
                if (gap[i] > cut) continue;
                kept.retained.push_back(plan.retained[i]);
                kept.beta.push_back(plan.beta[i]);
                kept.sign.push_back(plan.sign[i]);
                kept.factors.push_back(plan.factors[i]);
                kept.beta_total += std::abs(plan.beta[i]);
                PauliSum signed_ks = plan.factors[i].op;
                signed_ks *= complex{plan.sign[i], 0};
                kept.l += signed_ks;
            }
            plan = std::move(kept);
        }
    }

    const double denom = static_cast<double>(plan.k) * plan.k *
                         static_cast<double>(plan.d) * plan.d *
                         binomial(plan.k, plan.t_hat - 1) *
                         binomial(plan.k, plan.t_hat - 1);
    plan.theta_init = denom > 0 ? plan.beta_total / denom : 0.0;
    return plan;
}

SacResult sac_optimize(const PauliSum& h, const Preparation& w, const SacPlan& plan,
                       const ThetaGrid& grid, double refine_tol) {
    const StateVector v = prepare(w);
    SacResult res;
    res.e_ref = expectation(h, v);
    res.variance = variance(h, v);
    if (plan.factors.empty()) {
        res.theta_star = 0.0;
        res.e_star = res.e_ref;
        const double step = (grid.max - grid.min) / (grid.points - 1);
        for (int i = 0; i < grid.points; ++i)
            res.curve.emplace_back(grid.min + i * step, res.e_ref);
        return res;
    }
    const auto f = [&](double theta) {
        return expectation(h, apply_factored_exponential(plan.factors, theta, v));
    };
    const ScanResult scan = minimize_on_grid(f, grid, refine_tol);
    res.theta_star = scan.theta_star;
    res.e_star = scan.value_star;
    res.curve = scan.curve;
    return res;
}

std::pair<SacPlan, SacResult> sac_auto(const PauliSum& h, const Preparation& w,
                                       const ThetaGrid& grid, double refine_tol) {
    bool real_h = true;
    for (const auto& [key, c] : h.terms()) {
        // Hermitian H is real-matrix iff every word with an odd Y count has
        // an imaginary coefficient; equivalently i^{|x&z|} c is real.
        const complex m = c * (std::popcount(key.x & key.z) % 2 ? complex{0, 1}
                                                                : complex{1, 0});
        if (std::abs(m.imag()) > 1e-12) {
            real_h = false;
            break;
        }
    }
    if (real_h && w.is_basis_flip()) {
        SacPlan plan = sac_build(h, w, SacBranch::kP);
        SacResult res = sac_optimize(h, w, plan, grid, refine_tol);
        return {std::move(plan), std::move(res)};
    }
    SacPlan p_plan = sac_build(h, w, SacBranch::kP);
    SacResult p_res = sac_optimize(h, w, p_plan, grid, refine_tol);
    SacPlan x_plan = sac_build(h, w, SacBranch::kX);
    SacResult x_res = sac_optimize(h, w, x_plan, grid, refine_tol);
    if (x_res.e_star < p_res.e_star) return {std::move(x_plan), std::move(x_res)};
    return {std::move(p_plan), std::move(p_res)};
}

ComplexityRecord complexity_report(const SacPlan& plan, const InteractionHypergraph& g) {
    ComplexityRecord rec;
    rec.s_count = plan.subsets.size();
    rec.evaluations = plan.evaluations;
    rec.bound = binomial(g.k, plan.t_hat) * static_cast<double>(g.edges.size()) *
                std::pow(4.0, g.k);
    return rec;
}

}  // namespace qgsa
