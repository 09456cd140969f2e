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

#include "qgsa/oracle.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qgsa/models.hpp"

namespace qgsa {

namespace {

constexpr complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

SpectrumResult dense_ground(const PauliSum& h) {
    const uint32_t n = h.n_qubits();
    if (n > 14) throw std::invalid_argument("ground_energy: dense limited to 14 qubits");
    const size_t dim = size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [k, c] : h.terms()) {
        const complex f = c * kPowI[std::popcount(k.x & k.z) & 3];
        for (size_t col = 0; col < dim; ++col) {
            const size_t row = col ^ k.x;
            m(row, col) += (std::popcount(k.z & col) & 1) ? -f : f;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("ground_energy: dense eigensolver failed");
    return {solver.eigenvalues()(0), SpectrumMethod::kDense, 0.0, 0};
}

using Vec = std::vector<complex>;

complex dot(const Vec& a, const Vec& b) {
    complex s{0, 0};
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double nrm(const Vec& a) { return std::sqrt(dot(a, a).real()); }

void axpy(complex alpha, const Vec& x, Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

SpectrumResult iterative_ground(const PauliSum& h, const LanczosOptions& opts,
                                const StateVector* guess) {
    const uint32_t n = h.n_qubits();
    if (n > 24) throw std::invalid_argument("ground_energy: iterative limited to 24 qubits");
    const size_t dim = size_t{1} << n;

    StateVector work(n);
    Vec start(dim);
    if (guess) {
        if (guess->n_qubits() != n)
            throw std::invalid_argument("ground_energy: guess size mismatch");
        start = guess->amps();
    } else {
        Rng rng(opts.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (auto& a : start) a = complex{gauss(rng), gauss(rng)};
    }
    {
        const double s = nrm(start);
        if (s == 0) throw std::invalid_argument("ground_energy: zero start vector");
        for (auto& a : start) a /= s;
    }

    SpectrumResult res;
    res.method = SpectrumMethod::kIterative;
    std::vector<Vec> basis;
    std::vector<double> alpha, beta;  // tridiagonal entries per cycle

    Vec x = std::move(start);
    for (int cycle = 0; cycle <= opts.max_restarts; ++cycle) {
        basis.clear();
        alpha.clear();
        beta.clear();
        basis.push_back(x);
        bool exhausted = false;
        for (int j = 0; j < opts.max_krylov; ++j) {
            work.amps() = basis[j];
            Vec w = apply_pauli_sum(h, work);
            ++res.iterations;
            const double a = dot(basis[j], w).real();
            alpha.push_back(a);
            axpy(complex{-a, 0}, basis[j], w);
            if (j > 0) axpy(complex{-beta[j - 1], 0}, basis[j - 1], w);
            // Full reorthogonalization keeps the basis clean at these sizes.
            for (const Vec& v : basis) axpy(-dot(v, w), v, w);
            const double b = nrm(w);
            if (b < 1e-13) {
                exhausted = true;  // invariant subspace: result is exact
                break;
            }
            beta.push_back(b);
            if (j + 1 < opts.max_krylov) {
                for (auto& c : w) c /= b;
                basis.push_back(std::move(w));
            }
        }

        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
        const double theta = solver.eigenvalues()(0);
        const Eigen::VectorXd y = solver.eigenvectors().col(0);

        // Ritz vector in the original space.
        Vec ritz(dim, complex{0, 0});
        for (int i = 0; i < static_cast<int>(basis.size()) && i < m; ++i)
            axpy(complex{y(i), 0}, basis[i], ritz);
        const double rn = nrm(ritz);
        for (auto& c : ritz) c /= rn;

        work.amps() = ritz;
        Vec hr = apply_pauli_sum(h, work);
        ++res.iterations;
        axpy(complex{-theta, 0}, ritz, hr);
        res.energy = theta;
        res.residual = nrm(hr);
        if (res.residual < opts.tolerance || exhausted) return res;
        x = std::move(ritz);  // restart from the current best Ritz vector
    }
    throw std::runtime_error("ground_energy: Lanczos failed to converge, residual " +
                             std::to_string(res.residual));
}

}  // namespace

SpectrumResult ground_energy(const PauliSum& h, SpectrumMethod method,
                             const LanczosOptions& opts, const StateVector* guess) {
    if (!h.is_hermitian(1e-10))
        throw std::invalid_argument("ground_energy: H is not Hermitian");
    return method == SpectrumMethod::kDense ? dense_ground(h)
                                            : iterative_ground(h, opts, guess);
}

double correlation_fraction(double e_ref, double e, double e_exact) {
    if (!(e_ref > e_exact))
        throw std::invalid_argument("correlation_fraction: reference not above exact");
    return (e_ref - e) / (e_ref - e_exact);
}

}  // namespace qgsa
