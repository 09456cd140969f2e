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

// Brute-force dense-matrix reference implementations used only by tests.
// Operators are assembled by Kronecker products of literal 2x2 matrices so
// nothing here shares code with the bitmask kernels being checked.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qgsa/models.hpp"
#include "qgsa/pauli.hpp"
#include "qgsa/statevector.hpp"

namespace qgsa::testing {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat single_pauli(char p) {
    Mat m(2, 2);
    const std::complex<double> i{0, 1};
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("single_pauli: bad label");
    }
    return m;
}

/// Qubit 0 is the least significant index bit, so it sits rightmost in the
/// Kronecker chain.
inline Mat dense_word(const PauliWord& w) {
    Mat m = single_pauli(w.pauli_at(w.n_qubits - 1));
    for (int q = static_cast<int>(w.n_qubits) - 2; q >= 0; --q)
        m = Eigen::kroneckerProduct(m, single_pauli(w.pauli_at(q))).eval();
    return m;
}

inline Mat dense_matrix(const PauliSum& h) {
    const size_t dim = size_t{1} << h.n_qubits();
    Mat m = Mat::Zero(dim, dim);
    for (const auto& [w, c] : h.sorted_terms()) m += c * dense_word(w);
    return m;
}

inline Vec dense_state(const StateVector& psi) {
    Vec v(psi.dim());
    for (size_t i = 0; i < psi.dim(); ++i) v(i) = psi[i];
    return v;
}

inline Mat dense_exponential(const PauliSum& a, std::complex<double> factor) {
    const Mat m = factor * dense_matrix(a);
    return m.exp();
}

inline double dense_ground_energy(const PauliSum& h) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(dense_matrix(h), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

/// Random Hermitian k-local PauliSum: `words` draws of a weight <= k word
/// with a uniform real coefficient in [-1, 1].
inline PauliSum random_local_hamiltonian(uint32_t n, int k, int words, Rng& rng) {
    std::uniform_int_distribution<int> weight(1, std::min<int>(k, n));
    std::uniform_int_distribution<uint32_t> qubit(0, n - 1);
    std::uniform_int_distribution<int> axis(0, 2);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    PauliSum h(n);
    for (int i = 0; i < words; ++i) {
        const int wt = weight(rng);
        uint64_t x = 0, z = 0, used = 0;
        for (int j = 0; j < wt; ++j) {
            uint32_t q = qubit(rng);
            while ((used >> q) & 1) q = qubit(rng);
            used |= 1ull << q;
            const int a = axis(rng);
            if (a == 0) x |= 1ull << q;
            if (a == 1) x |= 1ull << q, z |= 1ull << q;
            if (a == 2) z |= 1ull << q;
        }
        h.add(x, z, coef(rng));
    }
    return h;
}

}  // namespace qgsa::testing
