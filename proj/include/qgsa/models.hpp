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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "qgsa/fermion.hpp"
#include "qgsa/pauli.hpp"

namespace qgsa {

using Rng = std::mt19937_64;

/// Per-qubit unit Bloch vectors (r^x, r^y, r^z).
struct ProductState {
    std::vector<std::array<double, 3>> bloch;
    size_t n_qubits() const { return bloch.size(); }
};

/// Uniform single-qubit pure states: r^z ~ U[-1,1], azimuth ~ U[0,2pi).
ProductState random_product_state(uint32_t n_qubits, Rng& rng);

/// State preparation W with W|0> the reference state: either a set of X
/// flips (computational basis state) or a product of single-qubit unitaries.
struct BasisFlip {
    uint64_t flips = 0;
};
struct LocalRotations {
    // Row-major 2x2 unitary per qubit: {u00, u01, u10, u11}.
    std::vector<std::array<complex, 4>> gates;
};

struct Preparation {
    uint32_t n_qubits = 0;
    std::variant<BasisFlip, LocalRotations> op;

    bool is_basis_flip() const { return std::holds_alternative<BasisFlip>(op); }
    static Preparation identity(uint32_t n) { return {n, BasisFlip{0}}; }
    static Preparation basis_flips(uint32_t n, uint64_t flips) {
        return {n, BasisFlip{flips}};
    }
    /// Rotation product taking |0...0> to the given Bloch product state.
    static Preparation from_product_state(const ProductState& v);
};

/// Spatially disordered spinless 2-D Hubbard configuration. When a disorder
/// range is set, the per-edge coupling is drawn i.i.d. uniform from it;
/// otherwise the uniform value applies.
struct LatticeSpec {
    int rows = 1;
    int cols = 2;
    bool periodic = false;
    double t = 1.0;
    double v = 1.0;
    std::optional<std::pair<double, double>> t_disorder;
    std::optional<std::pair<double, double>> v_disorder;
    uint64_t seed = 0;
};

/// Resolved lattice instance: deduplicated nearest-neighbor edges in
/// row-major site indexing with their sampled couplings.
struct LatticeInstance {
    int rows = 0, cols = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> hopping;      // t_e per edge
    std::vector<double> interaction;  // v_e per edge
};

LatticeInstance realize_lattice(const LatticeSpec& spec);

/// H = -sum_e t_e (c+_i c_j + c+_j c_i) + sum_e v_e n_i n_j, one spinless
/// mode per site.
FermionSum build_spinless_hubbard(const LatticeInstance& lattice);
FermionSum build_spinless_hubbard(const LatticeSpec& spec);

/// Occupies the eta spin orbitals of lowest diagonal one-body energy and
/// maps the occupation string through the encoding. Returns the X-flip
/// preparation and the occupation bit string (mode order, pre-encoding).
std::pair<Preparation, uint64_t> hartree_fock_preparation(const IntegralSet& integrals,
                                                          Encoding e);

/// Occupation 1 on sites with even (row + col), encoded like the
/// Hartree-Fock preparation.
std::pair<Preparation, uint64_t> checkerboard_state(int rows, int cols, Encoding e);

}  // namespace qgsa
