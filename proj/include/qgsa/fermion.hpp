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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgsa/pauli.hpp"

namespace qgsa {

enum class Encoding { kJordanWigner, kBravyiKitaev };

Encoding encoding_from_string(const std::string& name);
std::string to_string(Encoding e);

/// Parsed electronic-structure integrals in Hartree. One-body table is
/// symmetric, two-body uses chemist notation (pq|rs) with its 8 index
/// symmetries stored explicitly.
struct IntegralSet {
    int n_orbitals = 0;   // spatial orbitals
    int n_electrons = 0;  // eta
    int ms2 = 0;          // 2 * S_z
    double core_energy = 0.0;
    std::vector<double> one_body;  // n^2
    std::vector<double> two_body;  // n^4, (pq|rs)

    double h(int p, int q) const { return one_body[p * n_orbitals + q]; }
    double eri(int p, int q, int r, int s) const {
        const int n = n_orbitals;
        return two_body[((p * n + q) * n + r) * n + s];
    }
    void set_h(int p, int q, double v);
    void set_eri(int p, int q, int r, int s, double v);  // fills all 8 images
};

/// Parses the FCIDUMP text format: namelist header "&FCI NORB=..,NELEC=..,
/// MS2=..," terminated by "/" or "&END", then free-format records
/// "<value> i a j b" with 1-based indices. j=b=0 selects the one-body
/// table, all-zero indices the core energy.
IntegralSet parse_fcidump(const std::string& text);
IntegralSet load_fcidump_file(const std::string& path);

/// Writes the 8-fold-unique records back out; parse(emit(x)) reproduces all
/// numeric content exactly.
std::string emit_fcidump(const IntegralSet& integrals);

struct Ladder {
    uint32_t mode;
    bool dagger;
};

/// A normal-ordered second-quantized operator: every stored term has all
/// creation operators left of all annihilation operators, indices strictly
/// ascending within each group. add_term() accepts arbitrary operator
/// strings and performs the reordering (with anticommutator contractions).
class FermionSum {
  public:
    FermionSum() = default;
    explicit FermionSum(uint32_t n_modes) : n_(n_modes) {}

    uint32_t n_modes() const { return n_; }
    size_t size() const { return terms_.size(); }

    void add_term(complex coef, std::vector<Ladder> ops);

    /// Terms as (coefficient, normal-ordered operator string), in a
    /// deterministic order.
    std::vector<std::pair<complex, std::vector<Ladder>>> terms() const;

    FermionSum adjoint() const;

  private:
    uint32_t n_ = 0;
    // Key encodes the canonical op string, one byte per ladder operator.
    std::map<std::string, complex> terms_;
};

/// Interleaved spin-orbital convention: spatial orbital p maps to spin
/// orbitals 2p (alpha) and 2p+1 (beta).
inline uint32_t spin_orbital(int p, int spin) { return 2 * p + spin; }

/// Second-quantized Hamiltonian: core + sum t_ij c+_i c_j
/// + sum u_ijkm c+_i c+_k c_m c_j with u from the chemist-notation table.
FermionSum build_fermion_hamiltonian(const IntegralSet& integrals);

PauliSum jordan_wigner(const FermionSum& f);
PauliSum bravyi_kitaev(const FermionSum& f);
PauliSum encode(const FermionSum& f, Encoding e);

/// Qubit image of a single ladder operator (two Pauli words).
PauliSum ladder_image(uint32_t mode, bool dagger, uint32_t n_modes, Encoding e);

/// Computational-basis image of an occupation bit string (bit j = mode j
/// occupied). Identity under Jordan-Wigner; Fenwick prefix parities under
/// Bravyi-Kitaev.
uint64_t encode_occupation(uint64_t occupations, uint32_t n_modes, Encoding e);

/// Total-number operator image, for particle-number symmetry checks.
PauliSum number_operator(uint32_t n_modes, Encoding e);

}  // namespace qgsa
