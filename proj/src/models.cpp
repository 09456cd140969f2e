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

#include "qgsa/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qgsa {

ProductState random_product_state(uint32_t n_qubits, Rng& rng) {
    if (n_qubits < 1) throw std::invalid_argument("random_product_state: n < 1");
    std::uniform_real_distribution<double> uz(-1.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * std::numbers::pi);
    ProductState v;
    v.bloch.resize(n_qubits);
    for (auto& r : v.bloch) {
        const double rz = uz(rng);
        const double phi = uphi(rng);
        const double s = std::sqrt(std::max(0.0, 1.0 - rz * rz));
        r = {s * std::cos(phi), s * std::sin(phi), rz};
    }
    return v;
}

Preparation Preparation::from_product_state(const ProductState& v) {
    LocalRotations rot;
    rot.gates.reserve(v.bloch.size());
    for (const auto& r : v.bloch) {
        const double theta = std::acos(std::clamp(r[2], -1.0, 1.0));
        const double phi = std::atan2(r[1], r[0]);
        const double c = std::cos(theta / 2), s = std::sin(theta / 2);
        const complex eip = std::polar(1.0, phi);
        // First column is the Bloch spinor, second any orthonormal complement.
        rot.gates.push_back({complex{c, 0}, complex{-s, 0}, eip * s, eip * c});
    }
    return {static_cast<uint32_t>(v.bloch.size()), std::move(rot)};
}

LatticeInstance realize_lattice(const LatticeSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1)
        throw std::invalid_argument("lattice: dimensions must be positive");
    const int n = spec.rows * spec.cols;
    if (n < 2) throw std::invalid_argument("lattice: needs at least two sites (no edges)");

    auto site = [&](int r, int c) { return r * spec.cols + c; };
    std::set<std::pair<int, int>> edge_set;
    for (int r = 0; r < spec.rows; ++r)
        for (int c = 0; c < spec.cols; ++c) {
            if (spec.cols > 1) {
                const int c2 = c + 1;
                if (c2 < spec.cols)
                    edge_set.insert(std::minmax(site(r, c), site(r, c2)));
                else if (spec.periodic && spec.cols > 2)
                    edge_set.insert(std::minmax(site(r, c), site(r, 0)));
            }
            if (spec.rows > 1) {
                const int r2 = r + 1;
                if (r2 < spec.rows)
                    edge_set.insert(std::minmax(site(r, c), site(r2, c)));
                else if (spec.periodic && spec.rows > 2)
                    edge_set.insert(std::minmax(site(r, c), site(0, c)));
            }
        }

    LatticeInstance lat;
    lat.rows = spec.rows;
    lat.cols = spec.cols;
    lat.edges.assign(edge_set.begin(), edge_set.end());
    lat.hopping.reserve(lat.edges.size());
    lat.interaction.reserve(lat.edges.size());
    Rng rng(spec.seed);
    for (size_t e = 0; e < lat.edges.size(); ++e) {
        double t = spec.t, v = spec.v;
        if (spec.t_disorder) {
            std::uniform_real_distribution<double> d(spec.t_disorder->first,
                                                     spec.t_disorder->second);
            t = d(rng);
        }
        if (spec.v_disorder) {
            std::uniform_real_distribution<double> d(spec.v_disorder->first,
                                                     spec.v_disorder->second);
            v = d(rng);
        }
        lat.hopping.push_back(t);
        lat.interaction.push_back(v);
    }
    return lat;
}

FermionSum build_spinless_hubbard(const LatticeInstance& lattice) {
    const uint32_t n = lattice.rows * lattice.cols;
    FermionSum h(n);
    for (size_t e = 0; e < lattice.edges.size(); ++e) {
        const auto [i, j] = lattice.edges[e];
        const double t = lattice.hopping[e], v = lattice.interaction[e];
        h.add_term(-t, {{static_cast<uint32_t>(i), true}, {static_cast<uint32_t>(j), false}});
        h.add_term(-t, {{static_cast<uint32_t>(j), true}, {static_cast<uint32_t>(i), false}});
        h.add_term(v, {{static_cast<uint32_t>(i), true},
                       {static_cast<uint32_t>(i), false},
                       {static_cast<uint32_t>(j), true},
                       {static_cast<uint32_t>(j), false}});
    }
    return h;
}

FermionSum build_spinless_hubbard(const LatticeSpec& spec) {
    return build_spinless_hubbard(realize_lattice(spec));
}

namespace {

std::pair<Preparation, uint64_t> occupation_preparation(uint64_t occupations,
                                                        uint32_t n_modes, Encoding e) {
    const uint64_t flips = encode_occupation(occupations, n_modes, e);
    return {Preparation::basis_flips(n_modes, flips), occupations};
}

}  // namespace

std::pair<Preparation, uint64_t> hartree_fock_preparation(const IntegralSet& integrals,
                                                          Encoding e) {
    const uint32_t n_modes = 2 * integrals.n_orbitals;
    const int eta = integrals.n_electrons;
    if (eta > static_cast<int>(n_modes))
        throw std::invalid_argument("hartree_fock_preparation: more electrons than modes");
    // Aufbau filling in the file's orbital order; FCIDUMP orbitals are
    // written sorted by orbital energy.
    uint64_t occ = 0;
    for (int i = 0; i < eta; ++i) occ |= 1ull << i;
    return occupation_preparation(occ, n_modes, e);
}

std::pair<Preparation, uint64_t> checkerboard_state(int rows, int cols, Encoding e) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("checkerboard_state: dimensions must be positive");
    uint64_t occ = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if ((r + c) % 2 == 0) occ |= 1ull << (r * cols + c);
    return occupation_preparation(occ, static_cast<uint32_t>(rows) * cols, e);
}

}  // namespace qgsa
