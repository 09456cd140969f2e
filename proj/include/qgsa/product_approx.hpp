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
#include <unordered_map>
#include <vector>

#include "qgsa/hypergraph.hpp"
#include "qgsa/models.hpp"
#include "qgsa/pauli.hpp"

namespace qgsa {

/// Per-hyperedge surface data of a term group h_R: the identity share w_R
/// and the coefficients u_R^a of the uniform-axis words prod_{i in R} sigma_a.
struct SurfaceCoefficients {
    std::vector<uint64_t> edges;              // parallel to hypergraph order
    std::vector<std::array<double, 3>> u;     // u_R^x, u_R^y, u_R^z per edge
    std::vector<double> w;                    // identity apportionment per edge
    double identity = 0.0;                    // global identity coefficient
};

SurfaceCoefficients surface_coefficients(const PauliSum& h,
                                         const InteractionHypergraph& g);

/// Exact product-state energy sum_w gamma_w prod_{i in supp(w)} r_i^{axis};
/// no statevector involved.
double product_energy(const PauliSum& h, const ProductState& v);

enum class OptMode { kMinimize, kMaximize };

struct Theorem1Report {
    ProductState best_state;
    double best_energy = 0.0;
    double baseline = 0.0;  // identity coefficient of H
    int trials = 0;
    std::vector<double> trial_energies;           // post-update, per trial
    std::vector<double> unimproved_energies;      // pre-update, per trial
    double f_strict = 0.0;                        // strictly k-local norm f(H)
    int d = 0;
    int k = 0;
    bool triangle_free = false;
};

/// Randomized product-state rounding: per trial draw a Bloch-uniform product
/// state, pick a vertex subset A with probability 1/2 per vertex, and for
/// each i in A replace r_i with the normalized axis-gradient over hyperedges
/// meeting A exactly at i. Minimization runs the update on -H with energies
/// sign-flipped back. Throws when trials < 1.
Theorem1Report improve_product_state(const PauliSum& h, int trials, Rng& rng,
                                     OptMode mode = OptMode::kMinimize);

}  // namespace qgsa
