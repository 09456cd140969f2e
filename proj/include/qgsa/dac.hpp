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

#include <numbers>

#include "qgsa/models.hpp"
#include "qgsa/optimize.hpp"
#include "qgsa/pauli.hpp"
#include "qgsa/sac.hpp"
#include "qgsa/statevector.hpp"

namespace qgsa {

struct DacPlan {
    PauliSum f;
    PauliSum a;  // i [H, F], Hermitian
    size_t term_count = 0;
    double bound = 0.0;      // k 4^k |edges|
    size_t nh_times_n = 0;   // the basis-state W accounting, N_H * N
    int lightcone = 1;       // product-state preparations only
};

/// F = sum_j W (1 - Z_j)/2 W^-1: the prepared state W|0...0> is its zero
/// eigenvector. Basis flips toggle the sign of Z_j; local rotations replace
/// Z_j with the conjugated axis operator.
PauliSum build_F(const Preparation& w);

/// A = i [H, F] with Hermiticity asserted and term accounting recorded.
DacPlan build_A(const PauliSum& h, const PauliSum& f);

inline ThetaGrid dac_default_grid() {
    return {-std::numbers::pi / 2, std::numbers::pi / 2, 401};
}

/// E(theta) = <psi0| e^{i theta A} H e^{-i theta A} |psi0> minimized by grid
/// scan plus golden-section refinement. The exact method propagates the
/// state incrementally between adjacent grid points, so the scan costs one
/// short-time exponential per point instead of one full one.
SacResult dac_optimize(const PauliSum& h, const StateVector& psi0, const DacPlan& plan,
                       ExpMethod method = ExpMethod::kExact,
                       const ThetaGrid& grid = dac_default_grid(),
                       double refine_tol = 1e-8, int trotter_steps = 16);

}  // namespace qgsa
