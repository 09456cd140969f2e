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

#include <optional>

#include "qgsa/pauli.hpp"
#include "qgsa/statevector.hpp"

namespace qgsa {

enum class SpectrumMethod { kDense, kIterative };

struct SpectrumResult {
    double energy = 0.0;
    SpectrumMethod method = SpectrumMethod::kDense;
    double residual = 0.0;
    int iterations = 0;  // matvec count for the iterative path
};

struct LanczosOptions {
    int max_krylov = 80;       // vectors held per cycle
    int max_restarts = 60;
    double tolerance = 1e-8;   // residual norm target
    uint64_t seed = 7;         // deterministic start when no guess given
};

/// Lowest eigenvalue. Dense materializes the 2^n matrix (n <= 14);
/// iterative runs restarted Lanczos with full reorthogonalization within a
/// cycle (n <= 24), converged when ||Hx - Ex|| < tolerance. An optional
/// guess state seeds the Krylov space (a good reference state cuts the
/// iteration count substantially). When the guess lies in one symmetry
/// sector of H, the Krylov space stays there and the result is that
/// sector's minimum, e.g. the fixed-particle-number ground energy from a
/// reference determinant.
SpectrumResult ground_energy(const PauliSum& h, SpectrumMethod method,
                             const LanczosOptions& opts = {},
                             const StateVector* guess = nullptr);

/// (E_ref - E) / (E_ref - E_exact); throws unless E_ref > E_exact.
double correlation_fraction(double e_ref, double e, double e_exact);

}  // namespace qgsa
