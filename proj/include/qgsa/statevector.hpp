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
#include <string>
#include <vector>

#include "qgsa/models.hpp"
#include "qgsa/pauli.hpp"

namespace qgsa {

inline constexpr uint32_t kDefaultMaxQubits = 24;

/// Number of worker threads used by the amplitude kernels (default: one).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Dense 2^n-amplitude state, little-endian basis indexing (qubit 0 is the
/// least significant bit). Kept normalized by every public operation.
class StateVector {
  public:
    StateVector(uint32_t n_qubits, uint32_t max_qubits = kDefaultMaxQubits);

    uint32_t n_qubits() const { return n_; }
    size_t dim() const { return amps_.size(); }
    const std::vector<complex>& amps() const { return amps_; }
    std::vector<complex>& amps() { return amps_; }
    complex operator[](size_t i) const { return amps_[i]; }

    double norm() const;
    void normalize();

    static StateVector basis_state(uint32_t n_qubits, uint64_t index,
                                   uint32_t max_qubits = kDefaultMaxQubits);

  private:
    uint32_t n_;
    std::vector<complex> amps_;
};

StateVector prepare(const Preparation& w, uint32_t max_qubits = kDefaultMaxQubits);
StateVector prepare(const ProductState& v, uint32_t max_qubits = kDefaultMaxQubits);

/// In-place W (or W^-1) on a state.
void apply_preparation(const Preparation& w, StateVector& psi, bool inverse = false);

/// H|psi>, unnormalized.
std::vector<complex> apply_pauli_sum(const PauliSum& h, const StateVector& psi);

/// Re<psi|H|psi>; throws when the imaginary part exceeds 1e-8 (Hermiticity
/// violation) or H fails the term-level Hermiticity test.
double expectation(const PauliSum& h, const StateVector& psi);

/// <psi|H^2|psi> - <psi|H|psi>^2, clamped at zero.
double variance(const PauliSum& h, const StateVector& psi);

/// q_t = sum over basis states at Hamming distance t from |v> (in the W
/// frame) of |<basis|W^-1 H|v>|^2, for t = 0..n. q_0 is the squared mean and
/// sum_{t>=1} q_t the variance.
std::vector<double> weight_resolved_overlap(const PauliSum& h, const StateVector& v,
                                            const Preparation& w);

/// One Hermitian involution (K^2 = 1) with a +-1 sign, a factor of the
/// commuting exponential prod_s (cos(theta) + i c_s sin(theta) K_s).
struct InvolutionFactor {
    double sign = 1.0;
    PauliSum op;
};

StateVector apply_factored_exponential(const std::vector<InvolutionFactor>& factors,
                                       double theta, const StateVector& psi);

/// Exponential of a sum of single Pauli words with coefficients in {+1,-1};
/// words must pairwise commute (symplectic test) or this throws.
StateVector apply_commuting_exponential(const PauliSum& l, double theta,
                                        const StateVector& psi);

enum class ExpMethod { kExact, kTrotter };

/// e^{-i theta A}|psi>. Exact: scaling + truncated Taylor series per
/// substep (substep count ceil(|theta| * sum|coeff|), series cut when the
/// next term drops below 1e-14 of the accumulated vector). Trotter: r
/// repetitions of the first-order product in canonical word order.
StateVector apply_exponential(const PauliSum& a, double theta, const StateVector& psi,
                              ExpMethod method = ExpMethod::kExact,
                              int trotter_steps = 1);

/// Binary amplitude dump (magic "QGSA", version, n_qubits, endian flag,
/// then 2^n complex64 pairs); debugging aid for cross-implementation parity.
void save_statevector(const StateVector& psi, const std::string& path);
StateVector load_statevector(const std::string& path);

}  // namespace qgsa
