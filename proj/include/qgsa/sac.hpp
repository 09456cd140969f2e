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
#include <vector>

#include "qgsa/hypergraph.hpp"
#include "qgsa/models.hpp"
#include "qgsa/optimize.hpp"
#include "qgsa/pauli.hpp"
#include "qgsa/statevector.hpp"

namespace qgsa {

/// cos(pi/2t) X + sin(pi/2t) Y on one qubit; throws for t < 1.
PauliSum single_qubit_P(int t);

/// Deduplicated union over hyperedges of their size-t vertex subsets, as
/// bitmasks in ascending order. Throws when t is outside [1, g.k].
std::vector<uint64_t> enumerate_S(const InteractionHypergraph& g, int t);

enum class SacBranch { kP, kX, kAuto };

struct SacPlan {
    int t_hat = 0;
    SacBranch branch = SacBranch::kP;
    std::vector<double> q;              // weight-resolved overlaps q_0..q_n
    std::vector<uint64_t> subsets;      // enumerated S, ascending masks
    std::vector<uint64_t> retained;     // subsets surviving the beta dead-zone
                                        // and the diagonal-gap outlier cut
    std::vector<complex> beta;          // per retained subset
    std::vector<double> sign;           // c_s per retained subset
    std::vector<InvolutionFactor> factors;  // c_s and the conjugated P_s
    PauliSum l;                         // sum_s c_s W P_s W^-1
    double beta_total = 0.0;            // sum |beta_s| over retained subsets
    double theta_init = 0.0;
    size_t evaluations = 0;             // containment-accounted (s, word) pairs
    double bound = 0.0;                 // C(k,t) |edges| 4^k
    int k = 0;
    int d = 0;
};

struct SacResult {
    double theta_star = 0.0;
    double e_star = 0.0;
    double e_ref = 0.0;  // energy of the unrotated input state
    double variance = 0.0;
    std::vector<std::pair<double, double>> curve;
    std::optional<double> fraction;  // correlation fraction when exact known
};

/// Builds the plan for a fixed branch: weight choice from the q_t argmax
/// (ties to the smaller t), generator construction, commutator amplitudes
/// beta_s, signs, and the complexity counters. Subsets whose diagonal gap
/// exceeds ten times the median gap are dropped; their unit-magnitude terms
/// would otherwise pin theta* near zero. `force_t` overrides the weight
/// choice (used for t-sweeps); kAuto is not accepted here.
SacPlan sac_build(const PauliSum& h, const Preparation& w,
                  SacBranch branch = SacBranch::kP, int force_t = 0);

/// Grid scan of E(theta) = <v| U+ H U |v>, U = prod_s (cos + i c_s sin K_s),
/// then golden-section refinement to |interval| < refine_tol.
SacResult sac_optimize(const PauliSum& h, const Preparation& w, const SacPlan& plan,
                       const ThetaGrid& grid = {}, double refine_tol = 1e-8);

/// Resolves the branch choice: for real-coefficient H with a basis-flip W
/// the P branch is used alone; otherwise both branches are optimized and the
/// lower energy kept.
std::pair<SacPlan, SacResult> sac_auto(const PauliSum& h, const Preparation& w,
                                       const ThetaGrid& grid = {},
                                       double refine_tol = 1e-8);

struct ComplexityRecord {
    size_t s_count = 0;
    size_t evaluations = 0;
    double bound = 0.0;
};

ComplexityRecord complexity_report(const SacPlan& plan, const InteractionHypergraph& g);

/// Binomial coefficient as a double (the complexity bounds outgrow 64-bit
/// integers at chemistry localities).
double binomial(int n, int r);

}  // namespace qgsa
