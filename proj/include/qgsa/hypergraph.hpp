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
#include <vector>

#include "qgsa/pauli.hpp"

namespace qgsa {

/// Interaction hypergraph of a Hamiltonian: vertices are qubits, hyperedges
/// the deduplicated supports of its non-identity words. Words sharing a
/// support merge into one term group h_R.
struct InteractionHypergraph {
    uint32_t n_vertices = 0;
    std::vector<uint64_t> edges;  // sorted unique vertex-set bitmasks
    std::vector<int> degree;      // per vertex, number of containing edges
    int d = 0;                    // max degree
    int k = 0;                    // max hyperedge size (locality)
};

/// Throws std::invalid_argument when H has no non-identity term.
InteractionHypergraph hypergraph_of(const PauliSum& h);

/// True iff no pair of vertices i,j sharing an edge R0 has a third vertex
/// connected to i and j through two further edges, all three edges distinct.
bool is_triangle_free(const InteractionHypergraph& g);

}  // namespace qgsa
