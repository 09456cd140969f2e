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

#include "qgsa/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qgsa {

InteractionHypergraph hypergraph_of(const PauliSum& h) {
    std::vector<uint64_t> supports;
    for (const auto& [key, c] : h.terms()) {
        const uint64_t s = key.x | key.z;
        if (s != 0) supports.push_back(s);
    }
    if (supports.empty())
        throw std::invalid_argument("hypergraph_of: Hamiltonian has no non-identity term");
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    InteractionHypergraph g;
    g.n_vertices = h.n_qubits();
    g.edges = std::move(supports);
    g.degree.assign(g.n_vertices, 0);
    for (const uint64_t e : g.edges) {
        g.k = std::max(g.k, std::popcount(e));
        for (uint32_t v = 0; v < g.n_vertices; ++v)
            if ((e >> v) & 1) ++g.degree[v];
    }
    g.d = g.degree.empty() ? 0 : *std::max_element(g.degree.begin(), g.degree.end());
    return g;
}

bool is_triangle_free(const InteractionHypergraph& g) {
    const auto& e = g.edges;
    const size_t m = e.size();
    for (size_t r1 = 0; r1 < m; ++r1) {
        for (size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == r1) continue;
            const uint64_t shared = e[r1] & e[r2];  // candidate vertices kappa
            if (shared == 0) continue;
            for (size_t r0 = 0; r0 < m; ++r0) {
                if (r0 == r1 || r0 == r2) continue;
                uint64_t rest = shared;
                while (rest) {
                    const uint64_t kappa = rest & (~rest + 1);
                    rest ^= kappa;
                    const uint64_t a = (e[r0] & e[r1]) & ~kappa;  // candidates for i
                    const uint64_t b = (e[r0] & e[r2]) & ~kappa;  // candidates for j
                    if (a && b && std::popcount(a | b) >= 2) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace qgsa
