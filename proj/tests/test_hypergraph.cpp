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

#include <doctest.h>

#include "qgsa/hypergraph.hpp"
#include "qgsa/models.hpp"
#include "qgsa/fermion.hpp"

using namespace qgsa;

namespace {

PauliSum from_strings(std::initializer_list<const char*> words) {
    PauliSum h(static_cast<uint32_t>(std::string(*words.begin()).size()));
    for (const char* w : words) h.add(PauliWord::from_string(w), {1.0, 0});
    return h;
}

}  // namespace

TEST_CASE("hypergraph collects deduplicated supports") {
    const PauliSum h = from_strings({"XXI", "YYI", "IZZ", "ZII"});
    const InteractionHypergraph g = hypergraph_of(h);
    CHECK(g.n_vertices == 3);
    CHECK(g.edges == std::vector<uint64_t>{0b001, 0b011, 0b110});
    CHECK(g.k == 2);
    CHECK(g.degree[0] == 2);
    CHECK(g.degree[1] == 2);
    CHECK(g.d == 2);
}

TEST_CASE("identity-only input is rejected") {
    PauliSum h(2);
    h.add(0, 0, {1.0, 0});
    CHECK_THROWS_AS(hypergraph_of(h), std::invalid_argument);
}

TEST_CASE("path interactions are triangle free, loops are not") {
    const PauliSum path = from_strings({"ZZII", "IZZI", "IIZZ"});
    CHECK(is_triangle_free(hypergraph_of(path)));

    const PauliSum tri = from_strings({"ZZI", "IZZ", "ZIZ"});
    CHECK(!is_triangle_free(hypergraph_of(tri)));
}

TEST_CASE("open chains stay triangle free after encoding") {
    LatticeSpec spec;
    spec.rows = 1;
    spec.cols = 5;
    const PauliSum h = jordan_wigner(build_spinless_hubbard(spec));
    CHECK(is_triangle_free(hypergraph_of(h)));
}

TEST_CASE("single big edge has no triangles") {
    const PauliSum h = from_strings({"XXXX"});
    const InteractionHypergraph g = hypergraph_of(h);
    CHECK(g.k == 4);
    CHECK(is_triangle_free(g));
}
