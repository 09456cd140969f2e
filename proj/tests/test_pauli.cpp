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

#include "dense_oracle.hpp"
#include "qgsa/pauli.hpp"

using namespace qgsa;
namespace to = qgsa::testing;

namespace {

PauliWord word(const std::string& s) { return PauliWord::from_string(s); }

}  // namespace

TEST_CASE("word string round trip and component queries") {
    const PauliWord w = word("XIYZ");
    CHECK(w.n_qubits == 4);
    CHECK(w.pauli_at(0) == 'X');
    CHECK(w.pauli_at(1) == 'I');
    CHECK(w.pauli_at(2) == 'Y');
    CHECK(w.pauli_at(3) == 'Z');
    CHECK(w.weight() == 3);
    CHECK(w.to_string() == "XIYZ");
    CHECK(word("II").is_identity());
    CHECK_THROWS_AS((void)word("XA"), std::invalid_argument);
}

TEST_CASE("dense form of a word matches its defining phase convention") {
    // i^{|x&z|} X^x Z^z must equal the literal Kronecker matrix.
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const PauliSum h = to::random_local_hamiltonian(3, 3, 1, rng);
        const auto [w, c] = h.sorted_terms()[0];
        const to::Mat lhs = to::dense_matrix(h);
        const to::Mat rhs = c * to::dense_word(w);
        CHECK((lhs - rhs).norm() == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("word products match dense matrix products") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const PauliSum ha = to::random_local_hamiltonian(4, 4, 1, rng);
        const PauliSum hb = to::random_local_hamiltonian(4, 4, 1, rng);
        const PauliWord a = ha.sorted_terms()[0].first;
        const PauliWord b = hb.sorted_terms()[0].first;
        const auto [phase, p] = word_multiply(a, b);
        const to::Mat expect = to::dense_word(a) * to::dense_word(b);
        CHECK((expect - phase * to::dense_word(p)).norm() ==
              doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("commutes_with agrees with matrix commutators") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const PauliWord a =
            to::random_local_hamiltonian(3, 3, 1, rng).sorted_terms()[0].first;
        const PauliWord b =
            to::random_local_hamiltonian(3, 3, 1, rng).sorted_terms()[0].first;
        const to::Mat ma = to::dense_word(a), mb = to::dense_word(b);
        const double comm_norm = (ma * mb - mb * ma).norm();
        CHECK(a.commutes_with(b) == (comm_norm < 1e-12));
    }
}

TEST_CASE("sum product and commutator match dense oracles") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const PauliSum a = to::random_local_hamiltonian(4, 3, 6, rng);
        const PauliSum b = to::random_local_hamiltonian(4, 3, 6, rng);
        const to::Mat ma = to::dense_matrix(a), mb = to::dense_matrix(b);
        CHECK((to::dense_matrix(a * b) - ma * mb).norm() ==
              doctest::Approx(0.0).epsilon(1e-12));
        CHECK((to::dense_matrix(commutator(a, b)) - (ma * mb - mb * ma)).norm() ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("accumulation prunes cancelled terms") {
    PauliSum s(2);
    s.add(word("XY"), {0.5, 0});
    s.add(word("XY"), {-0.5, 0});
    CHECK(s.empty());
    s.add(word("ZI"), {1e-15, 0});
    CHECK(s.empty());
}

TEST_CASE("identity coefficient and strict local norm") {
    PauliSum h(3);
    h.add(word("III"), {0.25, 0});
    h.add(word("ZZI"), {2.0, 0});
    h.add(word("XII"), {-1.0, 0});
    h.add(word("XYZ"), {0.5, 0});
    CHECK(identity_coefficient(h) == doctest::Approx(0.25));
    CHECK(strict_local_norm(h, 2) == doctest::Approx(4.0));
    CHECK(strict_local_norm(h, 1) == doctest::Approx(1.0));
    CHECK(strict_local_norm(h, 3) == doctest::Approx(0.25));
    CHECK_THROWS_AS(strict_local_norm(h, 0), std::invalid_argument);
}

TEST_CASE("hermiticity detection") {
    PauliSum h(1);
    h.add(word("X"), {1.0, 0});
    CHECK(h.is_hermitian());
    h.add(word("Y"), {0, 0.3});
    CHECK(!h.is_hermitian());
}

TEST_CASE("text format round trip preserves every term") {
    Rng rng(5);
    const PauliSum h = to::random_local_hamiltonian(5, 3, 12, rng);
    const PauliSum back = parse_pauli_text(format_pauli_text(h));
    CHECK(back.size() == h.size());
    for (const auto& [w, c] : h.sorted_terms())
        CHECK(std::abs(back.coefficient(w.x, w.z) - c) < 1e-15);
}

TEST_CASE("text parser handles comments blanks and errors") {
    const PauliSum h = parse_pauli_text("# header\n\n1.5 0.0 XZ\n-1 0 IY # tail\n");
    CHECK(h.size() == 2);
    CHECK(h.coefficient(word("XZ").x, word("XZ").z) == complex{1.5, 0});
    CHECK_THROWS(parse_pauli_text("1.0 0.0 XZ\n1.0 0.0 XYZ\n"));
    CHECK_THROWS(parse_pauli_text("# nothing\n"));
}

TEST_CASE("sorted terms are deterministic and mask ordered") {
    PauliSum h(2);
    h.add(word("ZZ"), {1, 0});
    h.add(word("XX"), {1, 0});
    h.add(word("IZ"), {1, 0});
    const auto terms = h.sorted_terms();
    for (size_t i = 1; i < terms.size(); ++i) {
        const bool ordered = terms[i - 1].first.x < terms[i].first.x ||
                             (terms[i - 1].first.x == terms[i].first.x &&
                              terms[i - 1].first.z < terms[i].first.z);
        CHECK(ordered);
    }
}
