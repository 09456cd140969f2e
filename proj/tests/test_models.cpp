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

#include <cmath>

#include "dense_oracle.hpp"
#include "qgsa/fermion.hpp"
#include "qgsa/models.hpp"
#include "qgsa/oracle.hpp"
#include "qgsa/statevector.hpp"

using namespace qgsa;
namespace to = qgsa::testing;

TEST_CASE("lattice edge lists") {
    SUBCASE("1x2 open has a single edge") {
        LatticeSpec spec;
        spec.rows = 1;
        spec.cols = 2;
        const LatticeInstance inst = realize_lattice(spec);
        CHECK(inst.edges == std::vector<std::pair<int, int>>{{0, 1}});
    }
    SUBCASE("2x2 periodic wrap edges deduplicate") {
        LatticeSpec spec;
        spec.rows = 2;
        spec.cols = 2;
        spec.periodic = true;
        CHECK(realize_lattice(spec).edges.size() == 4);
    }
    SUBCASE("4x4 periodic has 32 edges") {
        LatticeSpec spec;
        spec.rows = 4;
        spec.cols = 4;
        spec.periodic = true;
        CHECK(realize_lattice(spec).edges.size() == 32);
    }
    SUBCASE("1x1 lattice is rejected") {
        LatticeSpec spec;
        spec.rows = 1;
        spec.cols = 1;
        CHECK_THROWS_AS(realize_lattice(spec), std::invalid_argument);
    }
}

TEST_CASE("seeded disorder is reproducible and in range") {
    LatticeSpec spec;
    spec.rows = 3;
    spec.cols = 3;
    spec.t_disorder = {{0.5, 1.5}};
    spec.v_disorder = {{0.25, 0.75}};
    spec.seed = 42;
    const LatticeInstance a = realize_lattice(spec);
    const LatticeInstance b = realize_lattice(spec);
    CHECK(a.hopping == b.hopping);
    CHECK(a.interaction == b.interaction);
    for (double t : a.hopping) CHECK((t >= 0.5 && t <= 1.5));
    for (double v : a.interaction) CHECK((v >= 0.25 && v <= 0.75));
}

TEST_CASE("tiny hubbard ground energies") {
    LatticeSpec spec;
    spec.rows = 1;
    spec.cols = 2;
    spec.v = 0.0;
    const PauliSum h = jordan_wigner(build_spinless_hubbard(spec));
    CHECK(to::dense_ground_energy(h) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hubbard hamiltonians conserve particle number") {
    LatticeSpec spec;
    spec.rows = 2;
    spec.cols = 3;
    spec.v_disorder = {{0.5, 1.5}};
    spec.seed = 3;
    const PauliSum h = jordan_wigner(build_spinless_hubbard(spec));
    const PauliSum num = number_operator(6, Encoding::kJordanWigner);
    CHECK(commutator(h, num).empty());
}

TEST_CASE("random product states sit on the bloch sphere with uniform moments") {
    Rng rng(2024);
    double mz = 0, m2 = 0, m4 = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const ProductState v = random_product_state(1, rng);
        const auto& r = v.bloch[0];
        const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        if (i < 100) CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        mz += r[2];
        m2 += r[2] * r[2];
        m4 += r[2] * r[2] * r[2] * r[2];
    }
    CHECK(std::abs(mz / draws) < 0.01);
    CHECK(m2 / draws == doctest::Approx(1.0 / 3.0).epsilon(0.03));
    CHECK(m4 / draws == doctest::Approx(1.0 / 5.0).epsilon(0.05));
}

TEST_CASE("preparations produce the advertised states") {
    SUBCASE("basis flips") {
        const StateVector psi = prepare(Preparation::basis_flips(2, 0b01));
        CHECK(std::abs(psi[1] - complex{1, 0}) < 1e-15);
    }
    SUBCASE("+x bloch vector gives the plus state") {
        ProductState v;
        v.bloch = {{1.0, 0.0, 0.0}};
        const StateVector psi = prepare(v);
        CHECK(std::abs(psi[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(psi[1] - 1.0 / std::sqrt(2.0)) < 1e-12);
    }
    SUBCASE("random product preparations are normalized and match bloch vectors") {
        Rng rng(5);
        const ProductState v = random_product_state(3, rng);
        const StateVector psi = prepare(v);
        CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (uint32_t q = 0; q < 3; ++q) {
            PauliSum sx(3), sy(3), sz(3);
            sx.add(1ull << q, 0, 1.0);
            sy.add(1ull << q, 1ull << q, 1.0);
            sz.add(0, 1ull << q, 1.0);
            CHECK(expectation(sx, psi) == doctest::Approx(v.bloch[q][0]).epsilon(1e-10));
            CHECK(expectation(sy, psi) == doctest::Approx(v.bloch[q][1]).epsilon(1e-10));
            CHECK(expectation(sz, psi) == doctest::Approx(v.bloch[q][2]).epsilon(1e-10));
        }
    }
}

TEST_CASE("checkerboard occupations") {
    CHECK(checkerboard_state(1, 2, Encoding::kJordanWigner).second == 0b01);
    CHECK(checkerboard_state(2, 2, Encoding::kJordanWigner).second == 0b1001);
    CHECK(std::popcount(checkerboard_state(4, 4, Encoding::kJordanWigner).second) == 8);
}

TEST_CASE("hartree fock preparation rejects overfilled registers") {
    IntegralSet ints;
    ints.n_orbitals = 1;
    ints.n_electrons = 3;
    ints.one_body.assign(1, -1.0);
    ints.two_body.assign(1, 0.0);
    CHECK_THROWS_AS(hartree_fock_preparation(ints, Encoding::kJordanWigner),
                    std::invalid_argument);
}
