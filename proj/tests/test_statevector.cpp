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

#include <cstdio>
#include <filesystem>

#include "dense_oracle.hpp"
#include "qgsa/statevector.hpp"

using namespace qgsa;
namespace to = qgsa::testing;

namespace {

StateVector random_state(uint32_t n, Rng& rng) {
    return prepare(random_product_state(n, rng));
}

double vec_distance(const StateVector& psi, const to::Vec& v) {
    double d = 0;
    for (size_t i = 0; i < psi.dim(); ++i) d += std::norm(psi[i] - v(i));
    return std::sqrt(d);
}

}  // namespace

TEST_CASE("pauli sums apply like their dense matrices") {
    Rng rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const uint32_t n = 2 + trial % 3;
        const PauliSum h = to::random_local_hamiltonian(n, n, 8, rng);
        const StateVector psi = random_state(n, rng);
        const auto got = apply_pauli_sum(h, psi);
        const to::Vec expect = to::dense_matrix(h) * to::dense_state(psi);
        double d = 0;
        for (size_t i = 0; i < got.size(); ++i) d += std::norm(got[i] - expect(i));
        CHECK(std::sqrt(d) < 1e-12);
    }
}

TEST_CASE("expectation and variance match dense quadratic forms") {
    Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const uint32_t n = 2 + trial % 4;
        const PauliSum h = to::random_local_hamiltonian(n, 3, 8, rng);
        const StateVector psi = random_state(n, rng);
        const to::Vec v = to::dense_state(psi);
        const to::Mat m = to::dense_matrix(h);
        const double e = (v.adjoint() * m * v)(0).real();
        const double var = (v.adjoint() * m * m * v)(0).real() - e * e;
        CHECK(std::abs(expectation(h, psi) - e) < 1e-10);
        CHECK(std::abs(variance(h, psi) - std::max(0.0, var)) < 1e-8);
    }
}

TEST_CASE("eigenstate expectations") {
    PauliSum z(1), x(1);
    z.add(0, 1, 1.0);
    x.add(1, 0, 1.0);
    const StateVector zero = StateVector::basis_state(1, 0);
    CHECK(expectation(z, zero) == doctest::Approx(1.0));
    CHECK(variance(z, zero) == doctest::Approx(0.0));
    CHECK(expectation(x, zero) == doctest::Approx(0.0));
    CHECK(variance(x, zero) == doctest::Approx(1.0));
}

TEST_CASE("non-hermitian expectation is rejected") {
    PauliSum h(1);
    h.add(1, 0, complex{0, 1});
    CHECK_THROWS(expectation(h, StateVector::basis_state(1, 0)));
}

TEST_CASE("weight resolved overlap identities") {
    SUBCASE("single qubit examples") {
        PauliSum x(1), z(1);
        x.add(1, 0, 1.0);
        z.add(0, 1, 1.0);
        const StateVector zero = StateVector::basis_state(1, 0);
        const Preparation id = Preparation::identity(1);
        const auto qx = weight_resolved_overlap(x, zero, id);
        CHECK(qx[0] == doctest::Approx(0.0));
        CHECK(qx[1] == doctest::Approx(1.0));
        const auto qz = weight_resolved_overlap(z, zero, id);
        CHECK(qz[0] == doctest::Approx(1.0));
        CHECK(qz[1] == doctest::Approx(0.0));
    }
    SUBCASE("xx toy puts all weight at t=2") {
        PauliSum xx(2);
        xx.add(0b11, 0, 1.0);
        const auto q = weight_resolved_overlap(xx, StateVector::basis_state(2, 0),
                                               Preparation::identity(2));
        CHECK(q[0] == doctest::Approx(0.0));
        CHECK(q[1] == doctest::Approx(0.0));
        CHECK(q[2] == doctest::Approx(1.0));
    }
    SUBCASE("sum over t >= 1 equals the variance") {
        Rng rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            const uint32_t n = 2 + trial % 5;
            const PauliSum h = to::random_local_hamiltonian(n, 3, 10, rng);
            const ProductState v = random_product_state(n, rng);
            const Preparation w = Preparation::from_product_state(v);
            const StateVector psi = prepare(w);
            const auto q = weight_resolved_overlap(h, psi, w);
            double tail = 0;
            for (uint32_t t = 1; t <= n; ++t) tail += q[t];
            CHECK(std::abs(tail - variance(h, psi)) < 1e-10);
            const double e = expectation(h, psi);
            CHECK(std::abs(q[0] - e * e) < 1e-10);
        }
    }
}

TEST_CASE("commuting exponential equals the dense matrix exponential") {
    SUBCASE("single X at theta = pi/2 is iX") {
        PauliSum l(1);
        l.add(1, 0, 1.0);
        const StateVector out = apply_commuting_exponential(
            l, std::numbers::pi / 2, StateVector::basis_state(1, 0));
        CHECK(std::abs(out[0]) < 1e-12);
        CHECK(std::abs(out[1] - complex{0, 1}) < 1e-12);
    }
    SUBCASE("theta = 0 is the identity") {
        PauliSum l(2);
        l.add(0b11, 0, 1.0);
        Rng rng(4);
        const StateVector psi = random_state(2, rng);
        const StateVector out = apply_commuting_exponential(l, 0.0, psi);
        for (size_t i = 0; i < psi.dim(); ++i) CHECK(std::abs(out[i] - psi[i]) < 1e-14);
    }
    SUBCASE("two commuting terms on three qubits") {
        PauliSum l(3);
        l.add(PauliWord::from_string("XXI"), 1.0);
        l.add(PauliWord::from_string("IIZ"), -1.0);
        Rng rng(5);
        const StateVector psi = random_state(3, rng);
        const double theta = 0.37;
        const StateVector out = apply_commuting_exponential(l, theta, psi);
        const to::Vec expect =
            to::dense_exponential(l, complex{0, theta}) * to::dense_state(psi);
        CHECK(vec_distance(out, expect) < 1e-10);
    }
    SUBCASE("non-commuting input throws") {
        PauliSum l(1);
        l.add(1, 0, 1.0);
        l.add(0, 1, 1.0);
        CHECK_THROWS_AS(
            apply_commuting_exponential(l, 0.1, StateVector::basis_state(1, 0)),
            std::invalid_argument);
    }
    SUBCASE("non-unit coefficients throw") {
        PauliSum l(1);
        l.add(1, 0, 0.5);
        CHECK_THROWS_AS(
            apply_commuting_exponential(l, 0.1, StateVector::basis_state(1, 0)),
            std::invalid_argument);
    }
}

TEST_CASE("factored exponential matches the commuting expansion") {
    Rng rng(6);
    // K = (X+Y)/sqrt2 tensor (X+Y)/sqrt2 is a two-word-per-qubit involution.
    PauliSum k(2);
    k.add(0b11, 0b00, 0.5);
    k.add(0b11, 0b01, 0.5);
    k.add(0b11, 0b10, 0.5);
    k.add(0b11, 0b11, 0.5);
    const StateVector psi = random_state(2, rng);
    const double theta = 0.81;
    const StateVector out = apply_factored_exponential({{1.0, k}}, theta, psi);
    const to::Vec expect =
        to::dense_exponential(k, complex{0, theta}) * to::dense_state(psi);
    CHECK(vec_distance(out, expect) < 1e-10);
}

TEST_CASE("general exponential, exact method") {
    SUBCASE("closed form for Y rotation") {
        PauliSum y(1);
        y.add(1, 1, 1.0);
        const double theta = std::numbers::pi / 4;
        const StateVector out =
            apply_exponential(y, theta, StateVector::basis_state(1, 0));
        CHECK(std::abs(out[0] - std::cos(theta)) < 1e-12);
        CHECK(std::abs(out[1] - std::sin(theta)) < 1e-12);
    }
    SUBCASE("random generators match dense expm") {
        Rng rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const PauliSum a = to::random_local_hamiltonian(3, 3, 6, rng);
            const StateVector psi = random_state(3, rng);
            const double theta = 0.9;
            const StateVector out = apply_exponential(a, theta, psi);
            const to::Vec expect =
                to::dense_exponential(a, complex{0, -theta}) * to::dense_state(psi);
            CHECK(vec_distance(out, expect) < 1e-10);
        }
    }
    SUBCASE("unitarity and inverse") {
        Rng rng(8);
        const PauliSum a = to::random_local_hamiltonian(4, 3, 8, rng);
        const StateVector psi = random_state(4, rng);
        const StateVector fwd = apply_exponential(a, 1.3, psi);
        CHECK(fwd.norm() == doctest::Approx(1.0).epsilon(1e-10));
        const StateVector back = apply_exponential(a, -1.3, fwd);
        for (size_t i = 0; i < psi.dim(); ++i) CHECK(std::abs(back[i] - psi[i]) < 1e-10);
    }
}

TEST_CASE("trotter error scales as 1/r") {
    Rng rng(9);
    const PauliSum a = to::random_local_hamiltonian(3, 3, 6, rng);
    const StateVector psi = random_state(3, rng);
    const double theta = 0.7;
    const StateVector exact = apply_exponential(a, theta, psi);
    double prev = 0;
    for (int r : {8, 16, 32, 64}) {
        const StateVector approx =
            apply_exponential(a, theta, psi, ExpMethod::kTrotter, r);
        double d = 0;
        for (size_t i = 0; i < psi.dim(); ++i) d += std::norm(approx[i] - exact[i]);
        d = std::sqrt(d);
        if (prev > 0) {
            const double ratio = prev / d;
            CHECK(ratio > 1.6);
            CHECK(ratio < 2.4);
        }
        prev = d;
    }
}

TEST_CASE("preparation application and inversion") {
    Rng rng(10);
    const ProductState v = random_product_state(4, rng);
    const Preparation w = Preparation::from_product_state(v);
    StateVector psi = prepare(w);
    apply_preparation(w, psi, /*inverse=*/true);
    CHECK(std::abs(psi[0] - complex{1, 0}) < 1e-12);
    for (size_t i = 1; i < psi.dim(); ++i) CHECK(std::abs(psi[i]) < 1e-12);
}

TEST_CASE("capacity limit is enforced") {
    CHECK_THROWS(StateVector(30));
    CHECK_THROWS(StateVector(5, 4));
}

TEST_CASE("binary dump round trip") {
    Rng rng(11);
    const StateVector psi = random_state(3, rng);
    const auto path =
        std::filesystem::temp_directory_path() / "qgsa_test_statevector.bin";
    save_statevector(psi, path.string());
    const StateVector back = load_statevector(path.string());
    REQUIRE(back.n_qubits() == 3);
    for (size_t i = 0; i < psi.dim(); ++i)
        CHECK(std::abs(back[i] - psi[i]) < 1e-6);  // float32 payload
    std::filesystem::remove(path);
}
