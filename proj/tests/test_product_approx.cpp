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
#include "qgsa/product_approx.hpp"
#include "qgsa/statevector.hpp"

using namespace qgsa;
namespace to = qgsa::testing;

namespace {

PauliSum from_strings(std::initializer_list<std::pair<const char*, double>> words) {
    PauliSum h(static_cast<uint32_t>(std::string(words.begin()->first).size()));
    for (const auto& [w, c] : words) h.add(PauliWord::from_string(w), {c, 0});
    return h;
}

}  // namespace

TEST_CASE("surface coefficients read off uniform-axis words") {
    SUBCASE("a scaled XX term") {
        const PauliSum h = from_strings({{"XX", 2.0}});
        const auto sc = surface_coefficients(h, hypergraph_of(h));
        REQUIRE(sc.edges.size() == 1);
        CHECK(sc.u[0][0] == doctest::Approx(2.0));
        CHECK(sc.u[0][1] == doctest::Approx(0.0));
        CHECK(sc.u[0][2] == doctest::Approx(0.0));
    }
    SUBCASE("mixed support: only uniform words count") {
        const PauliSum h = from_strings({{"XX", 1.0}, {"YY", 1.0}, {"ZI", 0.5}});
        const auto sc = surface_coefficients(h, hypergraph_of(h));
        // Edges are {0} (from ZI) and {0,1}.
        REQUIRE(sc.edges.size() == 2);
        CHECK(sc.edges[1] == 0b11);
        CHECK(sc.u[1][0] == doctest::Approx(1.0));
        CHECK(sc.u[1][1] == doctest::Approx(1.0));
        CHECK(sc.u[1][2] == doctest::Approx(0.0));
        CHECK(sc.u[0][2] == doctest::Approx(0.5));  // ZI is uniform on {0}
    }
    SUBCASE("three-body ZZZ") {
        const PauliSum h = from_strings({{"ZZZ", 1.0}});
        const auto sc = surface_coefficients(h, hypergraph_of(h));
        CHECK(sc.u[0][2] == doctest::Approx(1.0));
    }
}

TEST_CASE("product energy matches the statevector expectation") {
    SUBCASE("closed forms") {
        ProductState up;
        up.bloch = {{0.0, 0.0, 1.0}};
        CHECK(product_energy(from_strings({{"Z", 1.0}}), up) == doctest::Approx(1.0));
        ProductState xx;
        xx.bloch = {{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
        CHECK(product_energy(from_strings({{"XX", 1.0}}), xx) == doctest::Approx(1.0));
    }
    SUBCASE("random instances") {
        Rng rng(21);
        for (int trial = 0; trial < 25; ++trial) {
            const PauliSum h = to::random_local_hamiltonian(4, 4, 10, rng);
            const ProductState v = random_product_state(4, rng);
            CHECK(std::abs(product_energy(h, v) - expectation(h, prepare(v))) < 1e-10);
        }
    }
}

TEST_CASE("single-qubit maximization aligns the bloch vector") {
    const PauliSum h = from_strings({{"Z", 1.0}});
    Rng rng(33);
    const Theorem1Report rep = improve_product_state(h, 64, rng, OptMode::kMaximize);
    // With 64 trials some trial had vertex 0 in A, which pins energy 1.
    CHECK(rep.best_energy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.best_state.bloch[0][2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("no uniform-axis terms means the update is a no-op") {
    const PauliSum h = from_strings({{"XY", 1.0}, {"YX", 1.0}});
    Rng rng(44);
    const Theorem1Report rep = improve_product_state(h, 32, rng, OptMode::kMaximize);
    for (int i = 0; i < rep.trials; ++i)
        CHECK(rep.trial_energies[i] == doctest::Approx(rep.unimproved_energies[i]));
}

TEST_CASE("minimize mirrors maximize on the negated hamiltonian") {
    Rng rng_a(55), rng_b(55);
    const PauliSum h = from_strings({{"ZZI", 0.7}, {"IZZ", -0.4}, {"XII", 0.2}});
    PauliSum neg = h;
    neg *= complex{-1.0, 0};
    const Theorem1Report mn = improve_product_state(h, 40, rng_a, OptMode::kMinimize);
    const Theorem1Report mx = improve_product_state(neg, 40, rng_b, OptMode::kMaximize);
    CHECK(mn.best_energy == doctest::Approx(-mx.best_energy).epsilon(1e-12));
    for (uint32_t q = 0; q < 3; ++q)
        for (int a = 0; a < 3; ++a)
            CHECK(mn.best_state.bloch[q][a] ==
                  doctest::Approx(mx.best_state.bloch[q][a]).epsilon(1e-12));
    for (int i = 0; i < 40; ++i)
        CHECK(mn.trial_energies[i] == doctest::Approx(-mx.trial_energies[i]));
}

TEST_CASE("per-trial update never hurts when all edge updates are independent") {
    // A perfect matching of ZZ edges: every updated vertex's edge has its
    // other endpoint outside A, so each update maximizes its own edge and
    // nothing else moves (the cross-term-free case of the general bound).
    PauliSum h(6);
    for (int i = 0; i < 6; i += 2) {
        PauliWord w{6, 0, (1ull << i) | (1ull << (i + 1))};
        h.add(w, {0.5 + 0.1 * i, 0});
    }
    Rng rng(66);
    const Theorem1Report rep = improve_product_state(h, 100, rng, OptMode::kMaximize);
    for (int i = 0; i < rep.trials; ++i)
        CHECK(rep.trial_energies[i] >= rep.unimproved_energies[i] - 1e-12);
}

TEST_CASE("updated vectors stay normalized") {
    Rng rng(77);
    const PauliSum h = to::random_local_hamiltonian(5, 3, 12, rng);
    const Theorem1Report rep = improve_product_state(h, 20, rng, OptMode::kMinimize);
    for (const auto& r : rep.best_state.bloch) {
        const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("improved mean beats the random mean on lattice zz instances") {
    PauliSum h(8);
    Rng rng(88);
    std::uniform_real_distribution<double> coef(0.5, 1.5);
    for (int i = 0; i < 7; ++i) {
        PauliWord w{8, 0, (1ull << i) | (1ull << (i + 1))};
        h.add(w, {coef(rng), 0});
    }
    const Theorem1Report rep = improve_product_state(h, 150, rng, OptMode::kMinimize);
    double mean_impr = 0, mean_rand = 0, var_impr = 0;
    for (double e : rep.trial_energies) mean_impr += e;
    for (double e : rep.unimproved_energies) mean_rand += e;
    mean_impr /= rep.trials;
    mean_rand /= rep.trials;
    for (double e : rep.trial_energies) var_impr += (e - mean_impr) * (e - mean_impr);
    const double se = std::sqrt(var_impr / rep.trials / rep.trials);
    CHECK(mean_impr < mean_rand - 3 * se);
    CHECK(mean_impr < rep.baseline);
    CHECK(rep.triangle_free);
}

TEST_CASE("trial count validation") {
    const PauliSum h = from_strings({{"Z", 1.0}});
    Rng rng(1);
    CHECK_THROWS_AS(improve_product_state(h, 0, rng), std::invalid_argument);
}
