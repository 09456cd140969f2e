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

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qgsa {

using complex = std::complex<double>;

/// Coefficients with magnitude below this are dropped after every
/// sum/product, so commutator chains do not accumulate exact-zero clutter.
inline constexpr double kPruneThreshold = 1e-12;

/// An n-qubit Pauli word in symplectic form. Qubit i carries an X component
/// iff bit i of `x` is set and a Z component iff bit i of `z` is set; both
/// set means Y, neither means identity. The represented matrix is
/// i^{popcount(x&z)} * X^x * Z^z, which is Hermitian and involutive.
struct PauliWord {
    uint32_t n_qubits = 0;
    uint64_t x = 0;
    uint64_t z = 0;

    uint64_t support_mask() const { return x | z; }
    int weight() const { return std::popcount(x | z); }
    bool is_identity() const { return (x | z) == 0; }

    /// Two words commute iff their symplectic product is even.
    bool commutes_with(const PauliWord& other) const {
        return ((std::popcount(x & other.z) + std::popcount(z & other.x)) & 1) == 0;
    }

    char pauli_at(uint32_t qubit) const {
        const bool xb = (x >> qubit) & 1, zb = (z >> qubit) & 1;
        return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }

    std::string to_string() const;
    static PauliWord from_string(const std::string& s);

    bool operator==(const PauliWord& other) const {
        return x == other.x && z == other.z;
    }
};

/// Matrix product a*b as (phase, word); phase is one of {+1,-1,+i,-i} and
/// the word masks are the XOR of the inputs. Throws std::invalid_argument
/// on a size mismatch.
std::pair<complex, PauliWord> word_multiply(const PauliWord& a, const PauliWord& b);

/// A complex-weighted collection of Pauli words on a fixed register.
/// Immutable by convention once a Hamiltonian has been built.
class PauliSum {
  public:
    struct Key {
        uint64_t x, z;
        bool operator==(const Key& o) const { return x == o.x && z == o.z; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            uint64_t h = k.x * 0x9e3779b97f4a7c15ull;
            h ^= k.z + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return static_cast<size_t>(h);
        }
    };
    using TermMap = std::unordered_map<Key, complex, KeyHash>;

    PauliSum() = default;
    explicit PauliSum(uint32_t n_qubits) : n_(n_qubits) {}

    uint32_t n_qubits() const { return n_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulates c onto the coefficient of (x,z); erases the entry if the
    /// result falls under the prune threshold.
    void add(uint64_t x, uint64_t z, complex c);
    void add(const PauliWord& w, complex c) { add(w.x, w.z, c); }

    complex coefficient(uint64_t x, uint64_t z) const;
    PauliWord word_of(const Key& k) const { return PauliWord{n_, k.x, k.z}; }

    void prune(double eps = kPruneThreshold);
    bool is_hermitian(double tol = 1e-10) const;

    PauliSum& operator+=(const PauliSum& other);
    PauliSum& operator-=(const PauliSum& other);
    PauliSum& operator*=(complex scalar);
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, complex s) { return a *= s; }
    friend PauliSum operator*(complex s, PauliSum a) { return a *= s; }

    /// Full distributive product; prunes the result.
    friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

    /// Terms in a deterministic order (lexicographic by x mask, then z mask).
    std::vector<std::pair<PauliWord, complex>> sorted_terms() const;

    /// Sum of |coefficient| over all stored words.
    double coefficient_norm1() const;

  private:
    uint32_t n_ = 0;
    TermMap terms_;
};

/// AB - BA with commuting word pairs skipped. Throws on size mismatch.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Coefficient of the all-identity word; equals Tr(H)/2^n, the energy of
/// the maximally mixed state.
double identity_coefficient(const PauliSum& h);

/// Sum of squared coefficients over words of weight exactly k.
double strict_local_norm(const PauliSum& h, int k);

// --- Pauli-Hamiltonian text format -----------------------------------------
//
// One term per line: "<re> <im> <string>" with <string> over {I,X,Y,Z},
// character j of the string addressing qubit j. '#' starts a comment and
// blank lines are ignored.

PauliSum parse_pauli_text(const std::string& text);
std::string format_pauli_text(const PauliSum& h);
PauliSum load_pauli_file(const std::string& path);
void save_pauli_file(const PauliSum& h, const std::string& path);

}  // namespace qgsa
