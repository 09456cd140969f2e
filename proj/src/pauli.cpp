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

#include "qgsa/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgsa {

std::string PauliWord::to_string() const {
    std::string s(n_qubits, 'I');
    for (uint32_t q = 0; q < n_qubits; ++q) s[q] = pauli_at(q);
    return s;
}

PauliWord PauliWord::from_string(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("Pauli string longer than 64 qubits");
    PauliWord w{static_cast<uint32_t>(s.size()), 0, 0};
    for (size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
            case 'I': break;
            case 'X': w.x |= 1ull << q; break;
            case 'Y': w.x |= 1ull << q; w.z |= 1ull << q; break;
            case 'Z': w.z |= 1ull << q; break;
            default:
                throw std::invalid_argument("invalid Pauli character '" +
                                            std::string(1, s[q]) + "'");
        }
    }
    return w;
}

std::pair<complex, PauliWord> word_multiply(const PauliWord& a, const PauliWord& b) {
    if (a.n_qubits != b.n_qubits)
        throw std::invalid_argument("word_multiply: qubit count mismatch");
    PauliWord prod{a.n_qubits, a.x ^ b.x, a.z ^ b.z};
    // With W(x,z) = i^{|x&z|} X^x Z^z the product picks up i to the power of
    // the Y-count difference and a sign from commuting Z^{z_a} past X^{x_b}.
    int e = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) -
            std::popcount(prod.x & prod.z);
    e = ((e % 4) + 4) % 4;
    static const complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    complex phase = kPowI[e];
    if (std::popcount(a.z & b.x) & 1) phase = -phase;
    return {phase, prod};
}

void PauliSum::add(uint64_t x, uint64_t z, complex c) {
    Key k{x, z};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (std::abs(c) >= kPruneThreshold) terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

complex PauliSum::coefficient(uint64_t x, uint64_t z) const {
    auto it = terms_.find(Key{x, z});
    return it == terms_.end() ? complex{0, 0} : it->second;
}

void PauliSum::prune(double eps) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < eps)
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& [k, c] : terms_)
        if (std::abs(c.imag()) > tol) return false;
    return true;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
    if (n_ != other.n_) throw std::invalid_argument("PauliSum: qubit count mismatch");
    for (const auto& [k, c] : other.terms_) add(k.x, k.z, c);
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
    if (n_ != other.n_) throw std::invalid_argument("PauliSum: qubit count mismatch");
    for (const auto& [k, c] : other.terms_) add(k.x, k.z, -c);
    return *this;
}

PauliSum& PauliSum::operator*=(complex scalar) {
    for (auto& [k, c] : terms_) c *= scalar;
    prune();
    return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("PauliSum: qubit count mismatch");
    PauliSum out(a.n_qubits());
    for (const auto& [ka, ca] : a.terms()) {
        const PauliWord wa{a.n_qubits(), ka.x, ka.z};
        for (const auto& [kb, cb] : b.terms()) {
            auto [phase, w] = word_multiply(wa, PauliWord{b.n_qubits(), kb.x, kb.z});
            out.add(w.x, w.z, phase * ca * cb);
        }
    }
    return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("commutator: qubit count mismatch");
    PauliSum out(a.n_qubits());
    for (const auto& [ka, ca] : a.terms()) {
        const PauliWord wa{a.n_qubits(), ka.x, ka.z};
        for (const auto& [kb, cb] : b.terms()) {
            const PauliWord wb{b.n_qubits(), kb.x, kb.z};
            if (wa.commutes_with(wb)) continue;
            // For anticommuting words AB - BA = 2 AB.
            auto [phase, w] = word_multiply(wa, wb);
            out.add(w.x, w.z, 2.0 * phase * ca * cb);
        }
    }
    return out;
}

double identity_coefficient(const PauliSum& h) {
    return h.coefficient(0, 0).real();
}

double strict_local_norm(const PauliSum& h, int k) {
    if (k <= 0) throw std::invalid_argument("strict_local_norm: k must be positive");
    double f = 0.0;
    for (const auto& [key, c] : h.terms()) {
        if (std::popcount(key.x | key.z) == k) f += std::norm(c);
    }
    return f;
}

std::vector<std::pair<PauliWord, complex>> PauliSum::sorted_terms() const {
    std::vector<std::pair<PauliWord, complex>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(PauliWord{n_, k.x, k.z}, c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.x != b.first.x ? a.first.x < b.first.x : a.first.z < b.first.z;
    });
    return out;
}

double PauliSum::coefficient_norm1() const {
    double s = 0.0;
    for (const auto& [k, c] : terms_) s += std::abs(c);
    return s;
}

PauliSum parse_pauli_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::tuple<double, double, std::string>> records;
    size_t n = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        double re, im;
        std::string word;
        if (!(ls >> re)) continue;  // blank
        if (!(ls >> im >> word))
            throw std::runtime_error("pauli text: malformed line " +
                                     std::to_string(line_no));
        if (n == 0) n = word.size();
        if (word.size() != n)
            throw std::runtime_error("pauli text: inconsistent string length at line " +
                                     std::to_string(line_no));
        records.emplace_back(re, im, word);
    }
    if (records.empty()) throw std::runtime_error("pauli text: no terms found");
    PauliSum sum(static_cast<uint32_t>(n));
    for (const auto& [re, im, word] : records)
        sum.add(PauliWord::from_string(word), complex{re, im});
    return sum;
}

std::string format_pauli_text(const PauliSum& h) {
    std::ostringstream out;
    out << "# n_qubits=" << h.n_qubits() << " terms=" << h.size() << "\n";
    out.precision(17);
    for (const auto& [w, c] : h.sorted_terms())
        out << c.real() << " " << c.imag() << " " << w.to_string() << "\n";
    return out.str();
}

PauliSum load_pauli_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pauli_text(buf.str());
}

void save_pauli_file(const PauliSum& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << format_pauli_text(h);
}

}  // namespace qgsa
