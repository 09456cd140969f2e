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

#include "qgsa/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgsa {

namespace {
constexpr double kZeroIntegral = 1e-14;
}

Encoding encoding_from_string(const std::string& name) {
    if (name == "jw") return Encoding::kJordanWigner;
    if (name == "bk") return Encoding::kBravyiKitaev;
    throw std::invalid_argument("unknown encoding '" + name + "' (expected jw|bk)");
}

std::string to_string(Encoding e) {
    return e == Encoding::kJordanWigner ? "jw" : "bk";
}

void IntegralSet::set_h(int p, int q, double v) {
    one_body[p * n_orbitals + q] = v;
    one_body[q * n_orbitals + p] = v;
}

void IntegralSet::set_eri(int p, int q, int r, int s, double v) {
    const int n = n_orbitals;
    auto at = [&](int a, int b, int c, int d) -> double& {
        return two_body[((a * n + b) * n + c) * n + d];
    };
    at(p, q, r, s) = v;
    at(q, p, r, s) = v;
    at(p, q, s, r) = v;
    at(q, p, s, r) = v;
    at(r, s, p, q) = v;
    at(s, r, p, q) = v;
    at(r, s, q, p) = v;
    at(s, r, q, p) = v;
}

IntegralSet parse_fcidump(const std::string& text) {
    std::istringstream in(text);
    std::string line, header;
    // Collect the namelist header up to "/" or "&END".
    bool header_done = false;
    std::streampos body_start = 0;
    while (std::getline(in, line)) {
        header += line + "\n";
        if (line.find('/') != std::string::npos ||
            line.find("&END") != std::string::npos) {
            header_done = true;
            break;
        }
    }
    if (!header_done) throw std::runtime_error("fcidump: unterminated header");

    auto header_int = [&](const std::string& key) -> long {
        const auto pos = header.find(key + "=");
        if (pos == std::string::npos)
            throw std::runtime_error("fcidump: missing " + key + " in header");
        return std::strtol(header.c_str() + pos + key.size() + 1, nullptr, 10);
    };

    IntegralSet integrals;
    integrals.n_orbitals = static_cast<int>(header_int("NORB"));
    integrals.n_electrons = static_cast<int>(header_int("NELEC"));
    integrals.ms2 = header.find("MS2=") != std::string::npos
                        ? static_cast<int>(header_int("MS2"))
                        : 0;
    if (integrals.n_orbitals <= 0)
        throw std::runtime_error("fcidump: NORB must be positive");
    if (integrals.n_electrons < 0 ||
        integrals.n_electrons > 2 * integrals.n_orbitals)
        throw std::runtime_error("fcidump: NELEC out of range");
    const int n = integrals.n_orbitals;
    integrals.one_body.assign(static_cast<size_t>(n) * n, 0.0);
    integrals.two_body.assign(static_cast<size_t>(n) * n * n * n, 0.0);

    int line_no = 1;
    for (char c : header)
        if (c == '\n') ++line_no;
    --line_no;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        double v;
        int i, a, j, b;
        if (!(ls >> v)) continue;  // blank line
        if (!(ls >> i >> a >> j >> b))
            throw std::runtime_error("fcidump: malformed record at line " +
                                     std::to_string(line_no));
        auto check = [&](int idx) {
            if (idx < 0 || idx > n)
                throw std::runtime_error("fcidump: index out of range at line " +
                                         std::to_string(line_no));
        };
        check(i), check(a), check(j), check(b);
        if (i == 0 && a == 0 && j == 0 && b == 0) {
            integrals.core_energy = v;
        } else if (j == 0 && b == 0) {
            if (i == 0 || a == 0)
                throw std::runtime_error("fcidump: bad one-body record at line " +
                                         std::to_string(line_no));
            integrals.set_h(i - 1, a - 1, v);
        } else {
            if (i == 0 || a == 0 || j == 0 || b == 0)
                throw std::runtime_error("fcidump: bad two-body record at line " +
                                         std::to_string(line_no));
            integrals.set_eri(i - 1, a - 1, j - 1, b - 1, v);
        }
    }
    return integrals;
}

IntegralSet load_fcidump_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fcidump(buf.str());
}

std::string emit_fcidump(const IntegralSet& integrals) {
    std::ostringstream out;
    out.precision(17);
    out << "&FCI NORB=" << integrals.n_orbitals
        << ",NELEC=" << integrals.n_electrons << ",MS2=" << integrals.ms2
        << ",\n&END\n";
    const int n = integrals.n_orbitals;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r <= p; ++r)
                for (int s = 0; s <= (r == p ? q : r); ++s) {
                    const double v = integrals.eri(p, q, r, s);
                    if (std::abs(v) > kZeroIntegral)
                        out << v << " " << p + 1 << " " << q + 1 << " "
                            << r + 1 << " " << s + 1 << "\n";
                }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q) {
            const double v = integrals.h(p, q);
            if (std::abs(v) > kZeroIntegral)
                out << v << " " << p + 1 << " " << q + 1 << " 0 0\n";
        }
    out << integrals.core_energy << " 0 0 0 0\n";
    return out.str();
}

// --- FermionSum -------------------------------------------------------------

namespace {

std::string encode_ops(const std::vector<Ladder>& ops) {
    std::string key(ops.size(), '\0');
    for (size_t i = 0; i < ops.size(); ++i)
        key[i] = static_cast<char>((ops[i].mode << 1) | (ops[i].dagger ? 1 : 0));
    return key;
}

std::vector<Ladder> decode_ops(const std::string& key) {
    std::vector<Ladder> ops(key.size());
    for (size_t i = 0; i < key.size(); ++i) {
        const auto b = static_cast<uint8_t>(key[i]);
        ops[i] = Ladder{static_cast<uint32_t>(b >> 1), (b & 1) != 0};
    }
    return ops;
}

}  // namespace

void FermionSum::add_term(complex coef, std::vector<Ladder> ops) {
    for (const Ladder& op : ops)
        if (op.mode >= n_) throw std::invalid_argument("FermionSum: mode out of range");

    // Iterative reordering into normal form: creation operators first,
    // strictly ascending mode indices within each group.
    std::vector<std::pair<complex, std::vector<Ladder>>> work;
    work.emplace_back(coef, std::move(ops));
    while (!work.empty()) {
        auto [c, t] = std::move(work.back());
        work.pop_back();
        bool reduced = false;
        for (size_t p = 0; p + 1 < t.size(); ++p) {
            const Ladder a = t[p], b = t[p + 1];
            if (!a.dagger && b.dagger) {
                // a_i a+_j = delta_ij - a+_j a_i
                auto swapped = t;
                std::swap(swapped[p], swapped[p + 1]);
                work.emplace_back(-c, std::move(swapped));
                if (a.mode == b.mode) {
                    auto contracted = t;
                    contracted.erase(contracted.begin() + p, contracted.begin() + p + 2);
                    work.emplace_back(c, std::move(contracted));
                }
                reduced = true;
                break;
            }
            if (a.dagger == b.dagger) {
                if (a.mode == b.mode) {
                    reduced = true;  // nilpotent; term vanishes
                    break;
                }
                if (a.mode > b.mode) {
                    auto swapped = t;
                    std::swap(swapped[p], swapped[p + 1]);
                    work.emplace_back(-c, std::move(swapped));
                    reduced = true;
                    break;
                }
            }
        }
        if (reduced) continue;
        const std::string key = encode_ops(t);
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) it->second += c;
        if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
    }
}

std::vector<std::pair<complex, std::vector<Ladder>>> FermionSum::terms() const {
    std::vector<std::pair<complex, std::vector<Ladder>>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(c, decode_ops(key));
    return out;
}

FermionSum FermionSum::adjoint() const {
    FermionSum out(n_);
    for (const auto& [key, c] : terms_) {
        auto ops = decode_ops(key);
        std::reverse(ops.begin(), ops.end());
        for (Ladder& op : ops) op.dagger = !op.dagger;
        out.add_term(std::conj(c), std::move(ops));
    }
    return out;
}

FermionSum build_fermion_hamiltonian(const IntegralSet& integrals) {
    const int n = integrals.n_orbitals;
    FermionSum h(2 * n);
    if (std::abs(integrals.core_energy) > kZeroIntegral)
        h.add_term(integrals.core_energy, {});
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const double t = integrals.h(p, q);
            if (std::abs(t) <= kZeroIntegral) continue;
            for (int spin = 0; spin < 2; ++spin)
                h.add_term(t, {{spin_orbital(p, spin), true},
                               {spin_orbital(q, spin), false}});
        }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    const double u = 0.5 * integrals.eri(p, q, r, s);
                    if (std::abs(u) <= kZeroIntegral) continue;
                    for (int s1 = 0; s1 < 2; ++s1)
                        for (int s2 = 0; s2 < 2; ++s2)
                            h.add_term(u, {{spin_orbital(p, s1), true},
                                           {spin_orbital(r, s2), true},
                                           {spin_orbital(s, s2), false},
                                           {spin_orbital(q, s1), false}});
                }
    return h;
}

// --- Fermion-to-qubit encodings ---------------------------------------------

namespace {

// Fenwick index sets for the Bravyi-Kitaev encoding, pad-free for any N.
// Internally 1-based: node i stores the occupation parity of the mode range
// (i - lowbit(i), i], and qubit i-1 holds that parity.
struct FenwickSets {
    uint64_t update;     // qubits whose stored parity includes mode j, above j
    uint64_t parity;     // qubits giving the parity of modes < j
    uint64_t remainder;  // parity \ flip (children of node j+1)
};

FenwickSets fenwick_sets(uint32_t j, uint32_t n_modes) {
    FenwickSets s{0, 0, 0};
    const uint64_t n = n_modes;
    const uint64_t p = j + 1;
    for (uint64_t i = p + (p & ~p + 1); i <= n; i += i & (~i + 1))
        s.update |= 1ull << (i - 1);
    for (uint64_t i = j; i > 0; i -= i & (~i + 1)) s.parity |= 1ull << (i - 1);
    uint64_t flip = 0;
    const uint64_t low = p - (p & (~p + 1));
    for (uint64_t i = j; i > low; i -= i & (~i + 1)) flip |= 1ull << (i - 1);
    s.remainder = s.parity & ~flip;
    return s;
}

}  // namespace

PauliSum ladder_image(uint32_t mode, bool dagger, uint32_t n_modes, Encoding e) {
    PauliSum out(n_modes);
    const uint64_t bit = 1ull << mode;
    uint64_t even_x, even_z, odd_x, odd_z;
    if (e == Encoding::kJordanWigner) {
        const uint64_t lower = bit - 1;
        even_x = bit, even_z = lower;        // X_j Z_{<j}
        odd_x = bit, odd_z = lower | bit;    // Y_j Z_{<j}
    } else {
        const FenwickSets s = fenwick_sets(mode, n_modes);
        even_x = s.update | bit, even_z = s.parity;
        odd_x = s.update | bit, odd_z = s.remainder | bit;
    }
    // a_j = (gamma_even + i gamma_odd)/2; the dagger flips the sign of the
    // imaginary half.
    out.add(even_x, even_z, complex{0.5, 0.0});
    out.add(odd_x, odd_z, dagger ? complex{0.0, -0.5} : complex{0.0, 0.5});
    return out;
}

PauliSum encode(const FermionSum& f, Encoding e) {
    const uint32_t n = f.n_modes();
    PauliSum out(n == 0 ? 1 : n);
    for (const auto& [coef, ops] : f.terms()) {
        PauliSum term(out.n_qubits());
        term.add(0, 0, coef);
        for (const Ladder& op : ops)
            term = term * ladder_image(op.mode, op.dagger, out.n_qubits(), e);
        out += term;
    }
    out.prune();
    return out;
}

PauliSum jordan_wigner(const FermionSum& f) { return encode(f, Encoding::kJordanWigner); }
PauliSum bravyi_kitaev(const FermionSum& f) { return encode(f, Encoding::kBravyiKitaev); }

uint64_t encode_occupation(uint64_t occupations, uint32_t n_modes, Encoding e) {
    if (e == Encoding::kJordanWigner) return occupations;
    uint64_t bits = 0;
    for (uint64_t i = 1; i <= n_modes; ++i) {
        const uint64_t low = i - (i & (~i + 1));
        const uint64_t range = ((1ull << i) - 1) & ~((1ull << low) - 1);
        if (std::popcount(occupations & range) & 1) bits |= 1ull << (i - 1);
    }
    return bits;
}

PauliSum number_operator(uint32_t n_modes, Encoding e) {
    FermionSum num(n_modes);
    for (uint32_t j = 0; j < n_modes; ++j)
        num.add_term(1.0, {{j, true}, {j, false}});
    return encode(num, e);
}

}  // namespace qgsa
