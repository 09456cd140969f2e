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

#include "qgsa/statevector.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace qgsa {

namespace {

unsigned g_threads = 1;

/// Runs fn(begin, end) over disjoint chunks of [0, n). The chunk schedule is
/// a pure function of (n, thread count), so results are deterministic.
template <class Fn>
void parallel_chunks(size_t n, Fn&& fn) {
    const unsigned workers = std::min<size_t>(g_threads, n == 0 ? 1 : n);
    if (workers <= 1) {
        fn(size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t b = w * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : pool) t.join();
}

inline int parity(uint64_t v) { return std::popcount(v) & 1; }

/// Compacts the bits of v selected by mask into the low positions.
#if defined(__BMI2__)
inline uint64_t gather_bits(uint64_t v, uint64_t mask) { return _pext_u64(v, mask); }
#else
inline uint64_t gather_bits(uint64_t v, uint64_t mask) {
    uint64_t out = 0;
    for (int k = 0; mask; ++k) {
        const uint64_t low = mask & (~mask + 1);
        if (v & low) out |= uint64_t{1} << k;
        mask ^= low;
    }
    return out;
}
#endif

constexpr complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

/// out += c * W(x,z) * in, with W|b> = i^{|x&z|} (-1)^{|z&b|} |b^x>.
void accumulate_word(uint64_t x, uint64_t z, complex c, const std::vector<complex>& in,
                     std::vector<complex>& out) {
    const complex f = c * kPowI[std::popcount(x & z) & 3];
    if (x == 0) {
        parallel_chunks(in.size(), [&](size_t b, size_t e) {
            for (size_t i = b; i < e; ++i)
                out[i] += parity(z & i) ? -f * in[i] : f * in[i];
        });
        return;
    }
    parallel_chunks(in.size(), [&](size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) {
            const size_t j = i ^ x;
            out[i] += parity(z & j) ? -f * in[j] : f * in[j];
        }
    });
}

/// Widest table index kept per word class; bounds each table at
/// 2^kTableBits complex entries (256 KiB).
constexpr int kTableBits = 14;

/// One class of a group's words: the z masks that agree on every bit outside
/// the table mask. The table is the Walsh-Hadamard transform of the class
/// coefficients, so table[key] already carries the sign sum over the
/// tabulated bits and a full evaluation is one lookup plus one residue
/// parity.
struct ZClass {
    uint64_t residue;
    std::vector<complex> table;
};

/// Terms sharing an x mask, the i^{|x&z|} word phase folded into each
/// coefficient. One grouped sweep reads the state once per distinct x mask
/// instead of once per word, with the per-word z parities precomputed into
/// sign-sum tables.
struct XGroup {
    uint64_t x = 0;
    uint64_t tmask = 0;
    std::vector<ZClass> classes;
    bool hermitian = false;  // every word satisfies f(i) = conj(f(i ^ x))
};

using ZTerms = std::vector<std::pair<uint64_t, complex>>;

/// The tabulated bits: all of the z union when it fits, otherwise the
/// kTableBits most frequent bits so the residue classes stay few.
uint64_t pick_table_mask(const ZTerms& zs, uint64_t z_union) {
    if (std::popcount(z_union) <= kTableBits) return z_union;
    std::vector<std::pair<int, int>> order;  // (-count, bit)
    for (int q = 0; q < 64; ++q) {
        if (!(z_union >> q & 1)) continue;
        int count = 0;
        for (const auto& [z, c] : zs) count += static_cast<int>(z >> q & 1);
        order.emplace_back(-count, q);
    }
    std::sort(order.begin(), order.end());
    uint64_t mask = 0;
    for (int i = 0; i < kTableBits; ++i) mask |= uint64_t{1} << order[i].second;
    return mask;
}

std::vector<ZClass> build_classes(const ZTerms& zs, uint64_t tmask) {
    const int bits = std::popcount(tmask);
    std::vector<ZClass> classes;
    std::unordered_map<uint64_t, size_t> index;
    for (const auto& [z, c] : zs) {
        const uint64_t residue = z & ~tmask;
        auto [it, fresh] = index.try_emplace(residue, classes.size());
        if (fresh)
            classes.push_back(
                {residue, std::vector<complex>(size_t{1} << bits, complex{0, 0})});
        classes[it->second].table[gather_bits(z, tmask)] += c;
    }
    for (auto& cls : classes)
        for (int bit = 0; bit < bits; ++bit) {
            const size_t half = size_t{1} << bit;
            for (size_t base = 0; base < cls.table.size(); base += 2 * half)
                for (size_t off = base; off < base + half; ++off) {
                    const complex lo = cls.table[off], hi = cls.table[off + half];
                    cls.table[off] = lo + hi;
                    cls.table[off + half] = lo - hi;
                }
        }
    return classes;
}

/// A folded word is Hermitian exactly when its coefficient is real for an
/// even x/z overlap and imaginary for an odd one.
bool word_hermitian(uint64_t x, uint64_t z, complex folded) {
    return parity(x & z) ? std::abs(folded.real()) < 1e-12
                         : std::abs(folded.imag()) < 1e-12;
}

/// f(j) = sum over the group's words of c_z (-1)^{parity(z & j)}.
inline complex group_value(const XGroup& g, uint64_t j) {
    const size_t key = gather_bits(j, g.tmask);
    complex f{0, 0};
    for (const auto& cls : g.classes)
        f += parity(cls.residue & j) ? -cls.table[key] : cls.table[key];
    return f;
}

std::vector<XGroup> group_by_x(const PauliSum& h) {
    std::vector<std::pair<uint64_t, ZTerms>> raw;
    std::unordered_map<uint64_t, size_t> index;
    for (const auto& [k, c] : h.terms()) {
        auto [it, fresh] = index.try_emplace(k.x, raw.size());
        if (fresh) raw.push_back({k.x, {}});
        raw[it->second].second.emplace_back(k.z,
                                            c * kPowI[std::popcount(k.x & k.z) & 3]);
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<XGroup> groups(raw.size());
    for (size_t gi = 0; gi < raw.size(); ++gi) {
        auto& [x, zs] = raw[gi];
        std::sort(zs.begin(), zs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        XGroup& g = groups[gi];
        g.x = x;
        g.hermitian = true;
        uint64_t z_union = 0;
        for (const auto& [z, c] : zs) {
            z_union |= z;
            g.hermitian = g.hermitian && word_hermitian(x, z, c);
        }
        g.tmask = pick_table_mask(zs, z_union);
        g.classes = build_classes(zs, g.tmask);
    }
    return groups;
}

/// Content hash of the term set, independent of map iteration order.
uint64_t sum_fingerprint(const PauliSum& h) {
    uint64_t mix = 0, acc = 0;
    for (const auto& [k, c] : h.terms()) {
        uint64_t t = 1469598103934665603ull;
        const auto fold = [&t](uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                t ^= (v >> (8 * i)) & 0xff;
                t *= 1099511628211ull;
            }
        };
        fold(k.x);
        fold(k.z);
        uint64_t bits;
        const double re = c.real(), im = c.imag();
        std::memcpy(&bits, &re, 8);
        fold(bits);
        std::memcpy(&bits, &im, 8);
        fold(bits);
        mix ^= t;
        acc += t;
    }
    return mix ^ (acc * 0x9e3779b97f4a7c15ull) ^
           (uint64_t{h.n_qubits()} << 56) ^ h.terms().size();
}

using GroupsPtr = std::shared_ptr<const std::vector<XGroup>>;

/// Small cache of compiled group forms so repeated applications of one
/// operator (Lanczos sweeps, theta scans) skip the table rebuild.
GroupsPtr compiled_groups(const PauliSum& h) {
    static std::mutex mu;
    static std::vector<std::pair<uint64_t, GroupsPtr>> cache;  // recent first
    const uint64_t key = sum_fingerprint(h);
    {
        std::lock_guard<std::mutex> lock(mu);
        for (size_t i = 0; i < cache.size(); ++i)
            if (cache[i].first == key) {
                const auto hit = cache[i];
                cache.erase(cache.begin() + i);
                cache.insert(cache.begin(), hit);
                return hit.second;
            }
    }
    auto built = std::make_shared<const std::vector<XGroup>>(group_by_x(h));
    std::lock_guard<std::mutex> lock(mu);
    cache.insert(cache.begin(), {key, built});
    if (cache.size() > 3) cache.pop_back();
    return built;
}

/// Expands pair index r to the basis index with bit `top` clear.
inline size_t expand_pair(size_t r, uint64_t top) {
    return ((r & ~(top - 1)) << 1) | (r & (top - 1));
}

/// out += H in.
void accumulate_groups(const std::vector<XGroup>& groups, const std::vector<complex>& in,
                       std::vector<complex>& out) {
    for (const auto& g : groups) {
        if (g.x != 0 && g.hermitian) {
            // One table value serves both H_{ij} and H_{ji} = conj(H_{ij}).
            const uint64_t top = std::bit_floor(g.x);
            parallel_chunks(in.size() >> 1, [&](size_t b, size_t e) {
                for (size_t r = b; r < e; ++r) {
                    const size_t i = expand_pair(r, top);
                    const size_t j = i ^ g.x;
                    const complex f = group_value(g, j);
                    out[i] += f * in[j];
                    out[j] += std::conj(f) * in[i];
                }
            });
            continue;
        }
        parallel_chunks(in.size(), [&](size_t b, size_t e) {
            for (size_t i = b; i < e; ++i) {
                const size_t j = i ^ g.x;
                out[i] += group_value(g, j) * in[j];
            }
        });
    }
}

/// <psi| H |psi> from the grouped form.
complex grouped_expectation(const std::vector<XGroup>& groups,
                            const std::vector<complex>& psi) {
    complex total{0, 0};
    const unsigned workers = std::max(1u, g_threads);
    for (const auto& g : groups) {
        std::vector<complex> partial(workers, complex{0, 0});
        std::atomic<unsigned> slot{0};
        if (g.x == 0) {
            parallel_chunks(psi.size(), [&](size_t b, size_t e) {
                const unsigned my = slot.fetch_add(1);
                complex acc{0, 0};
                for (size_t i = b; i < e; ++i) acc += std::norm(psi[i]) * group_value(g, i);
                partial[my] = acc;
            });
        } else if (g.hermitian) {
            // Each (i, j) pair contributes twice the real part of one side.
            const uint64_t top = std::bit_floor(g.x);
            parallel_chunks(psi.size() >> 1, [&](size_t b, size_t e) {
                const unsigned my = slot.fetch_add(1);
                double acc = 0;
                for (size_t r = b; r < e; ++r) {
                    const size_t i = expand_pair(r, top);
                    const size_t j = i ^ g.x;
                    acc += 2.0 * std::real(std::conj(psi[i]) * group_value(g, j) * psi[j]);
                }
                partial[my] = complex{acc, 0};
            });
        } else {
            parallel_chunks(psi.size(), [&](size_t b, size_t e) {
                const unsigned my = slot.fetch_add(1);
                complex acc{0, 0};
                for (size_t i = b; i < e; ++i) {
                    const size_t j = i ^ g.x;
                    acc += std::conj(psi[i]) * group_value(g, j) * psi[j];
                }
                partial[my] = acc;
            });
        }
        for (const complex& p : partial) total += p;
    }
    return total;
}

}  // namespace

void set_thread_count(unsigned n) { g_threads = std::max(1u, n); }
unsigned thread_count() { return g_threads; }

StateVector::StateVector(uint32_t n_qubits, uint32_t max_qubits) : n_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("StateVector: need at least one qubit");
    if (n_qubits > max_qubits)
        throw std::runtime_error("StateVector: " + std::to_string(n_qubits) +
                                 " qubits exceeds the capacity limit of " +
                                 std::to_string(max_qubits));
    amps_.assign(size_t{1} << n_qubits, complex{0, 0});
}

double StateVector::norm() const {
    double s = 0;
    for (const complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    const double nrm = norm();
    if (nrm == 0) throw std::runtime_error("StateVector: cannot normalize zero vector");
    const double inv = 1.0 / nrm;
    for (complex& a : amps_) a *= inv;
}

StateVector StateVector::basis_state(uint32_t n_qubits, uint64_t index,
                                     uint32_t max_qubits) {
    StateVector psi(n_qubits, max_qubits);
    if (index >= psi.amps_.size())
        throw std::invalid_argument("basis_state: index outside the register");
    psi.amps_[index] = complex{1, 0};
    return psi;
}

StateVector prepare(const Preparation& w, uint32_t max_qubits) {
    if (w.is_basis_flip())
        return StateVector::basis_state(w.n_qubits, std::get<BasisFlip>(w.op).flips,
                                        max_qubits);
    StateVector psi = StateVector::basis_state(w.n_qubits, 0, max_qubits);
    apply_preparation(w, psi);
    return psi;
}

StateVector prepare(const ProductState& v, uint32_t max_qubits) {
    return prepare(Preparation::from_product_state(v), max_qubits);
}

void apply_preparation(const Preparation& w, StateVector& psi, bool inverse) {
    if (w.n_qubits != psi.n_qubits())
        throw std::invalid_argument("apply_preparation: size mismatch");
    auto& amps = psi.amps();
    if (w.is_basis_flip()) {
        const uint64_t flips = std::get<BasisFlip>(w.op).flips;  // self-inverse
        if (flips >= amps.size())
            throw std::invalid_argument("apply_preparation: flips outside register");
        if (flips == 0) return;
        for (size_t i = 0; i < amps.size(); ++i) {
            const size_t j = i ^ flips;
            if (i < j) std::swap(amps[i], amps[j]);
        }
        return;
    }
    const auto& gates = std::get<LocalRotations>(w.op).gates;
    for (uint32_t q = 0; q < w.n_qubits; ++q) {
        std::array<complex, 4> u = gates[q];
        if (inverse)
            u = {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
        const uint64_t bit = 1ull << q;
        parallel_chunks(amps.size() >> 1, [&](size_t b, size_t e) {
            for (size_t r = b; r < e; ++r) {
                // r enumerates pairs; expand to the index with qubit q clear.
                const size_t i0 = ((r & ~(bit - 1)) << 1) | (r & (bit - 1));
                const size_t i1 = i0 | bit;
                const complex a0 = amps[i0], a1 = amps[i1];
                amps[i0] = u[0] * a0 + u[1] * a1;
                amps[i1] = u[2] * a0 + u[3] * a1;
            }
        });
    }
}

std::vector<complex> apply_pauli_sum(const PauliSum& h, const StateVector& psi) {
    if (h.n_qubits() != psi.n_qubits())
        throw std::invalid_argument("apply_pauli_sum: size mismatch");
    std::vector<complex> out(psi.dim(), complex{0, 0});
    accumulate_groups(*compiled_groups(h), psi.amps(), out);
    return out;
}

double expectation(const PauliSum& h, const StateVector& psi) {
    if (h.n_qubits() != psi.n_qubits())
        throw std::invalid_argument("expectation: size mismatch");
    if (!h.is_hermitian(1e-10))
        throw std::runtime_error("expectation: operator is not Hermitian");
    const complex e = grouped_expectation(*compiled_groups(h), psi.amps());
    if (std::abs(e.imag()) > 1e-8)
        throw std::runtime_error("expectation: Hermiticity violation, Im = " +
                                 std::to_string(e.imag()));
    return e.real();
}

double variance(const PauliSum& h, const StateVector& psi) {
    if (!h.is_hermitian(1e-10))
        throw std::runtime_error("variance: operator is not Hermitian");
    const std::vector<complex> hpsi = apply_pauli_sum(h, psi);
    double h2 = 0;
    complex e{0, 0};
    for (size_t i = 0; i < hpsi.size(); ++i) {
        h2 += std::norm(hpsi[i]);
        e += std::conj(psi.amps()[i]) * hpsi[i];
    }
    if (std::abs(e.imag()) > 1e-8)
        throw std::runtime_error("variance: Hermiticity violation");
    return std::max(0.0, h2 - e.real() * e.real());
}

std::vector<double> weight_resolved_overlap(const PauliSum& h, const StateVector& v,
                                            const Preparation& w) {
    StateVector phi(v.n_qubits());
    phi.amps() = apply_pauli_sum(h, v);
    apply_preparation(w, phi, /*inverse=*/true);
    std::vector<double> q(v.n_qubits() + 1, 0.0);
    for (size_t i = 0; i < phi.dim(); ++i)
        q[std::popcount(i)] += std::norm(phi.amps()[i]);
    return q;
}

namespace {

StateVector involution_product(const std::vector<InvolutionFactor>& factors,
                               double theta, const StateVector& psi) {
    StateVector out = psi;
    const double c = std::cos(theta), s = std::sin(theta);
    std::vector<complex> scratch;
    for (const auto& factor : factors) {
        scratch.assign(out.dim(), complex{0, 0});
        // An involution expanded over t qubits holds up to 2^t words on one
        // x mask; the grouped form applies them in a single sweep.
        accumulate_groups(group_by_x(factor.op), out.amps(), scratch);
        const complex is{0.0, factor.sign * s};
        auto& amps = out.amps();
        parallel_chunks(amps.size(), [&](size_t b, size_t e) {
            for (size_t i = b; i < e; ++i) amps[i] = c * amps[i] + is * scratch[i];
        });
    }
    const double drift = std::abs(out.norm() - 1.0);
    if (drift > 1e-10)
        throw std::runtime_error("commuting exponential: norm drift " +
                                 std::to_string(drift));
    out.normalize();
    return out;
}

}  // namespace

StateVector apply_factored_exponential(const std::vector<InvolutionFactor>& factors,
                                       double theta, const StateVector& psi) {
    return involution_product(factors, theta, psi);
}

StateVector apply_commuting_exponential(const PauliSum& l, double theta,
                                        const StateVector& psi) {
    if (l.n_qubits() != psi.n_qubits())
        throw std::invalid_argument("apply_commuting_exponential: size mismatch");
    const auto terms = l.sorted_terms();
    for (size_t a = 0; a < terms.size(); ++a)
        for (size_t b = a + 1; b < terms.size(); ++b)
            if (!terms[a].first.commutes_with(terms[b].first))
                throw std::invalid_argument(
                    "apply_commuting_exponential: non-commuting word pair");
    std::vector<InvolutionFactor> factors;
    factors.reserve(terms.size());
    for (const auto& [word, coef] : terms) {
        if (std::abs(coef.imag()) > 1e-9 ||
            std::abs(std::abs(coef.real()) - 1.0) > 1e-9)
            throw std::invalid_argument(
                "apply_commuting_exponential: coefficients must be +-1");
        PauliSum single(l.n_qubits());
        single.add(word, complex{1, 0});
        factors.push_back({coef.real() > 0 ? 1.0 : -1.0, std::move(single)});
    }
    return involution_product(factors, theta, psi);
}

StateVector apply_exponential(const PauliSum& a, double theta, const StateVector& psi,
                              ExpMethod method, int trotter_steps) {
    if (a.n_qubits() != psi.n_qubits())
        throw std::invalid_argument("apply_exponential: size mismatch");
    if (!a.is_hermitian(1e-10))
        throw std::runtime_error("apply_exponential: generator is not Hermitian");
    StateVector out = psi;
    if (a.empty() || theta == 0.0) return out;

    if (method == ExpMethod::kTrotter) {
        if (trotter_steps < 1)
            throw std::invalid_argument("apply_exponential: trotter steps < 1");
        const auto terms = a.sorted_terms();
        std::vector<complex> scratch;
        for (int rep = 0; rep < trotter_steps; ++rep) {
            for (const auto& [word, coef] : terms) {
                const double angle = theta * coef.real() / trotter_steps;
                scratch.assign(out.dim(), complex{0, 0});
                accumulate_word(word.x, word.z, complex{1, 0}, out.amps(), scratch);
                const double c = std::cos(angle);
                const complex is{0.0, -std::sin(angle)};
                auto& amps = out.amps();
                parallel_chunks(amps.size(), [&](size_t b, size_t e) {
                    for (size_t i = b; i < e; ++i) amps[i] = c * amps[i] + is * scratch[i];
                });
            }
        }
        out.normalize();
        return out;
    }

    // Exact: split so each substep has |tau| * sum|coeff| <= 1, then run the
    // Taylor series of e^{-i tau A} to convergence.
    const double scale = std::abs(theta) * a.coefficient_norm1();
    const int substeps = std::max(1, static_cast<int>(std::ceil(scale)));
    const complex mitau = complex{0.0, -theta / substeps};
    const auto groups = compiled_groups(a);
    std::vector<complex> term(out.dim()), next(out.dim());
    for (int step = 0; step < substeps; ++step) {
        std::vector<complex> acc = out.amps();
        term = out.amps();
        double acc_norm2 = 1.0;
        for (int k = 1; k <= 200; ++k) {
            next.assign(out.dim(), complex{0, 0});
            accumulate_groups(*groups, term, next);
            const complex f = mitau / static_cast<double>(k);
            double term_norm2 = 0.0;
            for (size_t i = 0; i < next.size(); ++i) {
                next[i] *= f;
                acc[i] += next[i];
                term_norm2 += std::norm(next[i]);
            }
            term.swap(next);
            acc_norm2 = 0.0;
            for (const complex& v : acc) acc_norm2 += std::norm(v);
            if (std::sqrt(term_norm2) < 1e-14 * std::sqrt(acc_norm2)) break;
        }
        out.amps() = std::move(acc);
    }
    const double drift = std::abs(out.norm() - 1.0);
    if (drift > 1e-10)
        throw std::runtime_error("apply_exponential: norm drift " +
                                 std::to_string(drift));
    out.normalize();
    return out;
}

void save_statevector(const StateVector& psi, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const char magic[4] = {'Q', 'G', 'S', 'A'};
    const uint32_t version = 1, n = psi.n_qubits();
    const uint8_t little_endian = 1;
    out.write(magic, 4);
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&little_endian), 1);
    for (const complex& a : psi.amps()) {
        const float re = static_cast<float>(a.real()), im = static_cast<float>(a.imag());
        out.write(reinterpret_cast<const char*>(&re), 4);
        out.write(reinterpret_cast<const char*>(&im), 4);
    }
}

StateVector load_statevector(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[4];
    uint32_t version = 0, n = 0;
    uint8_t little_endian = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&little_endian), 1);
    if (!in || std::memcmp(magic, "QGSA", 4) != 0 || version != 1 || !little_endian)
        throw std::runtime_error("statevector dump: bad header in " + path);
    StateVector psi(n);
    for (complex& a : psi.amps()) {
        float re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), 4);
        in.read(reinterpret_cast<char*>(&im), 4);
        a = complex{re, im};
    }
    if (!in) throw std::runtime_error("statevector dump: truncated file " + path);
    return psi;
}

}  // namespace qgsa
