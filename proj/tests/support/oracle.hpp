// Copyright 2026 The qgo Authors
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

// Test-side generators and reference implementations. Nothing here calls the
// library's simulation kernels, so the oracles stay independent of the code
// they check.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/partitioner.hpp"
#include "qgo/rng.hpp"
#include "qgo/topology.hpp"

namespace qgo::oracle {

using C = std::complex<double>;

/// Square matrix, row-major.
struct Dense {
    std::size_t dim{0};
    std::vector<C> a;

    explicit Dense(std::size_t d = 0) : dim(d), a(d * d) {}
    static Dense identity(std::size_t d) {
        Dense m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
    C &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const C &operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Dense multiply(const Dense &x, const Dense &y) {
    Dense z(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const C v = x(i, k);
            if (v == C{}) {
                continue;
            }
            for (std::size_t j = 0; j < x.dim; ++j) {
                z(i, j) += v * y(k, j);
            }
        }
    }
    return z;
}

/// Textbook 2x2 matrices, [row][col].
inline std::array<std::array<C, 2>, 2> textbook_1q(const ir::Gate &g) {
    const C i{0.0, 1.0};
    const double t = g.params[0];
    switch (g.kind) {
    case ir::GateKind::RX:
        return {{{std::cos(t / 2), -i * std::sin(t / 2)}, {-i * std::sin(t / 2), std::cos(t / 2)}}};
    case ir::GateKind::RY:
        return {{{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}}};
    case ir::GateKind::RZ:
        return {{{std::exp(-i * t / 2.0), 0.0}, {0.0, std::exp(i * t / 2.0)}}};
    case ir::GateKind::U3: {
        const double p = g.params[1];
        const double l = g.params[2];
        return {{{std::cos(t / 2), -std::exp(i * l) * std::sin(t / 2)},
                 {std::exp(i * p) * std::sin(t / 2), std::exp(i * (p + l)) * std::cos(t / 2)}}};
    }
    case ir::GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        return {{{s, s}, {s, -s}}};
    }
    case ir::GateKind::X:
        return {{{0.0, 1.0}, {1.0, 0.0}}};
    default:
        return {{{1.0, 0.0}, {0.0, 1.0}}};
    }
}

/// Full 2^n matrix of one gate, built entry by entry from basis-state rules.
inline Dense embed(const ir::Gate &g, int n) {
    const std::size_t d = std::size_t{1} << n;
    Dense m(d);
    auto bit = [](std::size_t x, int q) { return (x >> q) & 1U; };
    if (g.kind == ir::GateKind::CNOT || g.kind == ir::GateKind::SWAP) {
        const int a = g.qubits[0];
        const int b = g.qubits[1];
        for (std::size_t col = 0; col < d; ++col) {
            std::size_t row = col;
            if (g.kind == ir::GateKind::CNOT) {
                if (bit(col, a)) {
                    row ^= std::size_t{1} << b;
                }
            } else if (bit(col, a) != bit(col, b)) {
                row ^= (std::size_t{1} << a) | (std::size_t{1} << b);
            }
            m(row, col) = 1.0;
        }
        return m;
    }
    const auto u = textbook_1q(g);
    const int q = g.qubits[0];
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if ((r & ~mask) == (c & ~mask)) {
                m(r, c) = u[bit(r, q)][bit(c, q)];
            }
        }
    }
    return m;
}

inline Dense reference_unitary(const ir::Circuit &c) {
    Dense u = Dense::identity(std::size_t{1} << c.num_qubits());
    for (const ir::Gate &g : c.gates()) {
        u = multiply(embed(g, c.num_qubits()), u);
    }
    return u;
}

/// 1 - |Tr(a^dagger b)| / d.
template <typename A, typename B>
double reference_distance(const A &a, const B &b, std::size_t dim) {
    C tr{};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            tr += std::conj(a(r, c)) * b(r, c);
        }
    }
    return 1.0 - std::abs(tr) / static_cast<double>(dim);
}

inline double angle(Rng &rng) { return uniform(rng, -std::numbers::pi, std::numbers::pi); }

inline ir::Gate random_1q(Rng &rng, int q) {
    switch (uniform_index(rng, 6)) {
    case 0:
        return ir::Gate::rx(q, angle(rng));
    case 1:
        return ir::Gate::ry(q, angle(rng));
    case 2:
        return ir::Gate::rz(q, angle(rng));
    case 3: {
        const double t = angle(rng);
        const double p = angle(rng);
        return ir::Gate::u3(q, t, p, angle(rng));
    }
    case 4:
        return ir::Gate::h(q);
    default:
        return ir::Gate::x(q);
    }
}

/// Random circuit on n qubits; about `two_qubit_share` of the gates are CNOTs
/// (or SWAPs when allowed) on arbitrary pairs.
inline ir::Circuit random_circuit(Rng &rng, int n, int gates,
                                  double two_qubit_share = 0.4,
                                  bool allow_swap = false) {
    ir::Circuit c(n);
    for (int i = 0; i < gates; ++i) {
        if (n >= 2 && uniform01(rng) < two_qubit_share) {
            const int a = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
            int b = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n - 1)));
            b += b >= a ? 1 : 0;
            if (allow_swap && uniform01(rng) < 0.2) {
                c.add(ir::Gate::swap(a, b));
            } else {
                c.add(ir::Gate::cnot(a, b));
            }
        } else {
            c.add(random_1q(rng, static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)))));
        }
    }
    return c;
}

/// Random circuit whose two-qubit gates all sit on edges of `t` among qubits
/// [0, n). Requires at least one such edge.
inline ir::Circuit random_mapped_circuit(Rng &rng, const topo::Topology &t, int n,
                                         int gates, double two_qubit_share = 0.5) {
    std::vector<topo::Edge> usable;
    for (const auto &e : t.edges()) {
        if (e.second < n) {
            usable.push_back(e);
        }
    }
    ir::Circuit c(n);
    for (int i = 0; i < gates; ++i) {
        if (!usable.empty() && uniform01(rng) < two_qubit_share) {
            auto [a, b] = usable[uniform_index(rng, usable.size())];
            if (uniform01(rng) < 0.5) {
                std::swap(a, b);
            }
            c.add(ir::Gate::cnot(a, b));
        } else {
            c.add(random_1q(rng, static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)))));
        }
    }
    return c;
}

/// Connectivity of the subgraph induced on `qs`, by flood fill over `t`.
inline bool reference_connected(const topo::Topology &t, const std::vector<int> &qs) {
    if (qs.empty()) {
        return false;
    }
    std::vector<int> seen{qs[0]};
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (int q : qs) {
            bool known = false;
            for (int s : seen) {
                known = known || s == q;
            }
            if (!known && t.adjacent(seen[i], q)) {
                seen.push_back(q);
            }
        }
    }
    return seen.size() == qs.size();
}

/// All connected k-subsets by brute force over bitmasks, lexicographic.
inline std::vector<std::vector<int>> reference_groups(const topo::Topology &t, int k) {
    std::vector<std::vector<int>> out;
    const int n = t.num_qubits();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        std::vector<int> qs;
        for (int q = 0; q < n; ++q) {
            if ((mask >> q) & 1U) {
                qs.push_back(q);
            }
        }
        if (reference_connected(t, qs)) {
            out.push_back(qs);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Executable set by fixed-point elimination: start from every remaining gate
 * inside the group and repeatedly drop gates with an earlier remaining gate on
 * a shared qubit that is not (or no longer) in the set. `remaining[i]` marks
 * gates not yet partitioned.
 */
inline std::vector<int> reference_executable(const ir::Circuit &c,
                                             const std::vector<bool> &remaining,
                                             const std::vector<int> &group) {
    auto inside = [&](int q) {
        return std::find(group.begin(), group.end(), q) != group.end();
    };
    std::vector<bool> in(c.size(), false);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!remaining[i]) {
            continue;
        }
        bool ok = true;
        for (int q : c[i].wires()) {
            ok = ok && inside(q);
        }
        in[i] = ok;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!in[i]) {
                continue;
            }
            for (std::size_t j = 0; j < i && in[i]; ++j) {
                if (!remaining[j] || in[j]) {
                    continue;
                }
                for (int q : c[i].wires()) {
                    if (c[j].acts_on(q)) {
                        in[i] = false;
                        changed = true;
                    }
                }
            }
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (in[i]) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

/**
 * Replays a partition step by step against the brute-force executable sets
 * and returns a description of the first violated property, or "" when the
 * partition covers every gate once, keeps per-qubit order, uses valid groups
 * and picks the best (cnots, gates, smallest group) candidate at every step.
 */
inline std::string check_partition(const ir::Circuit &c, const topo::Topology &t, int k,
                                   const partition::Partition &p) {
    const std::vector<std::vector<int>> groups = reference_groups(t.induced_prefix(c.num_qubits()), k);
    std::vector<bool> remaining(c.size(), true);
    std::vector<int> concatenated;
    for (std::size_t step = 0; step < p.blocks.size(); ++step) {
        const partition::Block &b = p.blocks[step];
        const std::string where = "step " + std::to_string(step) + ": ";
        if (!reference_connected(t, b.group.qubits) ||
            static_cast<int>(b.group.size()) != k) {
            return where + "invalid group";
        }
        int best_cnots = -1;
        std::size_t best_gates = 0;
        std::vector<int> best_group;
        for (const auto &g : groups) {
            const auto e = reference_executable(c, remaining, g);
            int cn = 0;
            for (int i : e) {
                cn += c[static_cast<std::size_t>(i)].kind == ir::GateKind::CNOT ? 1 : 0;
            }
            if (cn > best_cnots || (cn == best_cnots && e.size() > best_gates)) {
                best_cnots = cn;
                best_gates = e.size();
                best_group = g;
            }
        }
        if (b.group.qubits != best_group) {
            return where + "selected group is not the best candidate";
        }
        if (b.gates != reference_executable(c, remaining, b.group.qubits)) {
            return where + "block is not the maximal executable set";
        }
        if (b.cnot_count != best_cnots) {
            return where + "score differs from the brute-force maximum";
        }
        for (int g : b.gates) {
            for (int q : c[static_cast<std::size_t>(g)].wires()) {
                if (!b.group.contains(q)) {
                    return where + "gate outside its group";
                }
            }
            if (!remaining[static_cast<std::size_t>(g)]) {
                return where + "gate covered twice";
            }
            remaining[static_cast<std::size_t>(g)] = false;
            concatenated.push_back(g);
        }
    }
    if (concatenated.size() != c.size()) {
        return "coverage: " + std::to_string(concatenated.size()) + " of " +
               std::to_string(c.size()) + " gates";
    }
    for (int q = 0; q < c.num_qubits(); ++q) {
        int last = -1;
        for (int g : concatenated) {
            if (c[static_cast<std::size_t>(g)].acts_on(q)) {
                if (g < last) {
                    return "order violated on qubit " + std::to_string(q);
                }
                last = g;
            }
        }
    }
    return "";
}

} // namespace qgo::oracle
