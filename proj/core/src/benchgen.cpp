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

#include "qgo/benchgen.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "qgo/error.hpp"
#include "qgo/ir/decompose.hpp"
#include "qgo/rng.hpp"

namespace qgo::bench {

using ir::Circuit;
using ir::Gate;

namespace {

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw InputError(message);
    }
}

} // namespace

Circuit gen_qft(int n) {
    require(n >= 1, "qft needs at least 1 qubit");
    Circuit c(n);
    for (int j = n - 1; j >= 0; --j) {
        c.add(Gate::h(j));
        for (int m = j - 1; m >= 0; --m) {
            ir::append_cphase(c, m, j, std::numbers::pi / static_cast<double>(1 << (j - m)));
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        const int o = n - 1 - i;
        c.add(Gate::cnot(i, o));
        c.add(Gate::cnot(o, i));
        c.add(Gate::cnot(i, o));
    }
    return c;
}

Circuit gen_tfim(int n, int steps, double dt) {
    require(n >= 2, "tfim needs at least 2 qubits");
    require(steps >= 0, "tfim step count must be non-negative");
    Circuit c(n);
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i + 1 < n; ++i) {
            ir::append_rzz(c, i, i + 1, 2.0 * dt);
        }
        for (int i = 0; i < n; ++i) {
            c.add(Gate::rx(i, 2.0 * dt));
        }
    }
    return c;
}

std::vector<topo::Edge> maxcut_graph(int n, std::uint64_t graph_seed) {
    require(n >= 2, "maxcut graph needs at least 2 vertices");
    std::vector<topo::Edge> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    auto add = [&](int a, int b) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    };
    if (n == 2) {
        add(0, 1);
        return edges;
    }
    for (int i = 0; i < n; ++i) {
        add(i, (i + 1) % n);
    }
    std::vector<topo::Edge> chords;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 2; b < n; ++b) {
            if (!(a == 0 && b == n - 1)) {
                chords.emplace_back(a, b);
            }
        }
    }
    Rng rng(derive_seed(graph_seed, 0));
    // Fisher-Yates with the project generator, so the order is portable.
    for (std::size_t i = chords.size(); i > 1; --i) {
        std::swap(chords[i - 1], chords[uniform_index(rng, i)]);
    }
    for (const auto &[a, b] : chords) {
        if (degree[static_cast<std::size_t>(a)] < 3 && degree[static_cast<std::size_t>(b)] < 3) {
            add(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

Circuit gen_qaoa_maxcut(int n, int layers, std::uint64_t graph_seed) {
    require(layers >= 0, "qaoa layer count must be non-negative");
    const std::vector<topo::Edge> edges = maxcut_graph(n, graph_seed);
    Rng rng(derive_seed(graph_seed, 1));
    Circuit c(n);
    for (int i = 0; i < n; ++i) {
        c.add(Gate::h(i));
    }
    for (int l = 0; l < layers; ++l) {
        const double gamma = uniform(rng, 0.0, std::numbers::pi);
        const double beta = uniform(rng, 0.0, std::numbers::pi);
        for (const auto &[a, b] : edges) {
            ir::append_rzz(c, a, b, 2.0 * gamma);
        }
        for (int i = 0; i < n; ++i) {
            c.add(Gate::rx(i, 2.0 * beta));
        }
    }
    return c;
}

Circuit gen_adder(int bits) {
    require(bits >= 1, "adder needs at least 1 bit");
    Circuit c(2 * bits + 2);
    auto maj = [&](int x, int y, int z) {
        c.add(Gate::cnot(z, y));
        c.add(Gate::cnot(z, x));
        ir::append_ccx(c, x, y, z);
    };
    auto uma = [&](int x, int y, int z) {
        ir::append_ccx(c, x, y, z);
        c.add(Gate::cnot(z, x));
        c.add(Gate::cnot(x, y));
    };
    maj(0, adder_b(0), adder_a(0));
    for (int i = 1; i < bits; ++i) {
        maj(adder_a(i - 1), adder_b(i), adder_a(i));
    }
    c.add(Gate::cnot(adder_a(bits - 1), adder_carry_out(bits)));
    for (int i = bits - 1; i >= 1; --i) {
        uma(adder_a(i - 1), adder_b(i), adder_a(i));
    }
    uma(0, adder_b(0), adder_a(0));
    return c;
}

Circuit generate(std::string_view family, int size, std::uint64_t seed) {
    if (family == "qft") {
        return gen_qft(size);
    }
    if (family == "tfim") {
        return gen_tfim(size, 3, 0.1);
    }
    if (family == "qaoa") {
        return gen_qaoa_maxcut(size, 2, seed);
    }
    if (family == "adder") {
        return gen_adder(size);
    }
    throw InputError("unknown benchmark family '" + std::string(family) +
                     "' (expected qft, tfim, qaoa or adder)");
}

} // namespace qgo::bench
