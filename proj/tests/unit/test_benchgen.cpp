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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "qgo/benchgen.hpp"
#include "qgo/error.hpp"
#include "qgo/sim/simulate.hpp"
#include "oracle.hpp"

namespace {

using namespace qgo;
using ir::Circuit;
using ir::Gate;
using oracle::Dense;

constexpr double kPi = std::numbers::pi;

Dense dft(int n) {
    const std::size_t d = std::size_t{1} << n;
    Dense f(d);
    for (std::size_t y = 0; y < d; ++y) {
        for (std::size_t x = 0; x < d; ++x) {
            f(y, x) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                 2 * kPi * static_cast<double>(x * y) / static_cast<double>(d));
        }
    }
    return f;
}

// exp(-i angle * Σ_{(a,b)} Z_a Z_b) as a diagonal.
Dense zz_layer(int n, const std::vector<topo::Edge> &edges, double angle) {
    const std::size_t d = std::size_t{1} << n;
    Dense m(d);
    for (std::size_t x = 0; x < d; ++x) {
        double e = 0;
        for (const auto &[a, b] : edges) {
            e += (((x >> a) ^ (x >> b)) & 1U) != 0 ? -1.0 : 1.0;
        }
        m(x, x) = std::polar(1.0, -angle * e);
    }
    return m;
}

Dense rx_layer(int n, double theta) {
    Dense m = Dense::identity(std::size_t{1} << n);
    for (int q = 0; q < n; ++q) {
        m = oracle::multiply(oracle::embed(Gate::rx(q, theta), n), m);
    }
    return m;
}

int choose2(int n) { return n * (n - 1) / 2; }

TEST(Qft, SingleQubitIsHadamard) {
    const Circuit c = bench::gen_qft(1);
    EXPECT_LT(oracle::reference_distance(oracle::reference_unitary(c), dft(1), 2), 1e-14);
}

TEST(Qft, MatchesDftMatrix) {
    for (int n = 2; n <= 5; ++n) {
        const Circuit c = bench::gen_qft(n);
        const std::size_t d = std::size_t{1} << n;
        EXPECT_LT(oracle::reference_distance(oracle::reference_unitary(c), dft(n), d), 1e-12)
            << n;
    }
}

TEST(Qft, CnotCount) {
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(ir::cnot_count(bench::gen_qft(n)), 2 * choose2(n) + 3 * (n / 2)) << n;
    }
}

TEST(Tfim, CnotCountOnChain) {
    EXPECT_EQ(ir::cnot_count(bench::gen_tfim(5, 3, 0.1)), 24);
    EXPECT_EQ(ir::cnot_count(bench::gen_tfim(10, 4, 0.1)), 72);
}

TEST(Tfim, MatchesTrotterProduct) {
    constexpr int n = 4;
    constexpr double dt = 0.13;
    std::vector<topo::Edge> chain;
    for (int i = 0; i + 1 < n; ++i) {
        chain.emplace_back(i, i + 1);
    }
    const Dense step = oracle::multiply(rx_layer(n, 2 * dt), zz_layer(n, chain, dt));
    const Dense want = oracle::multiply(step, step);
    const Circuit c = bench::gen_tfim(n, 2, dt);
    EXPECT_LT(oracle::reference_distance(oracle::reference_unitary(c), want, 16), 1e-12);
}

TEST(MaxcutGraph, DegreeAndConnectivity) {
    for (int n = 3; n <= 16; ++n) {
        for (std::uint64_t s = 0; s < 4; ++s) {
            const auto e = bench::maxcut_graph(n, s);
            std::vector<int> deg(static_cast<std::size_t>(n), 0);
            std::set<topo::Edge> seen;
            for (const auto &[a, b] : e) {
                ASSERT_LT(a, b);
                ASSERT_TRUE(seen.insert({a, b}).second);
                ++deg[static_cast<std::size_t>(a)];
                ++deg[static_cast<std::size_t>(b)];
            }
            for (int v = 0; v < n; ++v) {
                EXPECT_GE(deg[static_cast<std::size_t>(v)], 2);
                EXPECT_LE(deg[static_cast<std::size_t>(v)], 3);
                EXPECT_TRUE(seen.count({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)}));
            }
            EXPECT_EQ(e, bench::maxcut_graph(n, s));
        }
    }
}

TEST(Qaoa, CnotCountAndDeterminism) {
    for (int layers = 1; layers <= 3; ++layers) {
        const auto e = bench::maxcut_graph(8, 5);
        const Circuit c = bench::gen_qaoa_maxcut(8, layers, 5);
        EXPECT_EQ(ir::cnot_count(c), 2 * static_cast<int>(e.size()) * layers);
        EXPECT_EQ(c, bench::gen_qaoa_maxcut(8, layers, 5));
    }
    EXPECT_NE(bench::gen_qaoa_maxcut(8, 1, 5), bench::gen_qaoa_maxcut(8, 1, 6));
}

TEST(Qaoa, LayerStructure) {
    // Angles are not exposed; recover γ and β from the first RX and check the
    // cost layer against the diagonal oracle.
    constexpr int n = 5;
    const Circuit c = bench::gen_qaoa_maxcut(n, 1, 2);
    double beta2 = 0;
    for (const Gate &g : c.gates()) {
        if (g.kind == ir::GateKind::RX) {
            beta2 = g.params[0];
            break;
        }
    }
    Dense h_layer = Dense::identity(32);
    for (int q = 0; q < n; ++q) {
        h_layer = oracle::multiply(oracle::embed(Gate::h(q), n), h_layer);
    }
    const Dense u = oracle::reference_unitary(c);
    // u = RX · ZZ(γ) · H; ZZ part = RX^-1 u H^-1 must be diagonal.
    Dense rx_inv = rx_layer(n, -beta2);
    Dense zz = oracle::multiply(oracle::multiply(rx_inv, u), h_layer);
    double off = 0;
    for (std::size_t r = 0; r < 32; ++r) {
        for (std::size_t col = 0; col < 32; ++col) {
            if (r != col) {
                off = std::max(off, std::abs(zz(r, col)));
            }
        }
    }
    EXPECT_LT(off, 1e-12);
}

std::uint64_t adder_input(int bits, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = 0;
    for (int i = 0; i < bits; ++i) {
        x |= ((a >> i) & 1U) << bench::adder_a(i);
        x |= ((b >> i) & 1U) << bench::adder_b(i);
    }
    return x;
}

TEST(Adder, TruthTable) {
    for (int bits = 1; bits <= 4; ++bits) {
        const Circuit c = bench::gen_adder(bits);
        ASSERT_EQ(c.num_qubits(), 2 * bits + 2);
        EXPECT_EQ(ir::cnot_count(c), 16 * bits + 1);
        const std::uint64_t m = std::uint64_t{1} << bits;
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                const auto out = sim::simulate(
                    c, sim::StateVector::basis(c.num_qubits(), adder_input(bits, a, b)));
                const std::uint64_t sum = a + b;
                std::uint64_t want = adder_input(bits, a, sum % m);
                want |= (sum >> bits) << bench::adder_carry_out(bits);
                EXPECT_NEAR(std::norm(out.amplitudes()[want]), 1.0, 1e-12)
                    << bits << ": " << a << "+" << b;
            }
        }
    }
}

TEST(Adder, UnitaryIsPermutation) {
    for (int bits = 1; bits <= 2; ++bits) {
        const Circuit c = bench::gen_adder(bits);
        const sim::Matrix u = sim::circuit_unitary(c);
        for (std::size_t col = 0; col < u.dim(); ++col) {
            int ones = 0;
            for (std::size_t r = 0; r < u.dim(); ++r) {
                const double a = std::abs(u(r, col));
                EXPECT_TRUE(a < 1e-12 || std::abs(a - 1) < 1e-12);
                ones += a > 0.5 ? 1 : 0;
            }
            EXPECT_EQ(ones, 1);
        }
    }
}

TEST(Generate, FamiliesAndErrors) {
    EXPECT_EQ(bench::generate("qft", 4), bench::gen_qft(4));
    EXPECT_EQ(bench::generate("tfim", 6), bench::gen_tfim(6, 3, 0.1));
    EXPECT_EQ(bench::generate("qaoa", 6, 3), bench::gen_qaoa_maxcut(6, 2, 3));
    EXPECT_EQ(bench::generate("adder", 2), bench::gen_adder(2));
    EXPECT_THROW((void)bench::generate("mul", 4), InputError);
    EXPECT_THROW((void)bench::gen_qft(0), InputError);
    EXPECT_THROW((void)bench::gen_adder(0), InputError);
}

} // namespace
