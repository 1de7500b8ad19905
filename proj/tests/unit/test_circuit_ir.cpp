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

#include <numbers>
#include <string>

#include "qgo/error.hpp"
#include "qgo/ir/circuit.hpp"
#include "qgo/ir/dag.hpp"
#include "qgo/ir/decompose.hpp"
#include "qgo/ir/merge.hpp"
#include "qgo/ir/qasm.hpp"
#include "oracle.hpp"

namespace {

using namespace qgo;
using ir::Circuit;
using ir::Gate;
using ir::GateKind;
using oracle::reference_distance;
using oracle::reference_unitary;

constexpr double kPi = std::numbers::pi;

TEST(Circuit, RejectsInvalidGates) {
    Circuit c(2);
    EXPECT_THROW(c.add(Gate::cnot(0, 0)), InputError);
    EXPECT_THROW(c.add(Gate::cnot(0, 2)), InputError);
    EXPECT_THROW(c.add(Gate::h(-1)), InputError);
    c.add(Gate::cnot(0, 1));
    EXPECT_EQ(c.size(), 1U);
}

TEST(Circuit, GateAfterMeasurementIsRejected) {
    Circuit c(2, 2);
    c.add(Gate::h(0));
    c.measure(0, 0);
    EXPECT_THROW(c.add(Gate::x(0)), InputError);
    EXPECT_THROW(c.add(Gate::cnot(1, 0)), InputError);
    c.add(Gate::x(1)); // other qubit is still free
    EXPECT_EQ(c.measurements().size(), 1U);
}

TEST(Circuit, CountsAndDepth) {
    Circuit c(3);
    c.add(Gate::h(0));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::swap(1, 2));
    c.add(Gate::rz(0, 0.1));
    EXPECT_EQ(ir::cnot_count(c), 4); // SWAP counts as 3
    EXPECT_EQ(ir::single_qubit_count(c), 2);
    EXPECT_EQ(ir::depth(c), 3);
    EXPECT_EQ(ir::depth(Circuit(4)), 0);
}

TEST(Circuit, LowerSwapsKeepsUnitary) {
    Circuit c(2);
    c.add(Gate::swap(0, 1));
    const Circuit lowered = ir::lower_swaps(c);
    ASSERT_EQ(lowered.size(), 3U);
    for (const Gate &g : lowered.gates()) {
        EXPECT_EQ(g.kind, GateKind::CNOT);
    }
    EXPECT_LT(reference_distance(reference_unitary(c), reference_unitary(lowered), 4), 1e-15);
}

TEST(Qasm, ParsesSpecExamples) {
    const Circuit a = ir::parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[1];\n");
    ASSERT_EQ(a.num_qubits(), 2);
    ASSERT_EQ(a.size(), 1U);
    EXPECT_EQ(a[0], Gate::cnot(0, 1));

    const Circuit b = ir::parse_qasm("qreg q[1]; rz(0.5) q[0];");
    ASSERT_EQ(b.size(), 1U);
    EXPECT_EQ(b[0], Gate::rz(0, 0.5));
}

TEST(Qasm, GateAfterMeasurementNamesTheLine) {
    try {
        (void)ir::parse_qasm("qreg q[1];\nmeasure q[0]->c[0];\nx q[0];\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("gate after measurement"), std::string::npos);
    }
}

TEST(Qasm, ReportsLineAndToken) {
    try {
        (void)ir::parse_qasm("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.token(), "foo");
    }
    EXPECT_THROW((void)ir::parse_qasm("qreg q[2];\ncx q[0],q[5];\n"), ParseError);
    EXPECT_THROW((void)ir::parse_qasm("qreg q[2];\ncx q[0] q[1];\n"), ParseError);
    EXPECT_THROW((void)ir::parse_qasm("qreg q[2];\nqreg r[2];\n"), ParseError);
}

TEST(Qasm, EvaluatesExpressions) {
    const Circuit c = ir::parse_qasm(
        "qreg q[1];\nrz(pi/4) q[0];\nrx(-2*pi^2/3 + sin(pi/2)) q[0];\nry(1.5e-3) q[0];\n");
    ASSERT_EQ(c.size(), 3U);
    EXPECT_DOUBLE_EQ(c[0].params[0], kPi / 4);
    EXPECT_DOUBLE_EQ(c[1].params[0], -2 * kPi * kPi / 3 + 1.0);
    EXPECT_DOUBLE_EQ(c[2].params[0], 1.5e-3);
}

TEST(Qasm, AliasesMatchTextbookMatrices) {
    // Each alias against a hand-built reference on the same qubits.
    struct Case {
        const char *qasm;
        Circuit reference;
    };
    auto one = [](Gate g) {
        Circuit c(2);
        c.add(g);
        return c;
    };
    Circuit cz(2);
    cz.add(Gate::h(1));
    cz.add(Gate::cnot(0, 1));
    cz.add(Gate::h(1));
    const Case cases[] = {
        {"t q[0];", one(Gate::rz(0, kPi / 4))},
        {"tdg q[0];", one(Gate::rz(0, -kPi / 4))},
        {"s q[1];", one(Gate::rz(1, kPi / 2))},
        {"sdg q[1];", one(Gate::rz(1, -kPi / 2))},
        {"z q[0];", one(Gate::rz(0, kPi))},
        {"u1(0.3) q[0];", one(Gate::rz(0, 0.3))},
        {"u2(0.1,0.2) q[0];", one(Gate::u3(0, kPi / 2, 0.1, 0.2))},
        {"sx q[0];", one(Gate::rx(0, kPi / 2))},
        {"y q[0];", one(Gate::u3(0, kPi, kPi / 2, kPi / 2))},
        {"cz q[0],q[1];", cz},
    };
    for (const Case &k : cases) {
        const Circuit parsed = ir::parse_qasm(std::string("qreg q[2];\n") + k.qasm);
        EXPECT_LT(reference_distance(reference_unitary(parsed), reference_unitary(k.reference), 4),
                  1e-14)
            << k.qasm;
    }
    // y is exact including phase: [[0,-i],[i,0]].
    const auto y = oracle::textbook_1q(ir::parse_qasm("qreg q[1]; y q[0];")[0]);
    EXPECT_NEAR(std::abs(y[0][1] - oracle::C(0, -1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(y[1][0] - oracle::C(0, 1)), 0.0, 1e-15);
}

TEST(Qasm, BroadcastBarrierAndWholeRegisterMeasure) {
    const Circuit c = ir::parse_qasm(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\ncreg c[3];\n"
        "h q;\nbarrier q;\nid q[1];\ncx q[0],q[2];\nmeasure q -> c;\n");
    ASSERT_EQ(c.size(), 4U);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(c[static_cast<std::size_t>(i)], Gate::h(i));
    }
    EXPECT_EQ(c[3], Gate::cnot(0, 2));
    ASSERT_EQ(c.measurements().size(), 3U);
    EXPECT_EQ(c.measurements()[2].qubit, 2);
    EXPECT_EQ(c.measurements()[2].clbit, 2);
}

TEST(Qasm, EmptyCircuitIsHeaderOnly) {
    EXPECT_EQ(ir::write_qasm(Circuit(3)), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
}

TEST(Qasm, WritesCnotText) {
    Circuit c(2);
    c.add(Gate::cnot(0, 1));
    EXPECT_NE(ir::write_qasm(c).find("cx q[0],q[1];"), std::string::npos);
}

TEST(Qasm, RoundTripRandomCircuits) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(uniform_index(rng, 6));
        Circuit c = oracle::random_circuit(rng, n, 50, 0.4, true);
        if (seed % 3 == 0) {
            std::vector<ir::Measurement> ms;
            for (int q = 0; q < n; ++q) {
                ms.push_back({q, n - 1 - q});
            }
            c.set_measurements(ms, n);
        }
        const Circuit back = ir::parse_qasm(ir::write_qasm(c));
        EXPECT_EQ(back, c) << "seed " << seed;
    }
}

TEST(Dag, TwoCnotsShareBothWires) {
    Circuit c(2);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(0, 1));
    const ir::DependencyDag dag(c);
    const auto edges = dag.edges();
    ASSERT_EQ(edges.size(), 2U);
    EXPECT_EQ(edges[0].from, 0);
    EXPECT_EQ(edges[0].to, 1);
    EXPECT_EQ(edges[0].qubit, 0);
    EXPECT_EQ(edges[1].qubit, 1);
    EXPECT_EQ(dag.frontier(), std::vector<int>{0});
}

TEST(Dag, GateDependsOnLatestWriterOfEachQubit) {
    // g0 on q2, g1 on q0, g2 on q1, g3 on q2, g4 on q3, g5 on (q0,q1).
    Circuit c(4);
    c.add(Gate::h(2));
    c.add(Gate::h(0));
    c.add(Gate::x(1));
    c.add(Gate::rz(2, 0.1));
    c.add(Gate::h(3));
    c.add(Gate::cnot(0, 1));
    const ir::DependencyDag dag(c);
    EXPECT_EQ(dag.predecessors(5), (std::vector<int>{1, 2}));
    EXPECT_EQ(dag.frontier(), (std::vector<int>{0, 1, 2, 4}));
    EXPECT_EQ(dag.successors(0), std::vector<int>{3});
}

TEST(Dag, TopologicalOrderPreservesPerQubitSequences) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Circuit c = oracle::random_circuit(rng, 5, 30);
        const ir::DependencyDag dag(c);
        const auto order = dag.topological_order();
        ASSERT_EQ(order.size(), c.size());
        for (int q = 0; q < 5; ++q) {
            std::vector<int> original;
            std::vector<int> reordered;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i].acts_on(q)) {
                    original.push_back(static_cast<int>(i));
                }
            }
            for (int g : order) {
                if (c[static_cast<std::size_t>(g)].acts_on(q)) {
                    reordered.push_back(g);
                }
            }
            EXPECT_EQ(original, reordered);
        }
        // Every edge goes forward and in-degree never exceeds arity.
        std::vector<int> indeg(c.size(), 0);
        for (const auto &e : dag.edges()) {
            EXPECT_LT(e.from, e.to);
            ++indeg[static_cast<std::size_t>(e.to)];
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_LE(indeg[i], c[i].arity());
        }
    }
}

TEST(Dag, RemoveRequiresPrefixClosedSets) {
    Circuit c(2);
    c.add(Gate::h(0));
    c.add(Gate::cnot(0, 1));
    ir::DependencyDag dag(c);
    const std::vector<int> bad{1};
    EXPECT_THROW(dag.remove(bad), InvariantError);
    const std::vector<int> good{0, 1};
    dag.remove(good);
    EXPECT_TRUE(dag.empty());
}

TEST(Merge, RotationsAdd) {
    Circuit c(1);
    c.add(Gate::rz(0, 0.3));
    c.add(Gate::rz(0, 0.4));
    const Circuit m = ir::merge_single_qubit_runs(c);
    ASSERT_EQ(m.size(), 1U);
    EXPECT_EQ(m[0].kind, GateKind::U3);
    Circuit expect(1);
    expect.add(Gate::rz(0, 0.7));
    EXPECT_LT(reference_distance(reference_unitary(m), reference_unitary(expect), 2), 1e-14);
}

TEST(Merge, HadamardPairVanishes) {
    Circuit c(1);
    c.add(Gate::h(0));
    c.add(Gate::h(0));
    EXPECT_EQ(ir::merge_single_qubit_runs(c).size(), 0U);
}

TEST(Merge, PreservesUnitaryAndTwoQubitGates) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed + 100);
        const int n = 1 + static_cast<int>(uniform_index(rng, 6));
        const Circuit c = oracle::random_circuit(rng, n, 20, 0.2);
        const Circuit m = ir::merge_single_qubit_runs(c);
        const std::size_t d = std::size_t{1} << n;
        EXPECT_LT(reference_distance(reference_unitary(c), reference_unitary(m), d), 1e-12);
        EXPECT_LE(ir::single_qubit_count(m), ir::single_qubit_count(c));
        std::vector<Gate> two_a;
        std::vector<Gate> two_b;
        for (const Gate &g : c.gates()) {
            if (g.is_two_qubit()) {
                two_a.push_back(g);
            }
        }
        for (const Gate &g : m.gates()) {
            if (g.is_two_qubit()) {
                two_b.push_back(g);
            }
        }
        EXPECT_EQ(two_a, two_b);
        EXPECT_EQ(ir::merge_single_qubit_runs(m), m) << "not idempotent, seed " << seed;
    }
}

TEST(Merge, KeepsMeasurements) {
    Circuit c(2, 2);
    c.add(Gate::h(0));
    c.add(Gate::cnot(0, 1));
    c.measure(0, 1);
    c.measure(1, 0);
    const Circuit m = ir::merge_single_qubit_runs(c);
    EXPECT_EQ(m.measurements(), c.measurements());
}

TEST(Decompose, ControlledPhaseMatchesDiagonal) {
    for (double lambda : {kPi / 2, kPi / 8, -1.3}) {
        Circuit c(2);
        ir::append_cphase(c, 0, 1, lambda);
        EXPECT_EQ(ir::cnot_count(c), 2);
        oracle::Dense want = oracle::Dense::identity(4);
        want(3, 3) = std::exp(oracle::C(0, lambda));
        EXPECT_LT(reference_distance(want, reference_unitary(c), 4), 1e-14);
    }
}

TEST(Decompose, RzzIsDiagonalPhase) {
    const double theta = 0.77;
    Circuit c(2);
    ir::append_rzz(c, 1, 0, theta);
    oracle::Dense want(4);
    for (std::size_t x = 0; x < 4; ++x) {
        const int parity = static_cast<int>(((x >> 0) ^ (x >> 1)) & 1U);
        want(x, x) = std::exp(oracle::C(0, (parity ? 0.5 : -0.5) * theta));
    }
    EXPECT_LT(reference_distance(want, reference_unitary(c), 4), 1e-14);
}

TEST(Decompose, ToffoliIsExactPermutation) {
    Circuit c(3);
    ir::append_ccx(c, 0, 1, 2);
    EXPECT_EQ(ir::cnot_count(c), 6);
    const oracle::Dense u = reference_unitary(c);
    for (std::size_t col = 0; col < 8; ++col) {
        const std::size_t row = (col & 3U) == 3U ? col ^ 4U : col;
        for (std::size_t r = 0; r < 8; ++r) {
            EXPECT_NEAR(std::abs(u(r, col) - oracle::C(r == row ? 1.0 : 0.0, 0.0)), 0.0, 1e-14)
                << r << "," << col;
        }
    }
}

} // namespace
