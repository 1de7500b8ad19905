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

#include "qgo/error.hpp"
#include "qgo/partitioner.hpp"
#include "qgo/sim/kernels.hpp"
#include "qgo/sim/matrix.hpp"
#include "qgo/sim/simulate.hpp"
#include "oracle.hpp"

namespace {

using namespace qgo;
using ir::Circuit;
using ir::Gate;
using sim::Complex;
using sim::Matrix;
using oracle::reference_distance;
using oracle::reference_unitary;

constexpr double kPi = std::numbers::pi;

double max_diff(const Matrix &a, const oracle::Dense &b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

TEST(GateMatrix, MatchesTextbookDefinitions) {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const Gate g = oracle::random_1q(rng, 0);
        const Matrix m = sim::gate_matrix(g);
        const auto t = oracle::textbook_1q(g);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                EXPECT_NEAR(std::abs(m(r, c) - t[r][c]), 0.0, 1e-15);
            }
        }
        EXPECT_LT(m.unitarity_error(), 1e-12);
    }
}

TEST(GateMatrix, Examples) {
    const Matrix rz0 = sim::gate_matrix(Gate::rz(0, 0.0));
    EXPECT_LT(sim::distance(rz0, Matrix::identity(2)), 1e-16);
    EXPECT_EQ(rz0, Matrix::identity(2));
    const Matrix x = sim::gate_matrix(Gate::x(0));
    EXPECT_EQ(x(0, 1), Complex(1.0));
    EXPECT_EQ(x(1, 0), Complex(1.0));
    EXPECT_EQ(x(0, 0), Complex(0.0));
    EXPECT_LT(sim::distance(sim::gate_matrix(Gate::u3(0, kPi / 2, 0.0, kPi)),
                            sim::gate_matrix(Gate::h(0))),
              1e-15);
}

TEST(GateMatrix, CnotIsControlMajor) {
    const Matrix m = sim::gate_matrix(Gate::cnot(5, 9));
    // Basis 2*control + target: |10> <-> |11>.
    EXPECT_EQ(m(3, 2), Complex(1.0));
    EXPECT_EQ(m(2, 3), Complex(1.0));
    EXPECT_EQ(m(0, 0), Complex(1.0));
    EXPECT_EQ(m(1, 1), Complex(1.0));
    EXPECT_LT(m.unitarity_error(), 1e-15);
    EXPECT_THROW((void)sim::gate_matrix(Gate{ir::GateKind::Measure, {0, 0}, {}}), InputError);
}

TEST(Matrix, KronPlacesFirstFactorHigh) {
    const Matrix x = sim::gate_matrix(Gate::x(0));
    const Matrix id = Matrix::identity(2);
    const Matrix k = sim::kron(x, id); // X on the high bit
    Circuit c(2);
    c.add(Gate::x(1));
    EXPECT_LT(max_diff(k, reference_unitary(c)), 1e-15);
}

TEST(Matrix, RandomUnitaryIsUnitary) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        EXPECT_LT(sim::random_unitary(8, s).unitarity_error(), 1e-12);
    }
}

TEST(Kernels, U3AnglesRoundTrip) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Matrix u = sim::random_unitary(2, s);
        const sim::Mat2 m{u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
        const auto a = sim::u3_angles(m);
        EXPECT_GE(a[0], 0.0);
        EXPECT_LE(a[0], kPi + 1e-12);
        const Matrix back = sim::gate_matrix(Gate::u3(0, a[0], a[1], a[2]));
        EXPECT_LT(sim::distance(u, back), 1e-14);
    }
}

TEST(BlockUnitary, EmptyBlockIsIdentity) {
    const Circuit src(5);
    partition::Block b{{{0, 2, 4}}, {}, 0};
    EXPECT_EQ(sim::block_unitary(b, src), Matrix::identity(8));
}

TEST(BlockUnitary, UsesSortedGroupPositions) {
    // CNOT with control q7 (position 1) and target q3 (position 0) in group
    // {3, 7}: flips bit 0 when bit 1 is set.
    Circuit src(8);
    src.add(Gate::cnot(7, 3));
    partition::Block b{{{3, 7}}, {0}, 1};
    const Matrix u = sim::block_unitary(b, src);
    Circuit local(2);
    local.add(Gate::cnot(1, 0));
    EXPECT_LT(max_diff(u, reference_unitary(local)), 1e-15);
    EXPECT_EQ(u(3, 2), Complex(1.0));
    EXPECT_EQ(u(1, 1), Complex(1.0));
}

TEST(BlockUnitary, InversePairCancels) {
    Circuit src(3);
    src.add(Gate::rx(1, 0.9));
    src.add(Gate::rx(1, -0.9));
    partition::Block b{{{0, 1, 2}}, {0, 1}, 0};
    EXPECT_LT(sim::distance(sim::block_unitary(b, src), Matrix::identity(8)), 1e-15);
}

TEST(BlockUnitary, ConcatenationMultiplies) {
    Rng rng(11);
    const Circuit c = oracle::random_circuit(rng, 3, 24);
    std::vector<int> first;
    std::vector<int> second;
    std::vector<int> all;
    for (int i = 0; i < 24; ++i) {
        (i < 10 ? first : second).push_back(i);
        all.push_back(i);
    }
    const topo::QubitGroup g{{0, 1, 2}};
    const Matrix u1 = sim::block_unitary({g, first, 0}, c);
    const Matrix u2 = sim::block_unitary({g, second, 0}, c);
    const Matrix u = sim::block_unitary({g, all, 0}, c);
    const Matrix prod = u2 * u1;
    double m = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t k = 0; k < 8; ++k) {
            m = std::max(m, std::abs(prod(r, k) - u(r, k)));
        }
    }
    EXPECT_LT(m, 1e-13);
}

TEST(BlockUnitary, RejectsGatesOutsideGroup) {
    Circuit src(3);
    src.add(Gate::cnot(0, 2));
    EXPECT_THROW((void)sim::block_unitary({{{0, 1}}, {0}, 1}, src), InvariantError);
}

TEST(Distance, Properties) {
    const Matrix u = sim::random_unitary(4, 1);
    const Matrix v = sim::random_unitary(4, 2);
    EXPECT_LT(sim::distance(u, u), 1e-15);
    Matrix phased = u;
    for (Complex &z : phased.data()) {
        z *= std::polar(1.0, 0.83);
    }
    EXPECT_LT(sim::distance(u, phased), 1e-15);
    EXPECT_NEAR(sim::distance(u, v), sim::distance(v, u), 1e-15);
    EXPECT_LE(sim::distance(u, v), 1.0);
    EXPECT_NEAR(sim::distance(u, v), reference_distance(u, v, 4), 1e-14);

    Circuit xi(2);
    xi.add(Gate::x(1));
    EXPECT_NEAR(sim::distance(Matrix::identity(4), sim::circuit_unitary(xi)), 1.0, 1e-15);
    EXPECT_THROW((void)sim::distance(Matrix::identity(2), Matrix::identity(4)), InputError);
}

TEST(Simulate, Basics) {
    Circuit empty(2);
    const sim::StateVector in = sim::StateVector::random(2, 5);
    const sim::StateVector out = sim::simulate(empty, in);
    EXPECT_LT(sim::state_infidelity(in, out), 1e-15);

    Circuit h(1);
    h.add(Gate::h(0));
    const sim::StateVector plus = sim::simulate(h, sim::StateVector::zero(1));
    EXPECT_NEAR(plus[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(plus[1].real(), 1.0 / std::sqrt(2.0), 1e-15);

    EXPECT_THROW((void)sim::simulate(Circuit(21), sim::StateVector::zero(21)), InputError);
    EXPECT_THROW((void)sim::simulate(Circuit(2), sim::StateVector::zero(3)), InputError);
}

TEST(Simulate, AgreesWithDenseOracleOnEightQubits) {
    Rng rng(8);
    const Circuit c = oracle::random_circuit(rng, 8, 25, 0.4, true);
    const oracle::Dense u = reference_unitary(c);
    const sim::StateVector in = sim::StateVector::random(8, 21);
    const sim::StateVector out = sim::simulate(c, in);
    double m = 0.0;
    for (std::size_t r = 0; r < 256; ++r) {
        Complex acc{};
        for (std::size_t k = 0; k < 256; ++k) {
            acc += u(r, k) * in[k];
        }
        m = std::max(m, std::abs(acc - out[r]));
    }
    EXPECT_LT(m, 1e-12);
    EXPECT_LT(max_diff(sim::circuit_unitary(c), u), 1e-12);
}

TEST(Simulate, PreservesNormOverLongCircuits) {
    Rng rng(9);
    const Circuit c = oracle::random_circuit(rng, 6, 10000);
    const sim::StateVector out = sim::simulate(c, sim::StateVector::zero(6));
    EXPECT_NEAR(out.norm(), 1.0, 1e-10);
}

TEST(StateInfidelity, Extremes) {
    EXPECT_NEAR(sim::state_infidelity(sim::StateVector::basis(3, 2), sim::StateVector::basis(3, 2)),
                0.0, 1e-16);
    EXPECT_NEAR(sim::state_infidelity(sim::StateVector::basis(3, 2), sim::StateVector::basis(3, 5)),
                1.0, 1e-16);
    EXPECT_THROW((void)sim::state_infidelity(sim::StateVector::zero(2), sim::StateVector::zero(3)),
                 InputError);
}

TEST(PermuteQubits, MovesBits) {
    // Basis |x> with x = 0b011 under perm {2, 0, 1}: bit0 -> bit2, bit1 -> bit0.
    const std::vector<int> perm{2, 0, 1};
    const sim::StateVector s = sim::permute_qubits(sim::StateVector::basis(3, 0b011), perm);
    EXPECT_NEAR(std::abs(s[0b101]), 1.0, 1e-16);
}

} // namespace
