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

/**
 * @file benchgen.hpp
 * Deterministic benchmark circuits: QFT, Trotterized transverse-field Ising
 * evolution, QAOA for MaxCut and a ripple-carry adder. Two-qubit rotations
 * and Toffolis are lowered to CNOTs with fixed decompositions so CNOT counts
 * are reproducible.
 */
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/topology.hpp"

namespace qgo::bench {

/**
 * QFT on n qubits with qubit n-1 as the most significant bit: the unitary is
 * the DFT matrix F[y][x] = exp(2πi xy / 2^n) / sqrt(2^n) up to global phase.
 * CNOT count 2 * C(n, 2) + 3 * floor(n / 2).
 */
[[nodiscard]] ir::Circuit gen_qft(int n);

/// First-order Trotter steps of H = Σ Z_i Z_{i+1} + Σ X_i on a chain:
/// per step RZZ(2 dt) on each neighbouring pair, then RX(2 dt) on every qubit.
[[nodiscard]] ir::Circuit gen_tfim(int n, int steps, double dt);

/// Ring plus seeded random chords, every vertex of degree at most 3. Sorted.
[[nodiscard]] std::vector<topo::Edge> maxcut_graph(int n, std::uint64_t graph_seed);

/// H on every qubit, then per layer RZZ(2γ) on each graph edge and RX(2β)
/// on every qubit; γ and β per layer drawn from the seed.
[[nodiscard]] ir::Circuit gen_qaoa_maxcut(int n, int layers, std::uint64_t graph_seed);

/**
 * In-place ripple-carry adder on 2 * bits + 2 qubits laid out as
 * [c, b0, a0, b1, a1, ..., z]: maps |a, b, c=0, z=0> to |a, a+b mod 2^bits,
 * 0, carry>. CNOT count 16 * bits + 1.
 */
[[nodiscard]] ir::Circuit gen_adder(int bits);

/// Qubit positions of the adder layout.
[[nodiscard]] constexpr int adder_a(int i) noexcept { return 2 + 2 * i; }
[[nodiscard]] constexpr int adder_b(int i) noexcept { return 1 + 2 * i; }
[[nodiscard]] constexpr int adder_carry_out(int bits) noexcept { return 2 * bits + 1; }

/// Family by name (qft, tfim, qaoa, adder) with default instance parameters:
/// `size` is the qubit count, except for adder where it is the operand width.
/// tfim uses 3 steps of dt = 0.1, qaoa 2 layers. Throws InputError.
[[nodiscard]] ir::Circuit generate(std::string_view family, int size,
                                   std::uint64_t seed = 0);

} // namespace qgo::bench
