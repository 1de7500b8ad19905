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
 * @file kernels.hpp
 * Gate matrices and in-place gate application.
 *
 * Axis convention, fixed for the whole library: in a register of qubits
 * q_0 < q_1 < ... the qubit at sorted position j is bit j of the basis
 * index (position 0 is least significant).
 *
 * The apply_* kernels act on "rows": `data` holds 2^n rows of `stride`
 * contiguous entries each, and the gate mixes rows. With stride 1 this is a
 * statevector update; with stride 2^n on a row-major matrix it is a left
 * multiplication U <- G U.
 */
#pragma once

#include <array>
#include <span>

#include "qgo/ir/circuit.hpp"
#include "qgo/sim/matrix.hpp"

namespace qgo::sim {

/// Row-major 2x2.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 on (first, second) with basis index 2*bit(first)+bit(second).
using Mat4 = std::array<Complex, 16>;

[[nodiscard]] Mat2 rx_matrix(double theta);
[[nodiscard]] Mat2 ry_matrix(double theta);
[[nodiscard]] Mat2 rz_matrix(double theta);
/// U3(θ,φ,λ) = [[cos θ/2, -e^{iλ} sin θ/2], [e^{iφ} sin θ/2, e^{i(φ+λ)} cos θ/2]].
[[nodiscard]] Mat2 u3_matrix(double theta, double phi, double lambda);
[[nodiscard]] Mat2 mat2_mul(const Mat2 &a, const Mat2 &b);

/// (θ, φ, λ) with U3(θ,φ,λ) equal to `u` up to global phase; θ in [0, π].
[[nodiscard]] std::array<double, 3> u3_angles(const Mat2 &u);

/// True if `u` is e^{iα} I within `tol` per entry.
[[nodiscard]] bool is_identity_up_to_phase(const Mat2 &u, double tol);

/// 2x2 matrix of a single-qubit gate. Throws InputError otherwise.
[[nodiscard]] Mat2 single_qubit_matrix(const ir::Gate &g);

/// 2x2 or 4x4 matrix of a unitary gate; two-qubit gates use the gate's own
/// qubit order, first qubit most significant (control-major for CNOT).
/// MEASURE and BARRIER are rejected with InputError.
[[nodiscard]] Matrix gate_matrix(const ir::Gate &g);

void apply_1q(std::span<Complex> data, std::size_t stride, int axis,
              const Mat2 &m);
void apply_2q(std::span<Complex> data, std::size_t stride, int axis_first,
              int axis_second, const Mat4 &m);
void apply_cnot(std::span<Complex> data, std::size_t stride, int control,
                int target);
void apply_swap(std::span<Complex> data, std::size_t stride, int a, int b);

/// Applies `g`, whose qubit fields are already axis indices.
void apply_gate(std::span<Complex> data, std::size_t stride, const ir::Gate &g);

/// Right multiplication M <- M (g on `axis`) of a row-major dim x dim matrix.
void apply_1q_right(std::span<Complex> data, std::size_t dim, int axis,
                    const Mat2 &m);
void apply_cnot_right(std::span<Complex> data, std::size_t dim, int control,
                      int target);

} // namespace qgo::sim
