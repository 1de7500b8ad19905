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

#include "qgo/sim/kernels.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qgo/error.hpp"

namespace qgo::sim {

using ir::Gate;
using ir::GateKind;

namespace {
constexpr Complex I{0.0, 1.0};
} // namespace

Mat2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {c, -I * s, -I * s, c};
}

Mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {c, -s, s, c};
}

Mat2 rz_matrix(double theta) {
    return {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)};
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {c, -std::polar(s, lambda), std::polar(s, phi),
            std::polar(c, phi + lambda)};
}

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::array<double, 3> u3_angles(const Mat2 &u) {
    // Normalize to SU(2): V = U / sqrt(det U). Then
    // V = [[e^{-i(φ+λ)/2} c, -e^{-i(φ-λ)/2} s], [e^{i(φ-λ)/2} s, e^{i(φ+λ)/2} c]].
    // Each angle sum is read from the entry it multiplies, so a noisy phase
    // only appears next to a vanishing magnitude.
    const Complex det = u[0] * u[3] - u[1] * u[2];
    const Complex scale = 1.0 / std::sqrt(det);
    const Complex v00 = u[0] * scale;
    const Complex v10 = u[2] * scale;
    const Complex v11 = u[3] * scale;
    const double theta = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
    const double sum_half = std::arg(v11);
    const double diff_half = std::arg(v10);
    return {theta, sum_half + diff_half, sum_half - diff_half};
}

bool is_identity_up_to_phase(const Mat2 &u, double tol) {
    const double mag = std::abs(u[0]);
    if (mag == 0.0) {
        return false;
    }
    const Complex ph = std::conj(u[0]) / mag;
    return std::abs(u[0] * ph - 1.0) <= tol && std::abs(u[3] * ph - 1.0) <= tol &&
           std::abs(u[1]) <= tol && std::abs(u[2]) <= tol;
}

Mat2 single_qubit_matrix(const Gate &g) {
    constexpr double r = std::numbers::sqrt2 / 2;
    switch (g.kind) {
    case GateKind::RX:
        return rx_matrix(g.params[0]);
    case GateKind::RY:
        return ry_matrix(g.params[0]);
    case GateKind::RZ:
        return rz_matrix(g.params[0]);
    case GateKind::U3:
        return u3_matrix(g.params[0], g.params[1], g.params[2]);
    case GateKind::H:
        return {r, r, r, -r};
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    default:
        throw InputError("gate " + std::string(ir::gate_name(g.kind)) +
                         " is not a single-qubit unitary");
    }
}

Matrix gate_matrix(const Gate &g) {
    if (!g.is_unitary()) {
        throw InputError("gate " + std::string(ir::gate_name(g.kind)) +
                         " has no unitary matrix");
    }
    if (g.kind == GateKind::CNOT) {
        Matrix m(4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
        return m;
    }
    if (g.kind == GateKind::SWAP) {
        Matrix m(4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
        return m;
    }
    const Mat2 u = single_qubit_matrix(g);
    return Matrix(2, {u.begin(), u.end()});
}

void apply_1q(std::span<Complex> data, std::size_t stride, int axis,
              const Mat2 &m) {
    const std::size_t rows = data.size() / stride;
    const std::size_t bit = std::size_t{1} << axis;
    for (std::size_t base = 0; base < rows; base += 2 * bit) {
        for (std::size_t r = base; r < base + bit; ++r) {
            Complex *r0 = &data[r * stride];
            Complex *r1 = &data[(r | bit) * stride];
            for (std::size_t c = 0; c < stride; ++c) {
                const Complex a = r0[c];
                const Complex b = r1[c];
                r0[c] = m[0] * a + m[1] * b;
                r1[c] = m[2] * a + m[3] * b;
            }
        }
    }
}

void apply_2q(std::span<Complex> data, std::size_t stride, int axis_first,
              int axis_second, const Mat4 &m) {
    const std::size_t rows = data.size() / stride;
    const std::size_t bf = std::size_t{1} << axis_first;
    const std::size_t bs = std::size_t{1} << axis_second;
    for (std::size_t r = 0; r < rows; ++r) {
        if ((r & bf) || (r & bs)) {
            continue;
        }
        Complex *p[4] = {&data[r * stride], &data[(r | bs) * stride],
                         &data[(r | bf) * stride], &data[(r | bf | bs) * stride]};
        for (std::size_t c = 0; c < stride; ++c) {
            const Complex v[4] = {p[0][c], p[1][c], p[2][c], p[3][c]};
            for (int i = 0; i < 4; ++i) {
                p[i][c] = m[static_cast<std::size_t>(4 * i)] * v[0] +
                          m[static_cast<std::size_t>(4 * i + 1)] * v[1] +
                          m[static_cast<std::size_t>(4 * i + 2)] * v[2] +
                          m[static_cast<std::size_t>(4 * i + 3)] * v[3];
            }
        }
    }
}

void apply_cnot(std::span<Complex> data, std::size_t stride, int control,
                int target) {
    const std::size_t rows = data.size() / stride;
    const std::size_t bc = std::size_t{1} << control;
    const std::size_t bt = std::size_t{1} << target;
    for (std::size_t r = 0; r < rows; ++r) {
        if ((r & bc) && !(r & bt)) {
            std::swap_ranges(&data[r * stride], &data[r * stride] + stride,
                             &data[(r | bt) * stride]);
        }
    }
}

void apply_swap(std::span<Complex> data, std::size_t stride, int a, int b) {
    const std::size_t rows = data.size() / stride;
    const std::size_t ba = std::size_t{1} << a;
    const std::size_t bb = std::size_t{1} << b;
    for (std::size_t r = 0; r < rows; ++r) {
        if ((r & ba) && !(r & bb)) {
            const std::size_t other = (r & ~ba) | bb;
            std::swap_ranges(&data[r * stride], &data[r * stride] + stride,
                             &data[other * stride]);
        }
    }
}

void apply_gate(std::span<Complex> data, std::size_t stride, const Gate &g) {
    switch (g.kind) {
    case GateKind::CNOT:
        apply_cnot(data, stride, g.qubits[0], g.qubits[1]);
        return;
    case GateKind::SWAP:
        apply_swap(data, stride, g.qubits[0], g.qubits[1]);
        return;
    case GateKind::Measure:
    case GateKind::Barrier:
        return;
    default:
        apply_1q(data, stride, g.qubits[0], single_qubit_matrix(g));
    }
}

void apply_1q_right(std::span<Complex> data, std::size_t dim, int axis,
                    const Mat2 &m) {
    const std::size_t bit = std::size_t{1} << axis;
    for (std::size_t r = 0; r < dim; ++r) {
        Complex *row = &data[r * dim];
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t c = base; c < base + bit; ++c) {
                const Complex a = row[c];
                const Complex b = row[c | bit];
                row[c] = a * m[0] + b * m[2];
                row[c | bit] = a * m[1] + b * m[3];
            }
        }
    }
}

void apply_cnot_right(std::span<Complex> data, std::size_t dim, int control,
                      int target) {
    const std::size_t bc = std::size_t{1} << control;
    const std::size_t bt = std::size_t{1} << target;
    for (std::size_t r = 0; r < dim; ++r) {
        Complex *row = &data[r * dim];
        for (std::size_t c = 0; c < dim; ++c) {
            if ((c & bc) && !(c & bt)) {
                std::swap(row[c], row[c | bt]);
            }
        }
    }
}

} // namespace qgo::sim
