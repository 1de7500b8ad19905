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
 * @file circuit.hpp
 * Gate and circuit value types.
 *
 * A Circuit is an ordered list of unitary gates over `num_qubits` qubits
 * followed by a terminal measurement layer. Gate order is the program order
 * and is always a valid topological order of the gate dependency DAG.
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qgo::ir {

using Qubit = int;

enum class GateKind : std::uint8_t {
    RX,
    RY,
    RZ,
    U3,
    H,
    X,
    CNOT,
    SWAP,
    Measure,
    Barrier,
};

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
[[nodiscard]] int gate_arity(GateKind kind) noexcept;
[[nodiscard]] int gate_param_count(GateKind kind) noexcept;

/**
 * A single gate. Two-qubit gates store (control, target) for CNOT and the
 * two swapped qubits for SWAP. Unused qubit and parameter slots are zero so
 * that defaulted equality is exact gate-for-gate equality.
 */
struct Gate {
    GateKind kind{GateKind::H};
    std::array<Qubit, 2> qubits{};
    std::array<double, 3> params{};

    [[nodiscard]] static Gate rx(Qubit q, double theta) {
        return {GateKind::RX, {q, 0}, {theta, 0, 0}};
    }
    [[nodiscard]] static Gate ry(Qubit q, double theta) {
        return {GateKind::RY, {q, 0}, {theta, 0, 0}};
    }
    [[nodiscard]] static Gate rz(Qubit q, double theta) {
        return {GateKind::RZ, {q, 0}, {theta, 0, 0}};
    }
    [[nodiscard]] static Gate u3(Qubit q, double theta, double phi,
                                 double lambda) {
        return {GateKind::U3, {q, 0}, {theta, phi, lambda}};
    }
    [[nodiscard]] static Gate h(Qubit q) { return {GateKind::H, {q, 0}, {}}; }
    [[nodiscard]] static Gate x(Qubit q) { return {GateKind::X, {q, 0}, {}}; }
    [[nodiscard]] static Gate cnot(Qubit control, Qubit target) {
        return {GateKind::CNOT, {control, target}, {}};
    }
    [[nodiscard]] static Gate swap(Qubit a, Qubit b) {
        return {GateKind::SWAP, {a, b}, {}};
    }

    [[nodiscard]] int arity() const noexcept { return gate_arity(kind); }
    [[nodiscard]] bool is_two_qubit() const noexcept { return arity() == 2; }
    [[nodiscard]] bool is_unitary() const noexcept {
        return kind != GateKind::Measure && kind != GateKind::Barrier;
    }
    [[nodiscard]] std::span<const Qubit> wires() const noexcept {
        return {qubits.data(), static_cast<std::size_t>(arity())};
    }
    [[nodiscard]] std::span<const double> angles() const noexcept {
        return {params.data(), static_cast<std::size_t>(gate_param_count(kind))};
    }
    [[nodiscard]] bool acts_on(Qubit q) const noexcept;

    bool operator==(const Gate &) const = default;
};

struct Measurement {
    Qubit qubit{};
    int clbit{};
    bool operator==(const Measurement &) const = default;
};

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int num_qubits, int num_clbits = 0);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] int num_clbits() const noexcept { return num_clbits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const std::vector<Measurement> &measurements() const noexcept {
        return measurements_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const Gate &operator[](std::size_t i) const {
        return gates_[i];
    }

    /// Appends a unitary gate. Throws InputError on out-of-range or repeated
    /// qubits, on a measured qubit, or on a non-unitary kind.
    void add(const Gate &gate);

    /// Records a terminal measurement of `qubit` into `clbit`.
    void measure(Qubit qubit, int clbit);

    /// Appends all gates of `other` with local qubit i relabeled to
    /// `relabel[i]`.
    void append_mapped(const Circuit &other, std::span<const Qubit> relabel);

    void set_measurements(std::vector<Measurement> measurements,
                          int num_clbits);
    void clear_measurements() noexcept { measurements_.clear(); }

    bool operator==(const Circuit &) const = default;

  private:
    int num_qubits_{0};
    int num_clbits_{0};
    std::vector<Gate> gates_;
    std::vector<Measurement> measurements_;
    std::vector<bool> measured_;
};

/// CNOT cost of a gate list: CNOT counts 1, SWAP counts 3 (its lowering).
[[nodiscard]] int cnot_count(std::span<const Gate> gates) noexcept;
[[nodiscard]] inline int cnot_count(const Circuit &c) noexcept {
    return cnot_count(c.gates());
}

/// Number of single-qubit unitary gates.
[[nodiscard]] int single_qubit_count(const Circuit &c) noexcept;

/// Circuit depth counting every unitary gate as one layer on its qubits.
[[nodiscard]] int depth(const Circuit &c);

/// Replaces each SWAP(a,b) by CNOT(a,b) CNOT(b,a) CNOT(a,b).
[[nodiscard]] Circuit lower_swaps(const Circuit &c);

} // namespace qgo::ir
