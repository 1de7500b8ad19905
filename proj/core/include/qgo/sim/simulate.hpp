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
 * @file simulate.hpp
 * Statevector simulation, unitary accumulation and the distance metrics
 * used by synthesis and verification.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qgo/ir/circuit.hpp"
#include "qgo/sim/matrix.hpp"

namespace qgo::partition {
struct Block;
}

namespace qgo::sim {

inline constexpr int kMaxSimulatedQubits = 20;
inline constexpr int kMaxUnitaryQubits = 12;

class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amplitudes);

    /// |0...0> on n qubits.
    [[nodiscard]] static StateVector zero(int num_qubits);
    [[nodiscard]] static StateVector basis(int num_qubits, std::uint64_t index);
    /// Haar-random state (normalized complex Gaussian vector).
    [[nodiscard]] static StateVector random(int num_qubits, std::uint64_t seed);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] double norm() const noexcept;
    /// |amplitude|^2 per basis index.
    [[nodiscard]] std::vector<double> probabilities() const;

  private:
    int num_qubits_{0};
    std::vector<Complex> amps_;
};

/// Applies every unitary gate of `c` to `input`; measurements are ignored.
/// Throws InputError above kMaxSimulatedQubits or on a size mismatch.
[[nodiscard]] StateVector simulate(const ir::Circuit &c, StateVector input);

/// 1 - |<a|b>|^2.
[[nodiscard]] double state_infidelity(const StateVector &a,
                                      const StateVector &b);

/// Phase-invariant distance 1 - |Tr(U^dagger V)| / dim, in [0, 1].
[[nodiscard]] double distance(const Matrix &u, const Matrix &v);

/// Unitary of `gates` restricted to `group` (sorted qubit list). The qubit
/// at sorted position j is axis j. Gates are applied in list order.
[[nodiscard]] Matrix gates_unitary(std::span<const ir::Gate> gates,
                                   std::span<const ir::Qubit> group);

/// Unitary of a partition block over its group.
[[nodiscard]] Matrix block_unitary(const partition::Block &block,
                                   const ir::Circuit &source);

/// Full 2^n x 2^n unitary, n <= kMaxUnitaryQubits.
[[nodiscard]] Matrix circuit_unitary(const ir::Circuit &c);

/// Reorders qubits: the amplitude of basis state x moves to the index whose
/// bit perm[j] equals bit j of x.
[[nodiscard]] StateVector permute_qubits(const StateVector &s,
                                         std::span<const int> perm);

} // namespace qgo::sim
