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

#pragma once

#include <span>
#include <vector>

#include "qgo/sim/kernels.hpp"
#include "qgo/sim/matrix.hpp"
#include "qgo/synthesis/template.hpp"

namespace qgo::synth {

/**
 * f(θ) = 1 - |Tr(T^dagger V(θ))| / d for a template unitary V and target T.
 *
 * The gradient is a central finite difference per parameter. Because the
 * trace is linear in each single gate, Tr(T^dagger V) = Σ g[x][y] w[y][x]
 * with w the 2x2 partial trace of (prefix · T^dagger · suffix) over the other
 * qubits. One forward and one backward sweep give every w, after which each
 * perturbed objective costs O(1).
 *
 * Holds scratch buffers: one instance per thread.
 */
class TemplateObjective {
  public:
    TemplateObjective(const Template &tpl, const sim::Matrix &target);

    [[nodiscard]] std::size_t num_params() const noexcept { return num_params_; }

    /// f evaluated by direct accumulation of V.
    [[nodiscard]] double value(std::span<const double> params) const;

    /// f and its central-difference gradient with step `h`.
    double value_and_gradient(std::span<const double> params,
                              std::span<double> gradient, double h) const;

  private:
    struct Op {
        bool is_cnot;
        int a; // qubit axis, or control
        int b; // target (CNOT only)
        std::size_t offset; // first parameter (U3 only)
    };

    [[nodiscard]] double from_trace(sim::Complex tr) const noexcept;

    std::vector<Op> ops_;
    std::size_t num_params_;
    std::size_t dim_;
    sim::Matrix target_;
    sim::Matrix target_adjoint_;
    mutable std::vector<sim::Complex> prefixes_;
    mutable std::vector<sim::Complex> suffix_;
};

} // namespace qgo::synth
