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
 * @file optimizer.hpp
 * Parameter fitting for synthesis templates.
 *
 * BFGS with a dense inverse-Hessian estimate and Armijo backtracking, run
 * from several starting points. The first start is all zeros; later starts
 * are uniform in [-π, π) drawn from a generator seeded by
 * derive_seed(seed, restart).
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qgo/sim/matrix.hpp"
#include "qgo/synthesis/template.hpp"

namespace qgo::synth {

struct BfgsOptions {
    int max_iterations{400};
    double gradient_tolerance{1e-10};
    /// Stop after `stall_iterations` consecutive steps that lower f by at
    /// most `stall_decrease`. Finite-difference noise keeps the gradient
    /// norm near 1e-9 at a minimum, so the gradient test alone rarely fires.
    double stall_decrease{1e-15};
    int stall_iterations{3};
};

struct BfgsResult {
    std::vector<double> x;
    double value{0.0};
    int iterations{0};
    bool converged{false}; // gradient norm fell below tolerance
};

/// f(x) alone.
using ValueFn = std::function<double(std::span<const double>)>;
/// f(x), writing the gradient into the second argument.
using ValueGradFn = std::function<double(std::span<const double>, std::span<double>)>;

/**
 * Minimizes from `x0`. Stops on a small gradient, the iteration cap, a
 * stall, or when backtracking cannot decrease f even along the
 * steepest-descent direction.
 */
[[nodiscard]] BfgsResult minimize_bfgs(const ValueFn &value,
                                       const ValueGradFn &value_grad,
                                       std::vector<double> x0,
                                       const BfgsOptions &options = {});

struct OptimizerOptions {
    int restarts{8};
    BfgsOptions bfgs{};
    double fd_step{1e-7};
    /// Skip remaining restarts once the distance is at or below this value;
    /// negative runs them all.
    double stop_distance{-1.0};
};

struct OptimizeResult {
    std::vector<double> params;
    double distance{1.0}; // 1 - |Tr(T^dagger V)| / d, clamped to [0, 1]
    int restarts_run{0};
};

/// Best parameters for `tpl` against `target` over all restarts.
[[nodiscard]] OptimizeResult optimize_params(const Template &tpl,
                                             const sim::Matrix &target,
                                             std::uint64_t seed,
                                             const OptimizerOptions &options = {});

} // namespace qgo::synth
