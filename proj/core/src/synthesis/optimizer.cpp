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

#include "qgo/synthesis/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qgo/rng.hpp"
#include "qgo/synthesis/objective.hpp"

namespace qgo::synth {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void reset_identity(std::vector<double> &h, std::size_t n) {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        h[i * n + i] = 1.0;
    }
}

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;

} // namespace

BfgsResult minimize_bfgs(const ValueFn &value, const ValueGradFn &value_grad,
                         std::vector<double> x0, const BfgsOptions &options) {
    const std::size_t n = x0.size();
    BfgsResult r;
    r.x = std::move(x0);
    std::vector<double> g(n);
    double f = value_grad(r.x, g);
    std::vector<double> h(n * n);
    reset_identity(h, n);
    bool h_is_identity = true;
    int stalled = 0;

    std::vector<double> p(n), x_new(n), g_new(n), s(n), y(n), hy(n);
    for (; r.iterations < options.max_iterations; ++r.iterations) {
        if (std::sqrt(dot(g, g)) < options.gradient_tolerance) {
            r.converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc -= h[i * n + j] * g[j];
            }
            p[i] = acc;
        }
        double slope = dot(p, g);
        if (slope >= 0.0) {
            reset_identity(h, n);
            h_is_identity = true;
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = -g[i];
            }
            slope = -dot(g, g);
        }

        double alpha = 1.0;
        bool accepted = false;
        double f_new = f;
        for (int ls = 0; ls < kMaxBacktracks; ++ls) {
            for (std::size_t i = 0; i < n; ++i) {
                x_new[i] = r.x[i] + alpha * p[i];
            }
            f_new = value(x_new);
            if (f_new <= f + kArmijo * alpha * slope) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            if (h_is_identity) {
                break;
            }
            reset_identity(h, n);
            h_is_identity = true;
            continue;
        }

        f_new = value_grad(x_new, g_new);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - r.x[i];
            y[i] = g_new[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-300) {
            if (h_is_identity) {
                // Scale the initial estimate to the observed curvature.
                const double scale = sy / dot(y, y);
                for (std::size_t i = 0; i < n; ++i) {
                    h[i * n + i] = scale;
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    acc += h[i * n + j] * y[j];
                }
                hy[i] = acc;
            }
            const double yhy = dot(y, hy);
            const double rho = 1.0 / sy;
            const double c = (1.0 + rho * yhy) * rho;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    h[i * n + j] += c * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
                }
            }
            h_is_identity = false;
        }
        stalled = f - f_new <= options.stall_decrease ? stalled + 1 : 0;
        r.x.swap(x_new);
        g.swap(g_new);
        f = f_new;
        if (stalled >= options.stall_iterations) {
            ++r.iterations;
            break;
        }
    }
    r.value = f;
    return r;
}

OptimizeResult optimize_params(const Template &tpl, const sim::Matrix &target,
                               std::uint64_t seed, const OptimizerOptions &options) {
    const TemplateObjective objective(tpl, target);
    const std::size_t n = objective.num_params();
    const ValueFn value = [&](std::span<const double> x) { return objective.value(x); };
    const ValueGradFn value_grad = [&](std::span<const double> x, std::span<double> g) {
        return objective.value_and_gradient(x, g, options.fd_step);
    };

    OptimizeResult best;
    best.distance = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
        std::vector<double> x0(n, 0.0);
        if (restart > 0) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
            for (double &v : x0) {
                v = uniform(rng, -std::numbers::pi, std::numbers::pi);
            }
        }
        BfgsResult r = minimize_bfgs(value, value_grad, std::move(x0), options.bfgs);
        const double d = std::clamp(r.value, 0.0, 1.0);
        ++best.restarts_run;
        if (d < best.distance) {
            best.distance = d;
            best.params = std::move(r.x);
        }
        if (best.distance <= options.stop_distance) {
            break;
        }
    }
    return best;
}

} // namespace qgo::synth
