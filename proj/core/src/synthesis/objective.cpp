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

#include "qgo/synthesis/objective.hpp"

#include <algorithm>
#include <cmath>

#include "qgo/error.hpp"

namespace qgo::synth {

using sim::Complex;

TemplateObjective::TemplateObjective(const Template &tpl, const sim::Matrix &target)
    : num_params_(tpl.param_count()),
      dim_(std::size_t{1} << tpl.num_qubits),
      target_(target),
      target_adjoint_(target.adjoint()) {
    if (target.dim() != dim_) {
        throw InputError("target dimension does not match the template");
    }
    std::size_t p = 0;
    for (int q = 0; q < tpl.num_qubits; ++q) {
        ops_.push_back({false, q, 0, p});
        p += 3;
    }
    for (const DirectedEdge &e : tpl.cnots) {
        ops_.push_back({true, e.control, e.target, 0});
        ops_.push_back({false, e.control, 0, p});
        ops_.push_back({false, e.target, 0, p + 3});
        p += 6;
    }
}

double TemplateObjective::from_trace(Complex tr) const noexcept {
    return 1.0 - std::abs(tr) / static_cast<double>(dim_);
}

double TemplateObjective::value(std::span<const double> params) const {
    sim::Matrix v = sim::Matrix::identity(dim_);
    for (const Op &op : ops_) {
        if (op.is_cnot) {
            sim::apply_cnot(v.data(), dim_, op.a, op.b);
        } else {
            sim::apply_1q(v.data(), dim_, op.a,
                          sim::u3_matrix(params[op.offset], params[op.offset + 1],
                                         params[op.offset + 2]));
        }
    }
    return from_trace(sim::trace_inner(target_, v));
}

double TemplateObjective::value_and_gradient(std::span<const double> params,
                                             std::span<double> gradient,
                                             double h) const {
    const std::size_t d = dim_;
    const std::size_t d2 = d * d;
    std::size_t slots = 0;
    for (const Op &op : ops_) {
        slots += op.is_cnot ? 0 : 1;
    }
    prefixes_.assign(slots * d2, Complex{});

    // Forward sweep: prefix before every U3.
    std::vector<Complex> cur(d2);
    for (std::size_t i = 0; i < d; ++i) {
        cur[i * d + i] = 1.0;
    }
    std::size_t slot = 0;
    for (const Op &op : ops_) {
        if (op.is_cnot) {
            sim::apply_cnot(cur, d, op.a, op.b);
        } else {
            std::copy(cur.begin(), cur.end(), prefixes_.begin() + static_cast<std::ptrdiff_t>(slot * d2));
            ++slot;
            sim::apply_1q(cur, d, op.a,
                          sim::u3_matrix(params[op.offset], params[op.offset + 1],
                                         params[op.offset + 2]));
        }
    }
    Complex tr{};
    const auto target = target_.data();
    for (std::size_t i = 0; i < d2; ++i) {
        tr += std::conj(target[i]) * cur[i];
    }
    const double f = from_trace(tr);

    // Backward sweep: suffix = T^dagger G_L ... G_{j+1}.
    const auto tadj = target_adjoint_.data();
    suffix_.assign(tadj.begin(), tadj.end());
    for (std::size_t j = ops_.size(); j-- > 0;) {
        const Op &op = ops_[j];
        if (op.is_cnot) {
            sim::apply_cnot_right(suffix_, d, op.a, op.b);
            continue;
        }
        --slot;
        const Complex *pre = &prefixes_[slot * d2];
        const std::size_t bit = std::size_t{1} << op.a;
        const std::size_t low = bit - 1;
        Complex w[2][2] = {};
        for (std::size_t r = 0; r < d / 2; ++r) {
            const std::size_t base = ((r & ~low) << 1) | (r & low);
            const std::size_t col0 = base;
            const std::size_t col1 = base | bit;
            for (std::size_t y = 0; y < 2; ++y) {
                const Complex *row = pre + (y ? col1 : col0) * d;
                Complex s0{};
                Complex s1{};
                for (std::size_t m = 0; m < d; ++m) {
                    s0 += row[m] * suffix_[m * d + col0];
                    s1 += row[m] * suffix_[m * d + col1];
                }
                w[y][0] += s0;
                w[y][1] += s1;
            }
        }
        auto trace_with = [&](const sim::Mat2 &g) {
            return g[0] * w[0][0] + g[1] * w[1][0] + g[2] * w[0][1] + g[3] * w[1][1];
        };
        double theta[3] = {params[op.offset], params[op.offset + 1],
                           params[op.offset + 2]};
        for (std::size_t k = 0; k < 3; ++k) {
            const double saved = theta[k];
            theta[k] = saved + h;
            const double fp = from_trace(trace_with(sim::u3_matrix(theta[0], theta[1], theta[2])));
            theta[k] = saved - h;
            const double fm = from_trace(trace_with(sim::u3_matrix(theta[0], theta[1], theta[2])));
            theta[k] = saved;
            gradient[op.offset + k] = (fp - fm) / (2.0 * h);
        }
        sim::apply_1q_right(suffix_, d, op.a, sim::u3_matrix(theta[0], theta[1], theta[2]));
    }
    return f;
}

} // namespace qgo::synth
