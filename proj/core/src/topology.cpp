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

#include "qgo/topology.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "qgo/error.hpp"

namespace qgo::topo {

namespace {

int parse_positive(std::string_view s, std::string_view spec) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v <= 0) {
        throw InputError("malformed topology spec '" + std::string(spec) + "'");
    }
    return v;
}

} // namespace

Topology::Topology(int num_qubits, std::vector<Edge> edges)
    : num_qubits_(num_qubits),
      adj_(static_cast<std::size_t>(std::max(num_qubits, 0))) {
    if (num_qubits <= 0) {
        throw InputError("topology needs at least one qubit");
    }
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
            throw InputError("edge [" + std::to_string(a) + "," +
                             std::to_string(b) + "] out of range for " +
                             std::to_string(num_qubits) + " qubits");
        }
        if (a == b) {
            throw InputError("self-loop on qubit " + std::to_string(a));
        }
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw InputError("duplicate edge [" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + "]");
        }
        edges_.push_back(e);
        adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto &n : adj_) {
        std::sort(n.begin(), n.end());
    }
}

Topology Topology::line(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return {n, std::move(e)};
}

Topology Topology::grid(int rows, int cols) {
    std::vector<Edge> e;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int q = r * cols + c;
            if (c + 1 < cols) {
                e.emplace_back(q, q + 1);
            }
            if (r + 1 < rows) {
                e.emplace_back(q, q + cols);
            }
        }
    }
    return {rows * cols, std::move(e)};
}

bool Topology::adjacent(int a, int b) const noexcept {
    if (a < 0 || a >= num_qubits_) {
        return false;
    }
    const auto &n = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(n.begin(), n.end(), b);
}

std::vector<std::vector<int>> Topology::distances() const {
    const auto n = static_cast<std::size_t>(num_qubits_);
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<int> queue{static_cast<int>(s)};
        d[s][s] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                if (d[s][static_cast<std::size_t>(v)] < 0) {
                    d[s][static_cast<std::size_t>(v)] =
                        d[s][static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return d;
}

int Topology::largest_component() const {
    std::vector<bool> seen(static_cast<std::size_t>(num_qubits_), false);
    int best = 0;
    for (int s = 0; s < num_qubits_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        int size = 0;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++size;
            for (int v : neighbors(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    stack.push_back(v);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

Topology Topology::induced_prefix(int n) const {
    if (n >= num_qubits_) {
        return *this;
    }
    std::vector<Edge> e;
    for (const Edge &edge : edges_) {
        if (edge.second < n) {
            e.push_back(edge);
        }
    }
    return {n, std::move(e)};
}

bool QubitGroup::contains(int q) const noexcept {
    return std::binary_search(qubits.begin(), qubits.end(), q);
}

Topology load_topology(std::string_view spec) {
    if (spec.rfind("line-", 0) == 0) {
        return Topology::line(parse_positive(spec.substr(5), spec));
    }
    if (spec.rfind("grid-", 0) == 0) {
        const std::string_view dims = spec.substr(5);
        const auto x = dims.find('x');
        if (x == std::string_view::npos) {
            throw InputError("malformed topology spec '" + std::string(spec) +
                             "'");
        }
        return Topology::grid(parse_positive(dims.substr(0, x), spec),
                              parse_positive(dims.substr(x + 1), spec));
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(spec);
        const int n = doc.at("num_qubits").get<int>();
        std::vector<Edge> edges;
        for (const auto &e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw InputError("each edge must be a pair [a, b]");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return {n, std::move(edges)};
    } catch (const nlohmann::json::exception &ex) {
        throw InputError("malformed topology spec: " + std::string(ex.what()));
    }
}

bool is_valid_group(const Topology &t, std::span<const int> qubits) {
    if (qubits.empty()) {
        return false;
    }
    std::vector<int> members(qubits.begin(), qubits.end());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        return false;
    }
    for (int q : members) {
        if (q < 0 || q >= t.num_qubits()) {
            return false;
        }
    }
    std::vector<bool> reached(members.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int u = members[stack.back()];
        stack.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!reached[i] && t.adjacent(u, members[i])) {
                reached[i] = true;
                ++count;
                stack.push_back(i);
            }
        }
    }
    return count == members.size();
}

namespace {

// Wernicke's ESU: every connected subset is produced exactly once, from its
// minimum vertex `root`.
void extend(const Topology &t, int root, std::size_t k, std::vector<int> &sub,
            std::vector<int> extension, std::vector<QubitGroup> &out) {
    if (sub.size() == k) {
        QubitGroup g{sub};
        std::sort(g.qubits.begin(), g.qubits.end());
        out.push_back(std::move(g));
        return;
    }
    while (!extension.empty()) {
        const int w = extension.back();
        extension.pop_back();
        std::vector<int> next = extension;
        for (int u : t.neighbors(w)) {
            if (u <= root) {
                continue;
            }
            const bool in_sub = std::find(sub.begin(), sub.end(), u) != sub.end();
            bool near_sub = false;
            for (int s : sub) {
                if (s == u || t.adjacent(s, u)) {
                    near_sub = true;
                    break;
                }
            }
            if (!in_sub && !near_sub &&
                std::find(next.begin(), next.end(), u) == next.end()) {
                next.push_back(u);
            }
        }
        sub.push_back(w);
        extend(t, root, k, sub, std::move(next), out);
        sub.pop_back();
    }
}

} // namespace

std::vector<QubitGroup> enumerate_valid_groups(const Topology &t, int k) {
    if (k < 1 || k > 5) {
        throw InputError("group size must be between 1 and 5, got " +
                         std::to_string(k));
    }
    std::vector<QubitGroup> out;
    for (int v = 0; v < t.num_qubits(); ++v) {
        std::vector<int> sub{v};
        std::vector<int> extension;
        for (int u : t.neighbors(v)) {
            if (u > v) {
                extension.push_back(u);
            }
        }
        extend(t, v, static_cast<std::size_t>(k), sub, std::move(extension),
               out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qgo::topo
