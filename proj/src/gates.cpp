// Copyright 2026 The qloom developers
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

#include <algorithm>

#include <json.hpp>

#include "qloom/gates.hpp"

namespace qloom {

using nlohmann::json;

int QaoaParams::depth() const {
    if (gammas.size() != betas.size())
        throw InputError("qaoa params: gammas and betas must have equal length");
    if (gammas.empty()) throw InputError("qaoa params: depth must be at least 1");
    return static_cast<int>(gammas.size());
}

Circuit build_qaoa_circuit(const QuboProblem& q, const QaoaParams& params) {
    if (q.num_vars < 1) throw InputError("qaoa: problem has no variables");
    const int p = params.depth();
    Circuit c;
    for (int v = 0; v < q.num_vars; ++v)
        c.push_back({GateKind::H, 0.0, v, -1, {}});
    for (int k = 0; k < p; ++k) {
        const double gamma = params.gammas[static_cast<std::size_t>(k)];
        const double beta = params.betas[static_cast<std::size_t>(k)];
        for (const auto& [uv, j] : q.quadratic)
            c.push_back({GateKind::ZZ, -2.0 * gamma * j, uv.first, uv.second, {}});
        for (const auto& [v, h] : q.linear)
            c.push_back({GateKind::RZ, -2.0 * gamma * h, v, -1, {}});
        for (int v = 0; v < q.num_vars; ++v)
            c.push_back({GateKind::RX, -beta / 2.0, v, -1, {}});
    }
    return c;
}

Circuit build_mis_qaoa(const Graph& g, const QaoaParams& params,
                       const std::vector<int>& init_set,
                       const std::vector<int>& order) {
    const int n = g.num_vertices;
    if (n < 1) throw InputError("mis qaoa: empty graph");
    const int p = params.depth();
    std::vector<int> ord = order;
    if (ord.empty()) {
        ord.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) ord[static_cast<std::size_t>(v)] = v;
    }
    if (static_cast<int>(ord.size()) != n)
        throw InputError("mis qaoa: vertex order must list every vertex once");
    {
        std::vector<int> sorted = ord;
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0; v < n; ++v)
            if (sorted[static_cast<std::size_t>(v)] != v)
                throw InputError("mis qaoa: vertex order must be a permutation");
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 10)
            throw ResourceError("mis qaoa: vertex degree above 10 is not supported");

    std::uint64_t init_mask = 0;
    for (const int v : init_set) {
        if (v < 0 || v >= n) throw InputError("mis qaoa: init vertex out of range");
        init_mask |= 1ULL << v;
    }
    if (!is_independent_set(g, init_mask))
        throw InputError("mis qaoa: initial set is not independent");

    Circuit c;
    for (const int v : init_set)
        c.push_back({GateKind::RX, std::numbers::pi / 2.0, v, -1, {}});  // X up to phase
    for (int k = 0; k < p; ++k) {
        const double gamma = params.gammas[static_cast<std::size_t>(k)];
        const double beta = params.betas[static_cast<std::size_t>(k)];
        // Vertex weight h_v = -1/2, so the phase gate is RZ(gamma) per vertex.
        for (int v = 0; v < n; ++v)
            c.push_back({GateKind::RZ, gamma, v, -1, {}});
        for (const int v : ord)
            c.push_back({GateKind::CTRL0_RX, beta, v, -1, g.neighbors(v)});
    }
    return c;
}

std::string circuit_to_json(int num_qubits, const Circuit& c) {
    json j;
    j["format"] = 1;
    j["num_qubits"] = num_qubits;
    j["ops"] = json::array();
    for (const GateOp& op : c) {
        json o;
        switch (op.kind) {
            case GateKind::RZ: o["kind"] = "RZ"; break;
            case GateKind::RX: o["kind"] = "RX"; break;
            case GateKind::H: o["kind"] = "H"; break;
            case GateKind::CZ: o["kind"] = "CZ"; break;
            case GateKind::CNOT: o["kind"] = "CNOT"; break;
            case GateKind::ZZ: o["kind"] = "ZZ"; break;
            case GateKind::CTRL0_RX: o["kind"] = "CTRL0_RX"; break;
        }
        json qubits = json::array();
        qubits.push_back(op.q0);
        if (op.q1 >= 0) qubits.push_back(op.q1);
        o["qubits"] = qubits;
        if (op.kind == GateKind::RZ || op.kind == GateKind::RX ||
            op.kind == GateKind::ZZ || op.kind == GateKind::CTRL0_RX)
            o["theta"] = op.theta;
        if (!op.controls.empty()) o["controls"] = op.controls;
        j["ops"].push_back(o);
    }
    return j.dump(2);
}

}  // namespace qloom
