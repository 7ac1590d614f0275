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

#include "qloom/mis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "qloom/error.hpp"

namespace qloom {

int max_independent_set_size(const Graph& g) {
    if (g.num_vertices < 0) throw InputError("negative vertex count");
    if (g.num_vertices > 24) throw ResourceError("exhaustive MIS limited to 24 vertices");
    int best = 0;
    std::uint64_t total = 1ULL << g.num_vertices;
    for (std::uint64_t x = 0; x < total; ++x) {
        if (!is_independent_set(g, x)) continue;
        best = std::max(best, std::popcount(x));
    }
    return best;
}

double state_leakage(const Graph& g, const Statevector& state) {
    if (state.num_qubits() != g.num_vertices)
        throw InputError("state size does not match the graph");
    double leak = 0.0;
    const auto& amp = state.amplitudes();
    for (std::uint64_t x = 0; x < amp.size(); ++x)
        if (!is_independent_set(g, x)) leak += std::norm(amp[x]);
    return leak;
}

double expected_set_size(const Statevector& state) {
    double e = 0.0;
    const auto& amp = state.amplitudes();
    for (std::uint64_t x = 0; x < amp.size(); ++x)
        e += std::norm(amp[x]) * static_cast<double>(std::popcount(x));
    return e;
}

Matrix partial_mixer_matrix(const Graph& g, int v, double beta) {
    if (v < 0 || v >= g.num_vertices) throw InputError("vertex out of range");
    if (g.num_vertices > 10)
        throw ResourceError("dense partial mixer limited to 10 vertices");
    GateOp op;
    op.kind = GateKind::CTRL0_RX;
    op.theta = beta;
    op.q0 = v;
    op.controls = g.neighbors(v);
    std::size_t dim = std::size_t{1} << g.num_vertices;
    Matrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        Statevector sv(g.num_vertices);
        auto& amp = sv.amplitudes();
        amp.assign(dim, cdouble{0.0, 0.0});
        amp[col] = cdouble{1.0, 0.0};
        sv.apply(op);
        for (std::size_t row = 0; row < dim; ++row) m.at(row, col) = amp[row];
    }
    return m;
}

MisRunResult run_mis_qaoa(const MisInstance& inst, const QaoaParams& params,
                          const std::vector<int>& init_set,
                          const std::vector<int>& order) {
    const Graph& g = inst.graph;
    Circuit c = build_mis_qaoa(g, params, init_set, order);
    Statevector sv(g.num_vertices);
    sv.apply_circuit(c);

    MisRunResult r;
    r.num_vertices = g.num_vertices;
    r.distribution = sv.probabilities();
    r.leakage = state_leakage(g, sv);
    r.expectation = expected_set_size(sv);
    r.best_feasible = 0;
    for (std::uint64_t x = 0; x < r.distribution.size(); ++x) {
        if (r.distribution[x] > 1e-12 && is_independent_set(g, x))
            r.best_feasible = std::max(r.best_feasible, std::popcount(x));
    }
    r.optimum = max_independent_set_size(g);
    return r;
}

}  // namespace qloom
