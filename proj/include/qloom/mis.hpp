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

#pragma once

#include <string>
#include <vector>

#include "qloom/dense.hpp"
#include "qloom/gates.hpp"
#include "qloom/qubo.hpp"

namespace qloom {

/** Exact maximum-independent-set size by exhaustion; refuses n > 24. */
[[nodiscard]] int max_independent_set_size(const Graph& g);

/** Probability mass of `state` on assignments that are NOT independent sets. */
[[nodiscard]] double state_leakage(const Graph& g, const Statevector& state);

/** Expected set size E[popcount] under the measurement distribution. */
[[nodiscard]] double expected_set_size(const Statevector& state);

/**
 * Dense unitary of the partial mixer for vertex v: exp(i beta X_v) applied
 * on the subspace where every neighbor of v is |0>, identity elsewhere.
 * Index convention matches Statevector (bit v = vertex v). Refuses n > 10.
 */
[[nodiscard]] Matrix partial_mixer_matrix(const Graph& g, int v, double beta);

struct MisRunResult {
    int num_vertices = 0;
    std::vector<double> distribution;   // 2^n, bit v = vertex v
    double leakage = 0.0;               // infeasible probability mass
    double expectation = 0.0;           // E[set size] over the full distribution
    int best_feasible = 0;              // largest set with probability > 1e-12
    int optimum = 0;                    // exact MIS size
};

/**
 * Runs the constraint-preserving MIS ansatz on a statevector and reports
 * the distribution, leakage and set-size statistics.
 */
[[nodiscard]] MisRunResult run_mis_qaoa(const MisInstance& inst, const QaoaParams& params,
                                        const std::vector<int>& init_set = {},
                                        const std::vector<int>& order = {});

}  // namespace qloom
