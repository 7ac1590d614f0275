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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qloom/error.hpp"

namespace qloom {

/**
 * Simple undirected graph on vertices 0..n-1. Edges are stored with
 * endpoints ordered u < v; duplicates and self-loops are rejected.
 */
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    /** Validates and canonicalizes (sorts endpoints and the edge list). */
    void normalize();

    [[nodiscard]] std::vector<int> neighbors(int v) const;
    [[nodiscard]] int degree(int v) const;
};

/**
 * QUBO in Ising form: cost(x) = constant + sum_v h_v z_v
 * + sum_{u<v} J_uv z_u z_v with z_v = +1 when bit v of x is 0 and -1 when
 * it is 1. The objective is to MAXIMIZE the cost.
 */
struct QuboProblem {
    int num_vars = 0;
    double constant = 0.0;
    std::map<int, double> linear;                       // h_v, zero terms omitted
    std::map<std::pair<int, int>, double> quadratic;    // J_uv, keyed u < v

    /** Validates index ranges and key ordering; drops explicit zeros. */
    void normalize();
};

/** Spin value of bit v in assignment x: +1 for 0, -1 for 1. */
[[nodiscard]] inline int spin_of(std::uint64_t x, int v) {
    return (x >> v) & 1ULL ? -1 : 1;
}

/** Evaluates the QUBO cost at assignment x (bit v of x is variable v). */
[[nodiscard]] double qubo_cost(const QuboProblem& q, std::uint64_t x);

struct CostReport {
    double best_cost = 0.0;
    std::uint64_t best_assignment = 0;  // lexicographically smallest maximizer
    std::uint64_t num_optimal = 0;      // count of maximizers
    std::uint64_t num_evaluated = 0;    // 2^n
};

/**
 * Exhaustive maximization; refuses more than 24 variables. Ties are
 * resolved toward the assignment whose bitstring x_0 x_1 ... x_{n-1} is
 * lexicographically smallest.
 */
[[nodiscard]] CostReport brute_force(const QuboProblem& q);

/**
 * MaxCut as a QUBO: constant |E|/2, J_uv = -1/2 per edge, no linear terms;
 * the cost of an assignment is exactly the number of cut edges.
 */
[[nodiscard]] QuboProblem maxcut_to_qubo(const Graph& g);

/** Cut size of a vertex bipartition given by the bits of x. */
[[nodiscard]] int cut_value(const Graph& g, std::uint64_t x);

/** Maximum-independent-set instance (unweighted). */
struct MisInstance {
    Graph graph;
};

/** True when the set {v : bit v of x set} is independent in g. */
[[nodiscard]] bool is_independent_set(const Graph& g, std::uint64_t x);

// -- parsing -----------------------------------------------------------------

enum class ProblemKind { Qubo, MaxCut, Mis };

/** A parsed problem file: a QUBO, or a graph problem with its source graph. */
struct ProblemInput {
    ProblemKind kind = ProblemKind::Qubo;
    QuboProblem qubo;   // for MaxCut this is the converted form
    Graph graph;        // present for MaxCut and MIS
};

/**
 * Parses a problem JSON document discriminated by its "type" key
 * ("qubo" | "maxcut" | "mis"); throws InputError naming the offending key.
 */
[[nodiscard]] ProblemInput problem_from_json(const std::string& text);

/** Serializes a problem (inverse of problem_from_json, canonical form). */
[[nodiscard]] std::string problem_to_json(const ProblemInput& p);

}  // namespace qloom
