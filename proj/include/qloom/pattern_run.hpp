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
#include <vector>

#include "qloom/dense.hpp"
#include "qloom/pattern.hpp"

namespace qloom {

/**
 * One execution branch of a pattern: the outcome bits (in measurement
 * order), the branch probability, and the corrected output state. The
 * state is normalized; bit k of its index is the value of outputs[k].
 */
struct BranchResult {
    std::vector<std::uint8_t> outcomes;
    double probability = 0.0;
    std::vector<cdouble> state;
};

/**
 * Optional external state for the pattern's input nodes, with bit k of the
 * index addressing inputs[k]. Null means "no inputs" (the pattern must
 * then have an empty input list).
 */
using InputState = std::vector<cdouble>;

/**
 * Enumerates all 2^k branches (k = number of measurements) by lazy-window
 * simulation. Refuses patterns with more than 22 nodes.
 */
[[nodiscard]] std::vector<BranchResult> enumerate_branches(
    const MeasurementPattern& p, const InputState* input = nullptr);

/**
 * Runs the single branch with the given forced outcomes (one bit per
 * measurement, in order). The returned probability is the true branch
 * probability (product of conditional outcome probabilities).
 */
[[nodiscard]] BranchResult run_branch(const MeasurementPattern& p,
                                      const std::vector<std::uint8_t>& outcomes,
                                      const InputState* input = nullptr);

struct DeterminismReport {
    bool deterministic = false;
    bool exhaustive = false;          // true when every branch was compared
    std::size_t branches_checked = 0;
    std::string detail;               // reason for failure, empty on success
};

/**
 * Checks outcome independence of the corrected output state (pairwise
 * equality up to a global phase within tol). Patterns with at most 14
 * measurements are checked exhaustively; larger ones are stress-checked
 * against the all-zeros reference branch with every single-flip branch,
 * sampled double flips and random outcome paths, plus the requirement
 * that every conditional outcome probability along explored paths is 1/2.
 */
[[nodiscard]] DeterminismReport check_determinism(const MeasurementPattern& p,
                                                  double tol,
                                                  const InputState* input = nullptr,
                                                  std::uint64_t seed = 0x51CADE5ULL,
                                                  std::size_t random_paths = 32);

/**
 * Output distribution of a deterministic pattern, computed from the
 * all-zeros reference branch (all branches agree once determinism holds).
 * Index bit k addresses outputs[k].
 */
[[nodiscard]] std::vector<double> reference_output_distribution(
    const MeasurementPattern& p, const InputState* input = nullptr);

/**
 * Exact output distribution as the probability-weighted mixture over all
 * branches (no determinism assumption; enumeration limits apply).
 */
[[nodiscard]] std::vector<double> mixture_output_distribution(
    const MeasurementPattern& p, const InputState* input = nullptr);

struct SampleResult {
    std::vector<std::uint64_t> shots;             // output bitstring per shot
    std::map<std::uint64_t, std::size_t> counts;  // aggregated
};

/**
 * Samples the pattern shot by shot with a single seeded PRNG; outcome
 * randomness and output-basis collapse both draw from it.
 */
[[nodiscard]] SampleResult sample_pattern(const MeasurementPattern& p,
                                          std::size_t shots, std::uint64_t seed,
                                          const InputState* input = nullptr);

/** Total variation distance (1/2) sum |p_i - q_i| of equal-length vectors. */
[[nodiscard]] double total_variation_distance(const std::vector<double>& p,
                                              const std::vector<double>& q);

}  // namespace qloom
