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
#include <optional>
#include <string>
#include <vector>

#include "qloom/phase.hpp"

namespace qloom {

/**
 * Measurement planes. XY at effective angle t projects onto
 * (|0> + (-1)^m e^{it} |1>)/sqrt2; YZ at effective angle t measures in the
 * basis {e^{i t X / 2} |m>}, i.e. the branch effect is <m| e^{-i t X / 2}.
 */
enum class MeasPlane : std::uint8_t { XY, YZ };

[[nodiscard]] constexpr const char* plane_name(MeasPlane p) {
    return p == MeasPlane::XY ? "XY" : "YZ";
}

/**
 * Single adaptive measurement. The effective angle is
 * (-1)^{parity(sign_domain outcomes)} * angle + pi * parity(offset_domain
 * outcomes); domains reference nodes measured strictly earlier.
 */
struct MeasureCmd {
    int node = -1;
    MeasPlane plane = MeasPlane::XY;
    double angle = 0.0;                  // base angle, radians
    std::optional<Phase> angle_exact;    // exact form when known
    std::vector<int> sign_domain;        // sorted node ids
    std::vector<int> offset_domain;      // sorted node ids
};

/** Terminal Pauli correction on an (output) node, conditional on parity. */
struct CorrectionCmd {
    int node = -1;
    char pauli = 'X';            // 'X' or 'Z'
    std::vector<int> domain;     // sorted node ids
};

/**
 * Measurement pattern over a graph state: every non-input node is prepared
 * |+>, `entangle` lists CZ edges, `measure` runs in list order, then
 * `corrections` apply to output nodes. Nodes in `inputs` carry an
 * externally supplied state instead of |+> (compiled patterns have none;
 * the field exists for fragment-level testing).
 */
struct MeasurementPattern {
    std::vector<int> nodes;
    std::vector<int> inputs;
    std::vector<int> outputs;
    std::vector<std::pair<int, int>> entangle;
    std::vector<MeasureCmd> measure;
    std::vector<CorrectionCmd> corrections;
    /** Optional role annotation per node (wire/layer/kind), id independent. */
    std::map<int, std::string> roles;
};

struct PatternDiagnostics {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
};

/**
 * Structural checks: node references exist, each non-output node is
 * measured exactly once, outputs are unmeasured, domains are causal
 * (reference strictly earlier measurements), corrections target outputs.
 * Returns diagnostics instead of throwing.
 */
[[nodiscard]] PatternDiagnostics validate_pattern(const MeasurementPattern& p);

/** Pattern JSON (schema documented in the README). */
[[nodiscard]] std::string pattern_to_json(
    const MeasurementPattern& p, const std::string& problem_json = "",
    const std::vector<double>& gammas = {}, const std::vector<double>& betas = {});

struct ParsedPattern {
    MeasurementPattern pattern;
    std::string problem_json;      // embedded problem document, if present
    std::vector<double> gammas;    // embedded schedule, if present
    std::vector<double> betas;
};

/** Parses pattern JSON; throws InputError naming the offending key. */
[[nodiscard]] ParsedPattern pattern_from_json(const std::string& text);

}  // namespace qloom
