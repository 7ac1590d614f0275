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

#include <set>
#include <string>
#include <vector>

#include "qloom/gates.hpp"
#include "qloom/pattern.hpp"
#include "qloom/qubo.hpp"

namespace qloom {

/**
 * Incrementally builds a measurement pattern over logical wires, tracking a
 * Pauli frame (X and Z byproduct sets) per wire so later measurements can
 * absorb earlier byproducts adaptively.
 *
 * Gadget conventions (theta is always the gate angle):
 *  - phase_gadget(u, v, theta) realizes exp(i theta Z_u Z_v): one ancilla,
 *    CZ to both carriers, YZ measurement at base -2 theta with sign domain
 *    xframe(u) xor xframe(v); the outcome joins both wires' Z frames.
 *  - z_rotation(v, theta) realizes exp(i theta Z_v): one hanging ancilla,
 *    CZ to the carrier, YZ at base -2 theta, sign domain xframe(v); the
 *    outcome joins the wire's Z frame.
 *  - x_rotation(v, beta) realizes exp(-i beta X / 2): two ancillas; the
 *    carrier is measured XY at base 0 with offset domain zframe(v), then
 *    the middle node XY at base -beta with sign domain {carrier outcome}.
 *    The new carrier's Z frame is the carrier outcome; the X frame is the
 *    old X frame plus the middle outcome.
 */
class PatternBuilder {
  public:
    /**
     * Starts `num_wires` carriers. With open_inputs the carriers are
     * registered as pattern inputs (fragment testing); otherwise they are
     * |+> preparations, as produced by the QAOA compiler.
     */
    explicit PatternBuilder(int num_wires, bool open_inputs = false);

    [[nodiscard]] int carrier(int wire) const;
    [[nodiscard]] const std::set<int>& x_frame(int wire) const;
    [[nodiscard]] const std::set<int>& z_frame(int wire) const;

    /** Sets the layer index used in role annotations. */
    void begin_layer(int layer) { layer_ = layer; }

    void phase_gadget(int u, int v, double theta);
    void z_rotation(int v, double theta);

    /** Single-wire mixer fragment (carrier and middle measured in turn). */
    void x_rotation(int v, double beta);

    /**
     * Mixer for every wire in the contract order: all carriers measured
     * (ascending wire), then all middle nodes (ascending wire).
     */
    void mixer_layer(double beta);

    /** Emits terminal X/Z corrections and registers outputs. Call once. */
    void finalize();

    [[nodiscard]] MeasurementPattern take();

  private:
    int new_node(const std::string& role);
    struct MixerStage {
        int wire;
        int old_carrier;
        int prime;
        int next_carrier;
    };
    MixerStage mixer_first_stage(int v);
    void mixer_second_stage(const MixerStage& st, double beta);

    MeasurementPattern pat_;
    std::vector<int> carrier_;
    std::vector<std::set<int>> xframe_;
    std::vector<std::set<int>> zframe_;
    int next_node_ = 0;
    int layer_ = 0;
    bool finalized_ = false;
};

/**
 * Compiles the full QAOA circuit for a QUBO into a measurement pattern:
 * per layer, edge gadgets (ascending edge), linear gadgets (ascending
 * vertex), then the mixer; terminal corrections close the frames. Outputs
 * are the final carriers in wire order.
 */
[[nodiscard]] MeasurementPattern compile_qaoa(const QuboProblem& q,
                                              const QaoaParams& params);

// Single-fragment patterns with open inputs, for equivalence testing.
[[nodiscard]] MeasurementPattern compile_phase_gadget_fragment(double theta);
[[nodiscard]] MeasurementPattern compile_z_rotation_fragment(double theta);
[[nodiscard]] MeasurementPattern compile_x_rotation_fragment(double beta);

struct ResourceEstimate {
    int num_vars = 0;
    int depth = 0;
    std::size_t problem_edges = 0;       // nonzero quadratic terms
    std::size_t problem_linear = 0;      // nonzero linear terms
    std::size_t pattern_ancillas = 0;    // per run: p (|E| + 2|V| + |V_h|)
    std::size_t pattern_cz = 0;          // p (2|E| + 2|V| + |V_h|)
    std::size_t pattern_nodes = 0;       // |V| + pattern_ancillas
    std::size_t mbqc_qubits = 0;         // same as pattern_nodes
    std::size_t bound_ancillas = 0;      // quadratic-only bound p (|E| + 2|V|)
    std::size_t bound_cz = 0;            // quadratic-only bound p (2|E| + 2|V|)
    std::size_t gate_qubits = 0;         // |V|
    std::size_t gate_zz = 0;             // p |E| native two-qubit rotations
    std::size_t gate_cnot_equiv = 0;     // 2 p |E| in a CNOT decomposition
    std::size_t gate_rz = 0;             // p |V_h| single-qubit cost rotations
};

/** Closed-form resource accounting for compiling `q` at depth p. */
[[nodiscard]] ResourceEstimate resource_estimate(const QuboProblem& q, int p);

/** JSON rendering of a resource estimate. */
[[nodiscard]] std::string resource_estimate_to_json(const ResourceEstimate& r);

/**
 * Exact planarity of a simple undirected graph, decided by reduction
 * (pruning low-degree vertices, smoothing subdivisions) followed by an
 * exhaustive search for K5/K3,3 subdivisions. Throws ResourceError when
 * the search budget is exhausted.
 */
[[nodiscard]] bool is_planar(int num_nodes, const std::vector<std::pair<int, int>>& edges);

/**
 * DOT rendering of the entanglement graph with measurement order, plane
 * and angle annotations; includes the planarity verdict as a comment.
 */
[[nodiscard]] std::string export_resource_graph_dot(const MeasurementPattern& p);

/** JSON rendering of the entanglement graph with the same annotations. */
[[nodiscard]] std::string export_resource_graph_json(const MeasurementPattern& p);

}  // namespace qloom
