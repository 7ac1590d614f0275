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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qloom/dense.hpp"
#include "qloom/error.hpp"
#include "qloom/phase.hpp"

namespace qloom {

enum class SpiderColor : std::uint8_t { Z, X };

[[nodiscard]] inline SpiderColor other_color(SpiderColor c) {
    return c == SpiderColor::Z ? SpiderColor::X : SpiderColor::Z;
}

enum class NodeKind : std::uint8_t { Spider, Boundary };

struct ZxNode {
    NodeKind kind = NodeKind::Spider;
    SpiderColor color = SpiderColor::Z;
    Phase phase;
};

struct ZxEdge {
    int a = -1;
    int b = -1;
    bool hadamard = false;
};

/**
 * Open ZX diagram: a multigraph of phased Z/X spiders and degree-1
 * boundary ports, with plain or Hadamard edges and an explicit complex
 * scalar factor. Semantics are defined by to_matrix(); every rewrite rule
 * preserves to_matrix() exactly, including the scalar.
 *
 * Tensor convention: a Z spider with phase a has entry 1 on the all-zero
 * index, e^{ia} on the all-one index, 0 elsewhere; an X spider is its
 * Hadamard conjugate, with closed-form entries
 * 2^{-n/2} (1 + e^{ia} (-1)^{parity}); a Hadamard edge carries
 * (1/sqrt2) [[1, 1], [1, -1]].
 */
class ZxDiagram {
  public:
    ZxDiagram() = default;

    // -- construction ------------------------------------------------------

    int add_spider(SpiderColor color, Phase phase = Phase());

    /** Adds a boundary port registered as an input (appended to input order). */
    int add_input();

    /** Adds a boundary port registered as an output (appended to output order). */
    int add_output();

    /** Adds an edge; self-loops are rejected. Returns the edge id. */
    int add_edge(int a, int b, bool hadamard = false);

    /** Removes an edge by id. */
    void remove_edge(int edge_id);

    /**
     * Moves the `from_node` endpoint of `edge_id` to `to_node`, keeping the
     * edge id and type. Used by rewrite rules so recorded derivations can
     * reference stable ids.
     */
    void reattach_end(int edge_id, int from_node, int to_node);

    /** Removes a spider and all its incident edges. Boundaries cannot be removed. */
    void remove_spider(int node_id);

    void multiply_scalar(cdouble factor) { scalar_ *= factor; }
    void set_scalar(cdouble s) { scalar_ = s; }
    [[nodiscard]] cdouble scalar() const { return scalar_; }

    // -- inspection --------------------------------------------------------

    [[nodiscard]] bool has_node(int id) const { return nodes_.count(id) != 0; }
    [[nodiscard]] bool has_edge(int id) const { return edges_.count(id) != 0; }
    [[nodiscard]] const ZxNode& node(int id) const;
    [[nodiscard]] const ZxEdge& edge(int id) const;
    [[nodiscard]] bool is_boundary(int id) const {
        return node(id).kind == NodeKind::Boundary;
    }

    [[nodiscard]] std::size_t num_spiders() const;
    [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }

    /** Ids of all spiders (ascending). */
    [[nodiscard]] std::vector<int> spider_ids() const;
    /** Ids of all edges (ascending). */
    [[nodiscard]] std::vector<int> edge_ids() const;

    /** Incident edge ids of a node (ascending). */
    [[nodiscard]] std::vector<int> incident_edges(int node_id) const;
    [[nodiscard]] std::size_t degree(int node_id) const;

    /** The endpoint of `edge_id` that is not `node_id`. */
    [[nodiscard]] int other_end(int edge_id, int node_id) const;

    [[nodiscard]] Phase phase(int node_id) const { return node(node_id).phase; }
    void set_phase(int node_id, Phase p);
    void add_phase(int node_id, Phase p);
    [[nodiscard]] SpiderColor color(int node_id) const { return node(node_id).color; }
    void set_color(int node_id, SpiderColor c);
    void set_edge_hadamard(int edge_id, bool h);

    [[nodiscard]] const std::vector<int>& inputs() const { return inputs_; }
    [[nodiscard]] const std::vector<int>& outputs() const { return outputs_; }

    /**
     * Checks structural invariants (boundary degree 1, edge endpoints exist,
     * finite scalar). Throws InternalError with a description on violation.
     */
    void validate() const;

    // -- semantics ---------------------------------------------------------

    /**
     * Contracts the diagram to its matrix semantics: rows indexed by output
     * ports (first output is the most significant bit), columns by input
     * ports. Refuses diagrams with more than 12 boundary ports.
     */
    [[nodiscard]] Matrix to_matrix() const;

  private:
    std::map<int, ZxNode> nodes_;
    std::map<int, ZxEdge> edges_;
    std::map<int, std::vector<int>> incidence_;  // node id -> incident edge ids
    std::vector<int> inputs_;
    std::vector<int> outputs_;
    cdouble scalar_ = 1.0;
    int next_node_ = 0;
    int next_edge_ = 0;
};

// -- rewrite rules ---------------------------------------------------------

/**
 * The rewrite rule set. Each rule is sound: applying it never changes
 * to_matrix(), with any normalization change absorbed into the diagram
 * scalar. Rules with nontrivial inverses appear in both directions so
 * that derivations can be replayed in either order.
 */
enum class Rule {
    SpiderFusion,     // site: edges = {e}; plain edge between same-color spiders
    SpiderSplit,      // site: nodes = {v}, edges = subset of v's edges to move
    IdentityRemove,   // site: nodes = {v}; deg-2 phase-0 spider, not both edges H
    IdentityInsert,   // site: edges = {e}; params color, hadamard_first
    ColorChange,      // site: nodes = {v}; toggle color and incident edge types
    HadamardCancel,   // site: nodes = {v}; deg-2 phase-0 spider, both edges H
    HadamardInsert,   // site: edges = {e}; plain edge -> H, phase-0 spider, H
    PiCopy,           // site: nodes = {p, t}; Pauli-phase deg-2 p pushed through t
    StateCopy,        // site: nodes = {s, t}; deg-1 Pauli state copied through t
    Bialgebra,        // site: nodes = {x1, x2, z1, z2}; K_{2,2} -> dumbbell
    BialgebraExpand,  // site: nodes = {x, z}; dumbbell -> K_{2,2}
};

[[nodiscard]] std::string rule_name(Rule r);
[[nodiscard]] std::optional<Rule> rule_from_name(const std::string& name);

/** Rule application site; the role of each entry is rule-specific. */
struct RewriteSite {
    std::vector<int> nodes;
    std::vector<int> edges;
    SpiderColor color = SpiderColor::Z;  // IdentityInsert: color of inserted spider
    bool hadamard_first = false;         // IdentityInsert: type of the first new edge
};

/**
 * Applies `rule` at `site`. Returns false and leaves the diagram untouched
 * when the site does not satisfy the rule's precondition; returns true on
 * success. Never throws on a merely inapplicable site.
 */
bool apply_rule(ZxDiagram& d, Rule rule, const RewriteSite& site);

/** One step of a recorded derivation. */
struct DerivationStep {
    Rule rule;
    RewriteSite site;
};

struct ReplayResult {
    /** Diagram after each successfully applied step (same order as steps). */
    std::vector<ZxDiagram> intermediates;
    /** Index of the first failing step, or nullopt if all steps applied. */
    std::optional<std::size_t> failed_step;
};

/**
 * Replays a step list on a copy of `start`, collecting every intermediate.
 * Stops at the first inapplicable step and records its index.
 */
[[nodiscard]] ReplayResult replay_derivation(const ZxDiagram& start,
                                             const std::vector<DerivationStep>& steps);

// -- serialization ---------------------------------------------------------

/** JSON text for a diagram (schema documented in the README). */
[[nodiscard]] std::string diagram_to_json(const ZxDiagram& d);

/** Parses diagram JSON; throws InputError naming the offending key. */
[[nodiscard]] ZxDiagram diagram_from_json(const std::string& text);

}  // namespace qloom
