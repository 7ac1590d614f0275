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
#include <cmath>

#include "qloom/zx.hpp"

namespace qloom {

int ZxDiagram::add_spider(SpiderColor color, Phase phase) {
    const int id = next_node_++;
    nodes_[id] = ZxNode{NodeKind::Spider, color, phase};
    incidence_[id] = {};
    return id;
}

int ZxDiagram::add_input() {
    const int id = next_node_++;
    nodes_[id] = ZxNode{NodeKind::Boundary, SpiderColor::Z, Phase()};
    incidence_[id] = {};
    inputs_.push_back(id);
    return id;
}

int ZxDiagram::add_output() {
    const int id = next_node_++;
    nodes_[id] = ZxNode{NodeKind::Boundary, SpiderColor::Z, Phase()};
    incidence_[id] = {};
    outputs_.push_back(id);
    return id;
}

int ZxDiagram::add_edge(int a, int b, bool hadamard) {
    if (!has_node(a) || !has_node(b))
        throw InternalError("add_edge: unknown endpoint");
    if (a == b) throw InternalError("add_edge: self-loops are not representable");
    const int id = next_edge_++;
    edges_[id] = ZxEdge{a, b, hadamard};
    incidence_[a].push_back(id);
    incidence_[b].push_back(id);
    return id;
}

void ZxDiagram::remove_edge(int edge_id) {
    const auto it = edges_.find(edge_id);
    if (it == edges_.end()) throw InternalError("remove_edge: unknown edge");
    for (const int n : {it->second.a, it->second.b}) {
        auto& inc = incidence_[n];
        inc.erase(std::remove(inc.begin(), inc.end(), edge_id), inc.end());
    }
    edges_.erase(it);
}

void ZxDiagram::reattach_end(int edge_id, int from_node, int to_node) {
    auto it = edges_.find(edge_id);
    if (it == edges_.end()) throw InternalError("reattach_end: unknown edge");
    if (!has_node(to_node)) throw InternalError("reattach_end: unknown target");
    ZxEdge& e = it->second;
    int* end = nullptr;
    if (e.a == from_node)
        end = &e.a;
    else if (e.b == from_node)
        end = &e.b;
    else
        throw InternalError("reattach_end: node not on edge");
    const int fixed = (end == &e.a) ? e.b : e.a;
    if (fixed == to_node)
        throw InternalError("reattach_end: would create a self-loop");
    *end = to_node;
    auto& from_inc = incidence_[from_node];
    from_inc.erase(std::remove(from_inc.begin(), from_inc.end(), edge_id),
                   from_inc.end());
    incidence_[to_node].push_back(edge_id);
}

void ZxDiagram::remove_spider(int node_id) {
    const auto it = nodes_.find(node_id);
    if (it == nodes_.end()) throw InternalError("remove_spider: unknown node");
    if (it->second.kind == NodeKind::Boundary)
        throw InternalError("remove_spider: cannot remove a boundary port");
    const std::vector<int> inc = incidence_[node_id];
    for (const int e : inc) remove_edge(e);
    incidence_.erase(node_id);
    nodes_.erase(it);
}

const ZxNode& ZxDiagram::node(int id) const {
    const auto it = nodes_.find(id);
    if (it == nodes_.end()) throw InternalError("node: unknown id");
    return it->second;
}

const ZxEdge& ZxDiagram::edge(int id) const {
    const auto it = edges_.find(id);
    if (it == edges_.end()) throw InternalError("edge: unknown id");
    return it->second;
}

std::size_t ZxDiagram::num_spiders() const {
    std::size_t n = 0;
    for (const auto& [id, nd] : nodes_)
        if (nd.kind == NodeKind::Spider) ++n;
    return n;
}

std::vector<int> ZxDiagram::spider_ids() const {
    std::vector<int> ids;
    for (const auto& [id, nd] : nodes_)
        if (nd.kind == NodeKind::Spider) ids.push_back(id);
    return ids;
}

std::vector<int> ZxDiagram::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const auto& [id, e] : edges_) ids.push_back(id);
    return ids;
}

std::vector<int> ZxDiagram::incident_edges(int node_id) const {
    const auto it = incidence_.find(node_id);
    if (it == incidence_.end()) throw InternalError("incident_edges: unknown node");
    std::vector<int> inc = it->second;
    std::sort(inc.begin(), inc.end());
    return inc;
}

std::size_t ZxDiagram::degree(int node_id) const {
    const auto it = incidence_.find(node_id);
    if (it == incidence_.end()) throw InternalError("degree: unknown node");
    return it->second.size();
}

int ZxDiagram::other_end(int edge_id, int node_id) const {
    const ZxEdge& e = edge(edge_id);
    if (e.a == node_id) return e.b;
    if (e.b == node_id) return e.a;
    throw InternalError("other_end: node not on edge");
}

void ZxDiagram::set_phase(int node_id, Phase p) {
    auto it = nodes_.find(node_id);
    if (it == nodes_.end() || it->second.kind != NodeKind::Spider)
        throw InternalError("set_phase: not a spider");
    it->second.phase = p;
}

void ZxDiagram::add_phase(int node_id, Phase p) {
    set_phase(node_id, phase(node_id) + p);
}

void ZxDiagram::set_color(int node_id, SpiderColor c) {
    auto it = nodes_.find(node_id);
    if (it == nodes_.end() || it->second.kind != NodeKind::Spider)
        throw InternalError("set_color: not a spider");
    it->second.color = c;
}

void ZxDiagram::set_edge_hadamard(int edge_id, bool h) {
    auto it = edges_.find(edge_id);
    if (it == edges_.end()) throw InternalError("set_edge_hadamard: unknown edge");
    it->second.hadamard = h;
}

void ZxDiagram::validate() const {
    for (const auto& [id, e] : edges_) {
        if (!has_node(e.a) || !has_node(e.b))
            throw InternalError("validate: edge with missing endpoint");
        if (e.a == e.b) throw InternalError("validate: self-loop");
    }
    for (const auto& [id, nd] : nodes_) {
        if (nd.kind == NodeKind::Boundary && degree(id) != 1)
            throw InternalError("validate: boundary port must have degree 1");
    }
    std::size_t n_boundary = 0;
    for (const auto& [id, nd] : nodes_)
        if (nd.kind == NodeKind::Boundary) ++n_boundary;
    if (n_boundary != inputs_.size() + outputs_.size())
        throw InternalError("validate: unregistered boundary port");
    for (const int b : inputs_)
        if (!has_node(b) || node(b).kind != NodeKind::Boundary)
            throw InternalError("validate: input list references a non-boundary");
    for (const int b : outputs_)
        if (!has_node(b) || node(b).kind != NodeKind::Boundary)
            throw InternalError("validate: output list references a non-boundary");
    if (!std::isfinite(scalar_.real()) || !std::isfinite(scalar_.imag()))
        throw InternalError("validate: non-finite scalar");
}

}  // namespace qloom
