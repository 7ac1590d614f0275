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

#include "qloom/compiler.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qloom/error.hpp"
#include "qloom/phase.hpp"

namespace qloom {

namespace {

[[nodiscard]] std::vector<int> domain_of(const std::set<int>& s) {
    return std::vector<int>(s.begin(), s.end());
}

[[nodiscard]] std::string wire_tag(int layer, const char* kind, int a, int b = -1) {
    std::string s = "l" + std::to_string(layer) + "." + kind + "(" + std::to_string(a);
    if (b >= 0) s += "," + std::to_string(b);
    s += ")";
    return s;
}

}  // namespace

PatternBuilder::PatternBuilder(int num_wires, bool open_inputs) {
    if (num_wires < 1) throw InputError("pattern builder needs at least one wire");
    carrier_.resize(static_cast<std::size_t>(num_wires));
    xframe_.resize(static_cast<std::size_t>(num_wires));
    zframe_.resize(static_cast<std::size_t>(num_wires));
    for (int v = 0; v < num_wires; ++v) {
        int node = new_node("w" + std::to_string(v) + ".in");
        carrier_[static_cast<std::size_t>(v)] = node;
        if (open_inputs) pat_.inputs.push_back(node);
    }
}

int PatternBuilder::new_node(const std::string& role) {
    int id = next_node_++;
    pat_.nodes.push_back(id);
    pat_.roles[id] = role;
    return id;
}

int PatternBuilder::carrier(int wire) const {
    if (wire < 0 || wire >= static_cast<int>(carrier_.size()))
        throw InputError("wire index out of range");
    return carrier_[static_cast<std::size_t>(wire)];
}

const std::set<int>& PatternBuilder::x_frame(int wire) const {
    if (wire < 0 || wire >= static_cast<int>(xframe_.size()))
        throw InputError("wire index out of range");
    return xframe_[static_cast<std::size_t>(wire)];
}

const std::set<int>& PatternBuilder::z_frame(int wire) const {
    if (wire < 0 || wire >= static_cast<int>(zframe_.size()))
        throw InputError("wire index out of range");
    return zframe_[static_cast<std::size_t>(wire)];
}

void PatternBuilder::phase_gadget(int u, int v, double theta) {
    if (finalized_) throw InternalError("pattern builder already finalized");
    if (u == v) throw InputError("phase gadget needs two distinct wires");
    int cu = carrier(u);
    int cv = carrier(v);
    int anc = new_node(wire_tag(layer_, "edge", std::min(u, v), std::max(u, v)));
    pat_.entangle.push_back({anc, cu});
    pat_.entangle.push_back({anc, cv});

    // Branches apply (Z_u Z_v)^m exp(-i (base/2) Z_u Z_v); base -2*theta
    // realizes exp(i theta ZZ). Pending X byproducts on either wire flip
    // the rotation sense, so the sign domain is the symmetric difference
    // of the two X frames (a shared source cancels).
    std::set<int> sign;
    auto su = xframe_[static_cast<std::size_t>(u)];
    auto sv = xframe_[static_cast<std::size_t>(v)];
    std::set_symmetric_difference(su.begin(), su.end(), sv.begin(), sv.end(),
                                  std::inserter(sign, sign.begin()));
    MeasureCmd m;
    m.node = anc;
    m.plane = MeasPlane::YZ;
    m.angle = -2.0 * theta;
    m.sign_domain = domain_of(sign);
    pat_.measure.push_back(std::move(m));
    zframe_[static_cast<std::size_t>(u)].insert(anc);
    zframe_[static_cast<std::size_t>(v)].insert(anc);
}

void PatternBuilder::z_rotation(int v, double theta) {
    if (finalized_) throw InternalError("pattern builder already finalized");
    int cv = carrier(v);
    int anc = new_node(wire_tag(layer_, "lin", v));
    pat_.entangle.push_back({anc, cv});
    MeasureCmd m;
    m.node = anc;
    m.plane = MeasPlane::YZ;
    m.angle = -2.0 * theta;
    m.sign_domain = domain_of(xframe_[static_cast<std::size_t>(v)]);
    pat_.measure.push_back(std::move(m));
    zframe_[static_cast<std::size_t>(v)].insert(anc);
}

PatternBuilder::MixerStage PatternBuilder::mixer_first_stage(int v) {
    int c = carrier(v);
    int prime = new_node(wire_tag(layer_, "prime", v));
    int next = new_node(wire_tag(layer_, "carrier", v));
    pat_.entangle.push_back({c, prime});
    pat_.entangle.push_back({prime, next});

    // Teleport the carrier: XY base 0; pending Z byproducts shift the
    // measured angle by pi, so they are absorbed via the offset domain.
    MeasureCmd m;
    m.node = c;
    m.plane = MeasPlane::XY;
    m.angle = 0.0;
    m.offset_domain = domain_of(zframe_[static_cast<std::size_t>(v)]);
    pat_.measure.push_back(std::move(m));
    zframe_[static_cast<std::size_t>(v)] = {c};
    return MixerStage{v, c, prime, next};
}

void PatternBuilder::mixer_second_stage(const MixerStage& st, double beta) {
    // Middle node: XY base -beta. Only the carrier outcome flips the
    // rotation sense; the wire's old X frame commutes through to the new
    // carrier instead of flipping this angle.
    MeasureCmd m;
    m.node = st.prime;
    m.plane = MeasPlane::XY;
    m.angle = -beta;
    m.sign_domain = {st.old_carrier};
    pat_.measure.push_back(std::move(m));
    xframe_[static_cast<std::size_t>(st.wire)].insert(st.prime);
    carrier_[static_cast<std::size_t>(st.wire)] = st.next_carrier;
}

void PatternBuilder::x_rotation(int v, double beta) {
    if (finalized_) throw InternalError("pattern builder already finalized");
    MixerStage st = mixer_first_stage(v);
    mixer_second_stage(st, beta);
}

void PatternBuilder::mixer_layer(double beta) {
    if (finalized_) throw InternalError("pattern builder already finalized");
    std::vector<MixerStage> stages;
    stages.reserve(carrier_.size());
    for (int v = 0; v < static_cast<int>(carrier_.size()); ++v)
        stages.push_back(mixer_first_stage(v));
    for (const MixerStage& st : stages) mixer_second_stage(st, beta);
}

void PatternBuilder::finalize() {
    if (finalized_) throw InternalError("pattern builder already finalized");
    finalized_ = true;
    for (int v = 0; v < static_cast<int>(carrier_.size()); ++v) {
        int c = carrier_[static_cast<std::size_t>(v)];
        pat_.outputs.push_back(c);
        const auto& xf = xframe_[static_cast<std::size_t>(v)];
        const auto& zf = zframe_[static_cast<std::size_t>(v)];
        if (!xf.empty()) pat_.corrections.push_back({c, 'X', domain_of(xf)});
        if (!zf.empty()) pat_.corrections.push_back({c, 'Z', domain_of(zf)});
    }
}

MeasurementPattern PatternBuilder::take() {
    if (!finalized_) throw InternalError("pattern builder not finalized");
    return std::move(pat_);
}

MeasurementPattern compile_qaoa(const QuboProblem& q, const QaoaParams& params) {
    int p = params.depth();
    if (q.num_vars < 1) throw InputError("problem needs at least one variable");
    PatternBuilder b(q.num_vars);
    for (int k = 0; k < p; ++k) {
        b.begin_layer(k);
        double gamma = params.gammas[static_cast<std::size_t>(k)];
        double beta = params.betas[static_cast<std::size_t>(k)];
        for (const auto& [key, j] : q.quadratic)
            b.phase_gadget(key.first, key.second, -2.0 * gamma * j);
        for (const auto& [v, h] : q.linear) b.z_rotation(v, -2.0 * gamma * h);
        b.mixer_layer(beta);
    }
    b.finalize();
    return b.take();
}

MeasurementPattern compile_phase_gadget_fragment(double theta) {
    PatternBuilder b(2, true);
    b.phase_gadget(0, 1, theta);
    b.finalize();
    return b.take();
}

MeasurementPattern compile_z_rotation_fragment(double theta) {
    PatternBuilder b(1, true);
    b.z_rotation(0, theta);
    b.finalize();
    return b.take();
}

MeasurementPattern compile_x_rotation_fragment(double beta) {
    PatternBuilder b(1, true);
    b.x_rotation(0, beta);
    b.finalize();
    return b.take();
}

ResourceEstimate resource_estimate(const QuboProblem& q, int p) {
    if (p < 1) throw InputError("depth must be at least 1");
    if (q.num_vars < 1) throw InputError("problem needs at least one variable");
    ResourceEstimate r;
    r.num_vars = q.num_vars;
    r.depth = p;
    r.problem_edges = q.quadratic.size();
    r.problem_linear = q.linear.size();
    auto pp = static_cast<std::size_t>(p);
    auto nv = static_cast<std::size_t>(q.num_vars);
    r.pattern_ancillas = pp * (r.problem_edges + 2 * nv + r.problem_linear);
    r.pattern_cz = pp * (2 * r.problem_edges + 2 * nv + r.problem_linear);
    r.pattern_nodes = nv + r.pattern_ancillas;
    r.mbqc_qubits = r.pattern_nodes;
    r.bound_ancillas = pp * (r.problem_edges + 2 * nv);
    r.bound_cz = pp * (2 * r.problem_edges + 2 * nv);
    r.gate_qubits = nv;
    r.gate_zz = pp * r.problem_edges;
    r.gate_cnot_equiv = 2 * pp * r.problem_edges;
    r.gate_rz = pp * r.problem_linear;
    return r;
}

std::string resource_estimate_to_json(const ResourceEstimate& r) {
    nlohmann::json j;
    j["num_vars"] = r.num_vars;
    j["depth"] = r.depth;
    j["problem_edges"] = r.problem_edges;
    j["problem_linear"] = r.problem_linear;
    j["pattern"]["ancillas"] = r.pattern_ancillas;
    j["pattern"]["cz_count"] = r.pattern_cz;
    j["pattern"]["nodes"] = r.pattern_nodes;
    j["pattern"]["mbqc_qubits"] = r.mbqc_qubits;
    j["pattern"]["bound_ancillas"] = r.bound_ancillas;
    j["pattern"]["bound_cz"] = r.bound_cz;
    j["gate_model"]["qubits"] = r.gate_qubits;
    j["gate_model"]["zz_rotations"] = r.gate_zz;
    j["gate_model"]["cnot_equivalent"] = r.gate_cnot_equiv;
    j["gate_model"]["rz_rotations"] = r.gate_rz;
    return j.dump(2);
}

namespace {

[[nodiscard]] std::string format_angle(const MeasureCmd& m) {
    Phase ph;
    bool exact = false;
    if (m.angle_exact) {
        ph = *m.angle_exact;
        exact = true;
    } else {
        auto rec = Phase::from_radians(m.angle, 192, 1e-12);
        if (rec) {
            ph = *rec;
            exact = true;
        }
    }
    if (exact) return ph.str();
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", m.angle);
    return buf;
}

struct GraphAnnotations {
    std::map<int, int> order;                      // node -> measurement index
    std::map<int, const MeasureCmd*> meas;         // node -> command
    std::set<int> output_set;
};

[[nodiscard]] GraphAnnotations annotate(const MeasurementPattern& p) {
    GraphAnnotations g;
    for (std::size_t i = 0; i < p.measure.size(); ++i) {
        g.order[p.measure[i].node] = static_cast<int>(i);
        g.meas[p.measure[i].node] = &p.measure[i];
    }
    g.output_set.insert(p.outputs.begin(), p.outputs.end());
    return g;
}

/** Planarity of the entanglement graph; nullopt when the budget ran out. */
[[nodiscard]] std::optional<bool> try_planar(const MeasurementPattern& p) {
    int max_node = -1;
    for (int n : p.nodes) max_node = std::max(max_node, n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(p.entangle.size());
    for (const auto& e : p.entangle) edges.emplace_back(e.first, e.second);
    try {
        return is_planar(max_node + 1, edges);
    } catch (const ResourceError&) {
        return std::nullopt;
    }
}

}  // namespace

std::string export_resource_graph_dot(const MeasurementPattern& p) {
    GraphAnnotations g = annotate(p);
    std::optional<bool> planar = try_planar(p);
    std::string out = "graph pattern {\n";
    out += "  // nodes: " + std::to_string(p.nodes.size()) +
           "  edges: " + std::to_string(p.entangle.size()) + "\n";
    out += "  // planar: ";
    out += planar ? (*planar ? "true" : "false") : "unknown (budget exceeded)";
    out += "\n  node [shape=circle];\n";
    for (int n : p.nodes) {
        std::string label = std::to_string(n);
        auto role = p.roles.find(n);
        if (role != p.roles.end()) label += "\\n" + role->second;
        auto it = g.meas.find(n);
        if (it != g.meas.end()) {
            label += "\\n#" + std::to_string(g.order[n]) + " " +
                     plane_name(it->second->plane) + " " + format_angle(*it->second);
        }
        out += "  n" + std::to_string(n) + " [label=\"" + label + "\"";
        if (g.output_set.count(n)) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (const auto& e : p.entangle)
        out += "  n" + std::to_string(e.first) + " -- n" + std::to_string(e.second) + ";\n";
    out += "}\n";
    return out;
}

std::string export_resource_graph_json(const MeasurementPattern& p) {
    GraphAnnotations g = annotate(p);
    std::optional<bool> planar = try_planar(p);
    nlohmann::json j;
    j["format"] = 1;
    j["num_nodes"] = p.nodes.size();
    j["num_edges"] = p.entangle.size();
    j["nodes"] = nlohmann::json::array();
    for (int n : p.nodes) {
        nlohmann::json node;
        node["id"] = n;
        auto role = p.roles.find(n);
        if (role != p.roles.end()) node["role"] = role->second;
        node["output"] = g.output_set.count(n) > 0;
        auto it = g.meas.find(n);
        if (it != g.meas.end()) {
            node["order"] = g.order[n];
            node["plane"] = plane_name(it->second->plane);
            node["angle"] = it->second->angle;
            node["angle_text"] = format_angle(*it->second);
        }
        j["nodes"].push_back(std::move(node));
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : p.entangle) j["edges"].push_back({e.first, e.second});
    if (planar)
        j["planar"] = *planar;
    else
        j["planar"] = nullptr;
    j["planarity_note"] = planar ? "exact" : "search budget exceeded";
    j["measurement_order"] = nlohmann::json::array();
    for (const auto& m : p.measure) j["measurement_order"].push_back(m.node);
    return j.dump(2);
}

}  // namespace qloom
