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
#include <set>

#include <json.hpp>

#include "qloom/pattern.hpp"

namespace qloom {

using nlohmann::json;

PatternDiagnostics validate_pattern(const MeasurementPattern& p) {
    PatternDiagnostics d;
    std::set<int> nodes(p.nodes.begin(), p.nodes.end());
    if (nodes.size() != p.nodes.size()) d.fail("duplicate node id in 'nodes'");

    auto known = [&](int id) { return nodes.count(id) != 0; };
    std::set<int> outputs(p.outputs.begin(), p.outputs.end());
    if (outputs.size() != p.outputs.size()) d.fail("duplicate output id");
    for (const int id : p.outputs)
        if (!known(id)) d.fail("output " + std::to_string(id) + " is not a node");
    std::set<int> inputs(p.inputs.begin(), p.inputs.end());
    if (inputs.size() != p.inputs.size()) d.fail("duplicate input id");
    for (const int id : p.inputs)
        if (!known(id)) d.fail("input " + std::to_string(id) + " is not a node");

    for (const auto& [a, b] : p.entangle) {
        if (!known(a) || !known(b))
            d.fail("entangle edge (" + std::to_string(a) + ", " + std::to_string(b) +
                   ") references an unknown node");
        else if (a == b)
            d.fail("entangle self-loop on node " + std::to_string(a));
    }

    std::set<int> measured;
    std::set<int> measured_so_far;
    for (std::size_t i = 0; i < p.measure.size(); ++i) {
        const MeasureCmd& m = p.measure[i];
        if (!known(m.node)) {
            d.fail("measurement " + std::to_string(i) + " targets unknown node " +
                   std::to_string(m.node));
            continue;
        }
        if (outputs.count(m.node))
            d.fail("measurement " + std::to_string(i) + " targets output node " +
                   std::to_string(m.node));
        if (!measured.insert(m.node).second)
            d.fail("node " + std::to_string(m.node) + " measured twice");
        for (const auto* dom : {&m.sign_domain, &m.offset_domain}) {
            for (const int dep : *dom) {
                if (!measured_so_far.count(dep))
                    d.fail("measurement " + std::to_string(i) + " on node " +
                           std::to_string(m.node) + " depends on node " +
                           std::to_string(dep) + " which is not measured earlier");
            }
        }
        measured_so_far.insert(m.node);
    }
    for (const int id : p.nodes) {
        if (!outputs.count(id) && !measured.count(id))
            d.fail("node " + std::to_string(id) + " is neither measured nor an output");
    }
    for (const CorrectionCmd& c : p.corrections) {
        if (!known(c.node)) {
            d.fail("correction targets unknown node " + std::to_string(c.node));
            continue;
        }
        if (!outputs.count(c.node))
            d.fail("correction targets non-output node " + std::to_string(c.node));
        if (c.pauli != 'X' && c.pauli != 'Z')
            d.fail(std::string("correction with unknown Pauli '") + c.pauli + "'");
        for (const int dep : c.domain)
            if (!measured.count(dep))
                d.fail("correction on node " + std::to_string(c.node) +
                       " depends on unmeasured node " + std::to_string(dep));
    }
    return d;
}

std::string pattern_to_json(const MeasurementPattern& p,
                            const std::string& problem_json,
                            const std::vector<double>& gammas,
                            const std::vector<double>& betas) {
    json j;
    j["format"] = 1;
    j["nodes"] = p.nodes;
    j["inputs"] = p.inputs;
    j["outputs"] = p.outputs;
    j["entangle"] = json::array();
    for (const auto& [a, b] : p.entangle) j["entangle"].push_back({a, b});
    j["measure"] = json::array();
    for (const MeasureCmd& m : p.measure) {
        json o;
        o["node"] = m.node;
        o["plane"] = m.plane == MeasPlane::XY ? "XY" : "YZ";
        // Angles serialize as exact rational multiples of pi when known or
        // recoverable; the float field is always present for convenience.
        o["angle"] = m.angle;
        std::optional<Phase> exact = m.angle_exact;
        if (!exact) exact = Phase::from_radians(m.angle, 192, 1e-12);
        if (exact) {
            o["angle_num"] = exact->num();
            o["angle_den_pi"] = exact->den();
        }
        o["sign_domain"] = m.sign_domain;
        o["offset_domain"] = m.offset_domain;
        j["measure"].push_back(o);
    }
    j["corrections"] = json::array();
    for (const CorrectionCmd& c : p.corrections)
        j["corrections"].push_back({{"node", c.node},
                                    {"pauli", std::string(1, c.pauli)},
                                    {"domain", c.domain}});
    if (!p.roles.empty()) {
        json r = json::object();
        for (const auto& [id, role] : p.roles) r[std::to_string(id)] = role;
        j["roles"] = r;
    }
    if (!problem_json.empty()) j["problem"] = json::parse(problem_json);
    if (!gammas.empty()) {
        j["params"] = {{"gammas", gammas}, {"betas", betas}};
    }
    return j.dump(2);
}

namespace {

const json& need(const json& j, const char* key, const char* ctx) {
    const auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string(ctx) + ": missing key '" + key + "'");
    return *it;
}

}  // namespace

ParsedPattern pattern_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("pattern JSON: parse error: ") + e.what());
    }
    constexpr const char* ctx = "pattern JSON";
    try {
        ParsedPattern out;
        MeasurementPattern& p = out.pattern;
        if (j.contains("format") && j["format"].get<int>() != 1)
            throw InputError("pattern JSON: unsupported 'format' version");
        p.nodes = need(j, "nodes", ctx).get<std::vector<int>>();
        if (j.contains("inputs")) p.inputs = j["inputs"].get<std::vector<int>>();
        p.outputs = need(j, "outputs", ctx).get<std::vector<int>>();
        for (const json& e : need(j, "entangle", ctx)) {
            if (!e.is_array() || e.size() != 2)
                throw InputError(
                    "pattern JSON: each 'entangle' entry must be a pair [a, b]");
            p.entangle.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        for (const json& m : need(j, "measure", ctx)) {
            MeasureCmd cmd;
            cmd.node = need(m, "node", ctx).get<int>();
            if (m.contains("plane")) {
                const std::string plane = m["plane"].get<std::string>();
                if (plane == "XY")
                    cmd.plane = MeasPlane::XY;
                else if (plane == "YZ")
                    cmd.plane = MeasPlane::YZ;
                else
                    throw InputError("pattern JSON: unknown 'plane' value '" + plane +
                                     "'");
            }
            if (m.contains("angle_num") || m.contains("angle_den_pi")) {
                const auto num = need(m, "angle_num", ctx).get<std::int64_t>();
                const auto den = need(m, "angle_den_pi", ctx).get<std::int64_t>();
                if (den == 0)
                    throw InputError("pattern JSON: 'angle_den_pi' must be nonzero");
                cmd.angle_exact = Phase(num, den);
                cmd.angle = cmd.angle_exact->radians();
            } else {
                cmd.angle = need(m, "angle", ctx).get<double>();
            }
            if (m.contains("sign_domain"))
                cmd.sign_domain = m["sign_domain"].get<std::vector<int>>();
            if (m.contains("offset_domain"))
                cmd.offset_domain = m["offset_domain"].get<std::vector<int>>();
            p.measure.push_back(std::move(cmd));
        }
        if (j.contains("corrections")) {
            for (const json& c : j["corrections"]) {
                CorrectionCmd cmd;
                cmd.node = need(c, "node", ctx).get<int>();
                const std::string pauli = need(c, "pauli", ctx).get<std::string>();
                if (pauli != "X" && pauli != "Z")
                    throw InputError("pattern JSON: unknown 'pauli' value '" + pauli +
                                     "'");
                cmd.pauli = pauli[0];
                if (c.contains("domain"))
                    cmd.domain = c["domain"].get<std::vector<int>>();
                p.corrections.push_back(std::move(cmd));
            }
        }
        if (j.contains("roles")) {
            for (const auto& [key, value] : j["roles"].items())
                p.roles[std::stoi(key)] = value.get<std::string>();
        }
        if (j.contains("problem")) out.problem_json = j["problem"].dump();
        if (j.contains("params")) {
            const json& prm = j["params"];
            out.gammas = need(prm, "gammas", ctx).get<std::vector<double>>();
            out.betas = need(prm, "betas", ctx).get<std::vector<double>>();
        }
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("pattern JSON: malformed value: ") + e.what());
    }
}

}  // namespace qloom
