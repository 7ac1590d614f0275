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

#include <map>
#include <set>

#include <json.hpp>

#include "qloom/zx.hpp"

namespace qloom {

using nlohmann::json;

std::string diagram_to_json(const ZxDiagram& d) {
    json j;
    j["format"] = 1;
    j["spiders"] = json::array();
    for (const int id : d.spider_ids()) {
        j["spiders"].push_back({{"id", id},
                                {"color", d.color(id) == SpiderColor::Z ? "Z" : "X"},
                                {"phase_num", d.phase(id).num()},
                                {"phase_den_pi", d.phase(id).den()}});
    }
    j["edges"] = json::array();
    for (const int e : d.edge_ids()) {
        j["edges"].push_back({{"a", d.edge(e).a},
                              {"b", d.edge(e).b},
                              {"hadamard", d.edge(e).hadamard}});
    }
    j["inputs"] = d.inputs();
    j["outputs"] = d.outputs();
    j["scalar"] = {{"re", d.scalar().real()}, {"im", d.scalar().imag()}};
    return j.dump(2);
}

namespace {

const json& require_key(const json& j, const char* key, const char* context) {
    const auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string(context) + ": missing key '" + key + "'");
    return *it;
}

}  // namespace

ZxDiagram diagram_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("diagram JSON: parse error: ") + e.what());
    }
    constexpr const char* ctx = "diagram JSON";
    try {
        const json& spiders = require_key(j, "spiders", ctx);
        const json& edges = require_key(j, "edges", ctx);
        const json& inputs = require_key(j, "inputs", ctx);
        const json& outputs = require_key(j, "outputs", ctx);

        ZxDiagram d;
        std::map<std::int64_t, int> remap;
        std::set<std::int64_t> boundary_ids;
        for (const json& b : inputs) boundary_ids.insert(b.get<std::int64_t>());
        for (const json& b : outputs) {
            const auto id = b.get<std::int64_t>();
            if (boundary_ids.count(id))
                throw InputError("diagram JSON: id listed in both 'inputs' and "
                                 "'outputs': " + std::to_string(id));
            boundary_ids.insert(id);
        }
        for (const json& s : spiders) {
            const auto id = require_key(s, "id", ctx).get<std::int64_t>();
            if (remap.count(id) || boundary_ids.count(id))
                throw InputError("diagram JSON: duplicate node id " +
                                 std::to_string(id));
            const std::string color = require_key(s, "color", ctx).get<std::string>();
            if (color != "Z" && color != "X")
                throw InputError("diagram JSON: bad 'color' value '" + color + "'");
            const auto num = require_key(s, "phase_num", ctx).get<std::int64_t>();
            const auto den = require_key(s, "phase_den_pi", ctx).get<std::int64_t>();
            if (den == 0)
                throw InputError("diagram JSON: 'phase_den_pi' must be nonzero");
            remap[id] = d.add_spider(
                color == "Z" ? SpiderColor::Z : SpiderColor::X, Phase(num, den));
        }
        for (const json& b : inputs) remap[b.get<std::int64_t>()] = d.add_input();
        for (const json& b : outputs) remap[b.get<std::int64_t>()] = d.add_output();

        for (const json& e : edges) {
            const auto a = require_key(e, "a", ctx).get<std::int64_t>();
            const auto b = require_key(e, "b", ctx).get<std::int64_t>();
            if (!remap.count(a) || !remap.count(b))
                throw InputError("diagram JSON: edge references unknown node id " +
                                 std::to_string(remap.count(a) ? b : a));
            bool h = false;
            if (e.contains("hadamard")) h = e["hadamard"].get<bool>();
            d.add_edge(remap[a], remap[b], h);
        }
        if (j.contains("scalar")) {
            const json& s = j["scalar"];
            d.set_scalar(cdouble(require_key(s, "re", ctx).get<double>(),
                                 require_key(s, "im", ctx).get<double>()));
        }
        d.validate();
        return d;
    } catch (const json::exception& e) {
        throw InputError(std::string("diagram JSON: malformed value: ") + e.what());
    } catch (const InternalError& e) {
        throw InputError(std::string("diagram JSON: invalid structure: ") + e.what());
    }
}

}  // namespace qloom
