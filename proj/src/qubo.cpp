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

#include "qloom/qubo.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <json.hpp>

namespace qloom {

using nlohmann::json;

void Graph::normalize() {
    if (num_vertices < 0) throw InputError("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) throw InputError("graph: self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= num_vertices)
            throw InputError("graph: edge endpoint out of range: (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
        if (!seen.insert({u, v}).second)
            throw InputError("graph: duplicate edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
    }
    std::sort(edges.begin(), edges.end());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

void QuboProblem::normalize() {
    if (num_vars < 0) throw InputError("qubo: negative variable count");
    for (auto it = linear.begin(); it != linear.end();) {
        if (it->first < 0 || it->first >= num_vars)
            throw InputError("qubo: linear index out of range: " +
                             std::to_string(it->first));
        if (it->second == 0.0)
            it = linear.erase(it);
        else
            ++it;
    }
    std::map<std::pair<int, int>, double> canon;
    for (const auto& [key, val] : quadratic) {
        auto [u, v] = key;
        if (u == v) throw InputError("qubo: diagonal quadratic term on variable " +
                                     std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= num_vars)
            throw InputError("qubo: quadratic index out of range: (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
        if (val == 0.0) continue;
        if (canon.count({u, v}))
            throw InputError("qubo: duplicate quadratic term (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
        canon[{u, v}] = val;
    }
    quadratic = std::move(canon);
}

double qubo_cost(const QuboProblem& q, std::uint64_t x) {
    double c = q.constant;
    for (const auto& [v, h] : q.linear) c += h * spin_of(x, v);
    for (const auto& [uv, j] : q.quadratic)
        c += j * spin_of(x, uv.first) * spin_of(x, uv.second);
    return c;
}

namespace {

// Lexicographic order on the bitstring x_0 x_1 ... x_{n-1}.
bool lex_less(std::uint64_t a, std::uint64_t b, int n) {
    for (int v = 0; v < n; ++v) {
        const int av = (a >> v) & 1ULL, bv = (b >> v) & 1ULL;
        if (av != bv) return av < bv;
    }
    return false;
}

}  // namespace

CostReport brute_force(const QuboProblem& q) {
    if (q.num_vars > 24)
        throw ResourceError("brute_force: more than 24 variables");
    if (q.num_vars < 1) throw InputError("brute_force: empty problem");
    CostReport r;
    r.num_evaluated = 1ULL << q.num_vars;
    bool first = true;
    for (std::uint64_t x = 0; x < r.num_evaluated; ++x) {
        const double c = qubo_cost(q, x);
        if (first || c > r.best_cost) {
            r.best_cost = c;
            r.best_assignment = x;
            r.num_optimal = 1;
            first = false;
        } else if (c == r.best_cost) {
            ++r.num_optimal;
            if (lex_less(x, r.best_assignment, q.num_vars)) r.best_assignment = x;
        }
    }
    return r;
}

QuboProblem maxcut_to_qubo(const Graph& g) {
    QuboProblem q;
    q.num_vars = g.num_vertices;
    q.constant = static_cast<double>(g.edges.size()) / 2.0;
    for (const auto& [u, v] : g.edges) q.quadratic[{u, v}] = -0.5;
    q.normalize();
    return q;
}

int cut_value(const Graph& g, std::uint64_t x) {
    int cut = 0;
    for (const auto& [u, v] : g.edges)
        if (((x >> u) & 1ULL) != ((x >> v) & 1ULL)) ++cut;
    return cut;
}

bool is_independent_set(const Graph& g, std::uint64_t x) {
    for (const auto& [u, v] : g.edges)
        if (((x >> u) & 1ULL) && ((x >> v) & 1ULL)) return false;
    return true;
}

namespace {

const json& need(const json& j, const char* key, const char* ctx) {
    const auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string(ctx) + ": missing key '" + key + "'");
    return *it;
}

Graph graph_from_json(const json& j, const char* ctx) {
    Graph g;
    g.num_vertices = need(j, "num_vertices", ctx).get<int>();
    for (const json& e : need(j, "edges", ctx)) {
        if (!e.is_array() || e.size() != 2)
            throw InputError(std::string(ctx) +
                             ": each entry of 'edges' must be a pair [u, v]");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g.normalize();
    return g;
}

}  // namespace

ProblemInput problem_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("problem JSON: parse error: ") + e.what());
    }
    constexpr const char* ctx = "problem JSON";
    try {
        const std::string type = need(j, "type", ctx).get<std::string>();
        ProblemInput p;
        if (type == "qubo") {
            p.kind = ProblemKind::Qubo;
            p.qubo.num_vars = need(j, "num_vars", ctx).get<int>();
            if (j.contains("constant")) p.qubo.constant = j["constant"].get<double>();
            if (j.contains("linear")) {
                for (const json& t : j["linear"]) {
                    const int v = need(t, "v", ctx).get<int>();
                    if (p.qubo.linear.count(v))
                        throw InputError("problem JSON: duplicate linear term for "
                                         "variable " + std::to_string(v));
                    p.qubo.linear[v] = need(t, "h", ctx).get<double>();
                }
            }
            if (j.contains("quadratic")) {
                for (const json& t : j["quadratic"]) {
                    int u = need(t, "u", ctx).get<int>();
                    int v = need(t, "v", ctx).get<int>();
                    if (u > v) std::swap(u, v);
                    if (p.qubo.quadratic.count({u, v}))
                        throw InputError("problem JSON: duplicate quadratic term (" +
                                         std::to_string(u) + ", " +
                                         std::to_string(v) + ")");
                    p.qubo.quadratic[{u, v}] = need(t, "j", ctx).get<double>();
                }
            }
            p.qubo.normalize();
        } else if (type == "maxcut" || type == "mis") {
            p.kind = type == "maxcut" ? ProblemKind::MaxCut : ProblemKind::Mis;
            p.graph = graph_from_json(j, ctx);
            if (p.kind == ProblemKind::MaxCut) {
                p.qubo = maxcut_to_qubo(p.graph);
            } else {
                // MIS vertex weight as a linear term; kept for cost reporting.
                p.qubo.num_vars = p.graph.num_vertices;
                p.qubo.constant = static_cast<double>(p.graph.num_vertices) / 2.0;
                for (int v = 0; v < p.graph.num_vertices; ++v)
                    p.qubo.linear[v] = -0.5;
                p.qubo.normalize();
            }
        } else {
            throw InputError("problem JSON: unknown 'type' value '" + type + "'");
        }
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("problem JSON: malformed value: ") + e.what());
    }
}

std::string problem_to_json(const ProblemInput& p) {
    json j;
    switch (p.kind) {
        case ProblemKind::Qubo: {
            j["type"] = "qubo";
            j["num_vars"] = p.qubo.num_vars;
            j["constant"] = p.qubo.constant;
            j["linear"] = json::array();
            for (const auto& [v, h] : p.qubo.linear)
                j["linear"].push_back({{"v", v}, {"h", h}});
            j["quadratic"] = json::array();
            for (const auto& [uv, val] : p.qubo.quadratic)
                j["quadratic"].push_back(
                    {{"u", uv.first}, {"v", uv.second}, {"j", val}});
            break;
        }
        case ProblemKind::MaxCut:
        case ProblemKind::Mis: {
            j["type"] = p.kind == ProblemKind::MaxCut ? "maxcut" : "mis";
            j["num_vertices"] = p.graph.num_vertices;
            j["edges"] = json::array();
            for (const auto& [u, v] : p.graph.edges) j["edges"].push_back({u, v});
            break;
        }
    }
    return j.dump(2);
}

}  // namespace qloom
