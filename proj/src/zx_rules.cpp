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
#include <complex>

#include "qloom/zx.hpp"

namespace qloom {

namespace {

const double kSqrt2 = std::sqrt(2.0);

bool is_plain_spider_edge(const ZxDiagram& d, int e) {
    if (!d.has_edge(e)) return false;
    const ZxEdge& ed = d.edge(e);
    return !ed.hadamard && !d.is_boundary(ed.a) && !d.is_boundary(ed.b);
}

/** Edge ids connecting u and v (any type). */
std::vector<int> edges_between(const ZxDiagram& d, int u, int v) {
    std::vector<int> out;
    for (const int e : d.incident_edges(u))
        if (d.other_end(e, u) == v) out.push_back(e);
    return out;
}

bool apply_fusion(ZxDiagram& d, const RewriteSite& site) {
    if (site.edges.size() != 1) return false;
    const int e = site.edges.front();
    if (!is_plain_spider_edge(d, e)) return false;
    const int u = d.edge(e).a;
    const int v = d.edge(e).b;
    if (d.color(u) != d.color(v)) return false;

    d.add_phase(u, d.phase(v));
    for (const int f : d.incident_edges(v)) {
        if (f == e) continue;
        if (d.other_end(f, v) == u) {
            // Parallel edge becomes a self-contraction of the merged spider:
            // a plain loop drops freely; a Hadamard loop adds a pi phase and
            // a factor 1/sqrt2.
            if (d.edge(f).hadamard) {
                d.add_phase(u, Phase::pi_times(1));
                d.multiply_scalar(cdouble(1.0 / kSqrt2));
            }
            d.remove_edge(f);
        } else {
            d.reattach_end(f, v, u);
        }
    }
    d.remove_spider(v);  // also removes e
    return true;
}

bool apply_split(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 1) return false;
    const int v = site.nodes.front();
    if (!d.has_node(v) || d.is_boundary(v)) return false;
    const std::vector<int> inc = d.incident_edges(v);
    std::vector<int> wanted = site.edges;
    std::sort(wanted.begin(), wanted.end());
    if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end())
        return false;
    for (const int f : wanted)
        if (std::find(inc.begin(), inc.end(), f) == inc.end()) return false;

    const int w = d.add_spider(d.color(v), Phase());
    for (const int f : wanted) {
        // Moving an edge cannot create a self-loop here: w is brand new, so
        // no edge can already touch it.
        d.reattach_end(f, v, w);
    }
    d.add_edge(v, w, false);
    return true;
}

bool apply_identity_remove(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 1) return false;
    const int v = site.nodes.front();
    if (!d.has_node(v) || d.is_boundary(v)) return false;
    if (!d.phase(v).is_zero() || d.degree(v) != 2) return false;
    const std::vector<int> inc = d.incident_edges(v);
    const int e1 = inc[0], e2 = inc[1];
    const bool h1 = d.edge(e1).hadamard, h2 = d.edge(e2).hadamard;
    if (h1 && h2) return false;  // that case belongs to HadamardCancel
    const int a = d.other_end(e1, v);
    const int b = d.other_end(e2, v);
    if (a == b) return false;  // digon; removal would need a self-loop

    d.add_edge(a, b, h1 != h2);
    d.remove_spider(v);
    return true;
}

bool apply_identity_insert(ZxDiagram& d, const RewriteSite& site) {
    if (site.edges.size() != 1) return false;
    const int e = site.edges.front();
    if (!d.has_edge(e)) return false;
    const int a = d.edge(e).a;
    const int b = d.edge(e).b;
    const bool h_total = d.edge(e).hadamard;

    const int m = d.add_spider(site.color, Phase());
    d.remove_edge(e);
    d.add_edge(a, m, site.hadamard_first);
    d.add_edge(m, b, h_total != site.hadamard_first);
    return true;
}

bool apply_color_change(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 1) return false;
    const int v = site.nodes.front();
    if (!d.has_node(v) || d.is_boundary(v)) return false;

    d.set_color(v, other_color(d.color(v)));
    for (const int e : d.incident_edges(v))
        d.set_edge_hadamard(e, !d.edge(e).hadamard);
    return true;
}

bool apply_hadamard_cancel(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 1) return false;
    const int v = site.nodes.front();
    if (!d.has_node(v) || d.is_boundary(v)) return false;
    if (!d.phase(v).is_zero() || d.degree(v) != 2) return false;
    const std::vector<int> inc = d.incident_edges(v);
    if (!d.edge(inc[0]).hadamard || !d.edge(inc[1]).hadamard) return false;
    const int a = d.other_end(inc[0], v);
    const int b = d.other_end(inc[1], v);
    if (a == b) return false;

    d.add_edge(a, b, false);
    d.remove_spider(v);
    return true;
}

bool apply_hadamard_insert(ZxDiagram& d, const RewriteSite& site) {
    if (site.edges.size() != 1) return false;
    const int e = site.edges.front();
    if (!d.has_edge(e) || d.edge(e).hadamard) return false;
    const int a = d.edge(e).a;
    const int b = d.edge(e).b;

    const int m = d.add_spider(site.color, Phase());
    d.remove_edge(e);
    d.add_edge(a, m, true);
    d.add_edge(m, b, true);
    return true;
}

bool apply_pi_copy(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 2) return false;
    const int p = site.nodes[0];
    const int t = site.nodes[1];
    if (!d.has_node(p) || !d.has_node(t) || p == t) return false;
    if (d.is_boundary(p) || d.is_boundary(t)) return false;
    if (!d.phase(p).is_pauli() || d.degree(p) != 2) return false;
    if (d.color(p) != other_color(d.color(t))) return false;
    const std::vector<int> between = edges_between(d, p, t);
    if (between.size() != 1 || d.edge(between.front()).hadamard) return false;
    const int e_pt = between.front();

    const bool m = d.phase(p).is_pi();
    const Phase alpha = d.phase(t);
    const SpiderColor copy_color = d.color(p);
    const Phase copy_phase = d.phase(p);

    // Scalar e^{i m alpha}; the through-phase flips sign when m = 1.
    if (m) {
        d.multiply_scalar(std::polar(1.0, alpha.radians()));
        d.set_phase(t, -alpha);
    }
    // Copies of the pusher appear on every other leg of t, on the t side of
    // any Hadamard edge.
    std::vector<int> others;
    for (const int f : d.incident_edges(t))
        if (f != e_pt) others.push_back(f);
    for (const int f : others) {
        // Reattachment keeps the edge type, so a Hadamard stays on the far
        // side of the inserted copy.
        const int c = d.add_spider(copy_color, copy_phase);
        d.reattach_end(f, t, c);
        d.add_edge(t, c, false);
    }
    // The pusher's outer wire now enters t directly.
    for (const int f : d.incident_edges(p)) {
        if (f == e_pt) continue;
        d.reattach_end(f, p, t);
    }
    d.remove_spider(p);
    return true;
}

bool apply_state_copy(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 2) return false;
    const int s = site.nodes[0];
    const int t = site.nodes[1];
    if (!d.has_node(s) || !d.has_node(t) || s == t) return false;
    if (d.is_boundary(s) || d.is_boundary(t)) return false;
    if (!d.phase(s).is_pauli() || d.degree(s) != 1) return false;
    if (d.color(s) != other_color(d.color(t))) return false;
    const int e_st = d.incident_edges(s).front();
    if (d.edge(e_st).hadamard || d.other_end(e_st, s) != t) return false;

    const bool m = d.phase(s).is_pi();
    const Phase alpha = d.phase(t);
    const SpiderColor copy_color = d.color(s);
    const Phase copy_phase = d.phase(s);
    const std::size_t n = d.degree(t);

    // Contracting the state through t leaves n-1 copies and a scalar
    // sqrt2 * e^{i m alpha} * 2^{-(n-1)/2}.
    cdouble factor = kSqrt2 * std::pow(2.0, -0.5 * static_cast<double>(n - 1));
    if (m) factor *= std::polar(1.0, alpha.radians());
    d.multiply_scalar(factor);

    std::vector<int> others;
    for (const int f : d.incident_edges(t))
        if (f != e_st) others.push_back(f);
    for (const int f : others) {
        const int c = d.add_spider(copy_color, copy_phase);
        d.reattach_end(f, t, c);
    }
    d.remove_spider(s);
    d.remove_spider(t);
    return true;
}

bool quad_member(const std::vector<int>& quad, int id) {
    return std::find(quad.begin(), quad.end(), id) != quad.end();
}

bool apply_bialgebra(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 4) return false;
    const int x1 = site.nodes[0], x2 = site.nodes[1];
    const int z1 = site.nodes[2], z2 = site.nodes[3];
    const std::vector<int> quad = {x1, x2, z1, z2};
    for (std::size_t i = 0; i < quad.size(); ++i) {
        if (!d.has_node(quad[i]) || d.is_boundary(quad[i])) return false;
        for (std::size_t j = i + 1; j < quad.size(); ++j)
            if (quad[i] == quad[j]) return false;
    }
    for (const int x : {x1, x2})
        if (d.color(x) != SpiderColor::X) return false;
    for (const int z : {z1, z2})
        if (d.color(z) != SpiderColor::Z) return false;
    for (const int v : quad)
        if (!d.phase(v).is_zero() || d.degree(v) != 3) return false;
    for (const int x : {x1, x2})
        for (const int z : {z1, z2}) {
            const std::vector<int> be = edges_between(d, x, z);
            if (be.size() != 1 || d.edge(be.front()).hadamard) return false;
        }
    // Each node's remaining leg must leave the quad.
    auto outer_edge = [&](int v) {
        for (const int f : d.incident_edges(v))
            if (!quad_member(quad, d.other_end(f, v))) return f;
        return -1;
    };
    const int ex1 = outer_edge(x1), ex2 = outer_edge(x2);
    const int ez1 = outer_edge(z1), ez2 = outer_edge(z2);
    if (ex1 < 0 || ex2 < 0 || ez1 < 0 || ez2 < 0) return false;

    // Contract to a dumbbell: the new X spider inherits the Z-side outer
    // legs and vice versa; scalar gains 2^{-1/2}.
    const int xn = d.add_spider(SpiderColor::X, Phase());
    const int zn = d.add_spider(SpiderColor::Z, Phase());
    d.reattach_end(ez1, z1, xn);
    d.reattach_end(ez2, z2, xn);
    d.reattach_end(ex1, x1, zn);
    d.reattach_end(ex2, x2, zn);
    d.add_edge(xn, zn, false);
    for (const int v : quad) d.remove_spider(v);
    d.multiply_scalar(cdouble(1.0 / kSqrt2));
    return true;
}

bool apply_bialgebra_expand(ZxDiagram& d, const RewriteSite& site) {
    if (site.nodes.size() != 2) return false;
    const int x = site.nodes[0];
    const int z = site.nodes[1];
    if (!d.has_node(x) || !d.has_node(z) || x == z) return false;
    if (d.is_boundary(x) || d.is_boundary(z)) return false;
    if (d.color(x) != SpiderColor::X || d.color(z) != SpiderColor::Z) return false;
    if (!d.phase(x).is_zero() || !d.phase(z).is_zero()) return false;
    if (d.degree(x) != 3 || d.degree(z) != 3) return false;
    const std::vector<int> be = edges_between(d, x, z);
    if (be.size() != 1 || d.edge(be.front()).hadamard) return false;

    std::vector<int> x_outer, z_outer;
    for (const int f : d.incident_edges(x))
        if (f != be.front()) x_outer.push_back(f);
    for (const int f : d.incident_edges(z))
        if (f != be.front()) z_outer.push_back(f);

    // Exact inverse of the contraction: new X spiders take z's outer legs,
    // new Z spiders take x's outer legs, joined completely bipartite.
    const int nx1 = d.add_spider(SpiderColor::X, Phase());
    const int nx2 = d.add_spider(SpiderColor::X, Phase());
    const int nz1 = d.add_spider(SpiderColor::Z, Phase());
    const int nz2 = d.add_spider(SpiderColor::Z, Phase());
    d.reattach_end(z_outer[0], z, nx1);
    d.reattach_end(z_outer[1], z, nx2);
    d.reattach_end(x_outer[0], x, nz1);
    d.reattach_end(x_outer[1], x, nz2);
    for (const int nx : {nx1, nx2})
        for (const int nz : {nz1, nz2}) d.add_edge(nx, nz, false);
    d.remove_spider(x);
    d.remove_spider(z);
    d.multiply_scalar(cdouble(kSqrt2));
    return true;
}

}  // namespace

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::SpiderFusion: return "spider_fusion";
        case Rule::SpiderSplit: return "spider_split";
        case Rule::IdentityRemove: return "identity_remove";
        case Rule::IdentityInsert: return "identity_insert";
        case Rule::ColorChange: return "color_change";
        case Rule::HadamardCancel: return "hadamard_cancel";
        case Rule::HadamardInsert: return "hadamard_insert";
        case Rule::PiCopy: return "pi_copy";
        case Rule::StateCopy: return "state_copy";
        case Rule::Bialgebra: return "bialgebra";
        case Rule::BialgebraExpand: return "bialgebra_expand";
    }
    throw InternalError("rule_name: unknown rule");
}

std::optional<Rule> rule_from_name(const std::string& name) {
    for (const Rule r :
         {Rule::SpiderFusion, Rule::SpiderSplit, Rule::IdentityRemove,
          Rule::IdentityInsert, Rule::ColorChange, Rule::HadamardCancel,
          Rule::HadamardInsert, Rule::PiCopy, Rule::StateCopy, Rule::Bialgebra,
          Rule::BialgebraExpand}) {
        if (rule_name(r) == name) return r;
    }
    return std::nullopt;
}

bool apply_rule(ZxDiagram& d, Rule rule, const RewriteSite& site) {
    switch (rule) {
        case Rule::SpiderFusion: return apply_fusion(d, site);
        case Rule::SpiderSplit: return apply_split(d, site);
        case Rule::IdentityRemove: return apply_identity_remove(d, site);
        case Rule::IdentityInsert: return apply_identity_insert(d, site);
        case Rule::ColorChange: return apply_color_change(d, site);
        case Rule::HadamardCancel: return apply_hadamard_cancel(d, site);
        case Rule::HadamardInsert: return apply_hadamard_insert(d, site);
        case Rule::PiCopy: return apply_pi_copy(d, site);
        case Rule::StateCopy: return apply_state_copy(d, site);
        case Rule::Bialgebra: return apply_bialgebra(d, site);
        case Rule::BialgebraExpand: return apply_bialgebra_expand(d, site);
    }
    throw InternalError("apply_rule: unknown rule");
}

ReplayResult replay_derivation(const ZxDiagram& start,
                               const std::vector<DerivationStep>& steps) {
    ReplayResult result;
    ZxDiagram current = start;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!apply_rule(current, steps[i].rule, steps[i].site)) {
            result.failed_step = i;
            return result;
        }
        result.intermediates.push_back(current);
    }
    return result;
}

}  // namespace qloom
