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
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "qloom/compiler.hpp"
#include "qloom/error.hpp"

namespace qloom {

namespace {

// Exact planarity by Kuratowski's theorem: a graph is planar iff it has no
// subdivision of K5 or K3,3. The graph is first reduced (pruning vertices
// of degree <= 1 and smoothing degree-2 vertices, neither of which changes
// planarity), then cheap counting bounds are tried, then an exhaustive
// search for subdivisions runs under a step budget.

constexpr long long kDefaultBudget = 50'000'000;

struct Component {
    // Adjacency sets over compacted vertex ids 0..n-1.
    std::vector<std::set<int>> adj;
    std::vector<bool> alive;

    [[nodiscard]] int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

    void remove_vertex(int v) {
        for (int u : adj[static_cast<std::size_t>(v)]) adj[static_cast<std::size_t>(u)].erase(v);
        adj[static_cast<std::size_t>(v)].clear();
        alive[static_cast<std::size_t>(v)] = false;
    }
};

/**
 * Repeatedly deletes degree <= 1 vertices and smooths degree-2 vertices.
 * A smoothed vertex's neighbors become adjacent; if they already were, the
 * parallel edge is dropped (parallel edges never affect planarity).
 */
void reduce(Component& c) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(c.adj.size()); ++v) {
            if (!c.alive[static_cast<std::size_t>(v)]) continue;
            int d = c.degree(v);
            if (d <= 1) {
                c.remove_vertex(v);
                changed = true;
            } else if (d == 2) {
                auto it = c.adj[static_cast<std::size_t>(v)].begin();
                int x = *it++;
                int y = *it;
                c.remove_vertex(v);
                if (x != y) {
                    c.adj[static_cast<std::size_t>(x)].insert(y);
                    c.adj[static_cast<std::size_t>(y)].insert(x);
                }
                changed = true;
            }
        }
    }
}

/** Searches for vertex-disjoint paths realizing a Kuratowski subdivision. */
class SubdivisionSearch {
  public:
    SubdivisionSearch(const std::vector<std::vector<int>>& adj, long long& budget)
        : adj_(adj), budget_(budget), used_(adj.size(), false) {}

    /**
     * True when internally-disjoint paths exist joining every pair in
     * `pairs` over the given branch vertices (which no path may cross).
     */
    [[nodiscard]] bool realize(const std::vector<int>& branch,
                               const std::vector<std::pair<int, int>>& pairs) {
        std::fill(used_.begin(), used_.end(), false);
        for (int b : branch) used_[static_cast<std::size_t>(b)] = true;
        return connect(pairs, 0);
    }

  private:
    [[nodiscard]] bool connect(const std::vector<std::pair<int, int>>& pairs, std::size_t idx) {
        if (idx == pairs.size()) return true;
        return path_dfs(pairs[idx].first, pairs, idx);
    }

    // Extends a path from `cur` toward pairs[idx].second through unused
    // non-branch vertices; on reaching the target, recurses to the next
    // pair and backtracks through alternative routes on failure.
    [[nodiscard]] bool path_dfs(int cur, const std::vector<std::pair<int, int>>& pairs,
                                std::size_t idx) {
        if (--budget_ < 0)
            throw ResourceError("planarity search budget exceeded; graph too entangled for exact check");
        int target = pairs[idx].second;
        for (int nb : adj_[static_cast<std::size_t>(cur)]) {
            if (nb == target) {
                if (connect(pairs, idx + 1)) return true;
                continue;
            }
            if (used_[static_cast<std::size_t>(nb)]) continue;
            used_[static_cast<std::size_t>(nb)] = true;
            if (path_dfs(nb, pairs, idx)) return true;
            used_[static_cast<std::size_t>(nb)] = false;
        }
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    long long& budget_;
    std::vector<bool> used_;
};

/** Enumerates k-combinations of `pool`, invoking fn; fn returns true to stop. */
template <typename Fn>
bool for_each_combination(const std::vector<int>& pool, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::vector<int> combo(static_cast<std::size_t>(k));
    int n = static_cast<int>(pool.size());
    if (k > n) return false;
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < k; ++i)
            combo[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (fn(combo)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

[[nodiscard]] bool has_k5_subdivision(const std::vector<std::vector<int>>& adj, long long& budget) {
    std::vector<int> candidates;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (adj[static_cast<std::size_t>(v)].size() >= 4) candidates.push_back(v);
    if (candidates.size() < 5) return false;
    SubdivisionSearch search(adj, budget);
    return for_each_combination(candidates, 5, [&](const std::vector<int>& b) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                pairs.emplace_back(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
        return search.realize(b, pairs);
    });
}

[[nodiscard]] bool has_k33_subdivision(const std::vector<std::vector<int>>& adj, long long& budget) {
    std::vector<int> candidates;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (adj[static_cast<std::size_t>(v)].size() >= 3) candidates.push_back(v);
    if (candidates.size() < 6) return false;
    SubdivisionSearch search(adj, budget);
    return for_each_combination(candidates, 6, [&](const std::vector<int>& six) {
        // Bipartitions with six[0] pinned to side A kill the A/B symmetry.
        std::vector<int> rest(six.begin() + 1, six.end());
        return for_each_combination(rest, 2, [&](const std::vector<int>& apart) {
            std::vector<int> a = {six[0], apart[0], apart[1]};
            std::vector<int> bside;
            for (int v : rest)
                if (v != apart[0] && v != apart[1]) bside.push_back(v);
            std::vector<std::pair<int, int>> pairs;
            for (int x : a)
                for (int y : bside) pairs.emplace_back(x, y);
            return search.realize(six, pairs);
        });
    });
}

/** Planarity of one reduced component (compacted adjacency). */
[[nodiscard]] bool component_planar(const std::vector<std::vector<int>>& adj, long long& budget) {
    int n = static_cast<int>(adj.size());
    std::size_t m2 = 0;
    for (const auto& row : adj) m2 += row.size();
    std::size_t m = m2 / 2;
    if (n <= 4 || m <= static_cast<std::size_t>(n) + 2) return true;
    if (n >= 3 && m > 3 * static_cast<std::size_t>(n) - 6) return false;
    if (has_k5_subdivision(adj, budget)) return false;
    if (has_k33_subdivision(adj, budget)) return false;
    return true;
}

}  // namespace

bool is_planar(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
    if (num_nodes < 0) throw InputError("planarity: negative node count");
    Component g;
    g.adj.resize(static_cast<std::size_t>(num_nodes));
    g.alive.assign(static_cast<std::size_t>(num_nodes), true);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes)
            throw InputError("planarity: edge endpoint out of range");
        if (a == b) continue;  // self-loops are irrelevant to planarity
        g.adj[static_cast<std::size_t>(a)].insert(b);
        g.adj[static_cast<std::size_t>(b)].insert(a);
    }
    reduce(g);

    // Split survivors into connected components; each is checked on its own.
    long long budget = kDefaultBudget;
    std::vector<int> comp(static_cast<std::size_t>(num_nodes), -1);
    int num_comp = 0;
    for (int s = 0; s < num_nodes; ++s) {
        if (!g.alive[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = num_comp++;
        std::vector<int> stack = {s};
        comp[static_cast<std::size_t>(s)] = id;
        std::vector<int> members;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<int> local(static_cast<std::size_t>(num_nodes), -1);
        for (std::size_t i = 0; i < members.size(); ++i)
            local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int u : g.adj[static_cast<std::size_t>(members[i])])
                adj[i].push_back(local[static_cast<std::size_t>(u)]);
        for (auto& row : adj) std::sort(row.begin(), row.end());
        if (!component_planar(adj, budget)) return false;
    }
    return true;
}

}  // namespace qloom
