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
#include <map>
#include <vector>

#include "qloom/zx.hpp"

namespace qloom {

namespace {

// Dense tensor over named binary legs: leg k of `legs` is bit k of the
// flat index (legs[0] is the least significant bit).
struct LegTensor {
    std::vector<int> legs;
    std::vector<cdouble> a;
};

constexpr std::size_t kMaxRank = 22;  // intermediate-size guard (~64 MiB)

// Spreads the low bits of `packed` into the bit positions listed in `pos`.
inline std::size_t scatter(std::size_t packed, const std::vector<int>& pos) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < pos.size(); ++k)
        out |= ((packed >> k) & 1ULL) << pos[k];
    return out;
}

LegTensor contract_pair(const LegTensor& A, const LegTensor& B) {
    // Partition legs into A-only, B-only, shared.
    std::vector<int> shared;
    std::vector<int> a_only;
    for (const int l : A.legs) {
        if (std::find(B.legs.begin(), B.legs.end(), l) != B.legs.end())
            shared.push_back(l);
        else
            a_only.push_back(l);
    }
    std::vector<int> b_only;
    for (const int l : B.legs)
        if (std::find(shared.begin(), shared.end(), l) == shared.end())
            b_only.push_back(l);

    const std::size_t ra = a_only.size(), rb = b_only.size(), rs = shared.size();
    if (ra + rb > kMaxRank)
        throw ResourceError("to_matrix: intermediate tensor rank exceeds " +
                            std::to_string(kMaxRank));

    // Bit positions of each leg class within each operand's flat index.
    auto positions = [](const std::vector<int>& legs, const std::vector<int>& subset) {
        std::vector<int> pos;
        pos.reserve(subset.size());
        for (const int l : subset) {
            const auto it = std::find(legs.begin(), legs.end(), l);
            pos.push_back(static_cast<int>(it - legs.begin()));
        }
        return pos;
    };
    const std::vector<int> pa_own = positions(A.legs, a_only);
    const std::vector<int> pa_sh = positions(A.legs, shared);
    const std::vector<int> pb_own = positions(B.legs, b_only);
    const std::vector<int> pb_sh = positions(B.legs, shared);

    LegTensor R;
    R.legs = a_only;
    R.legs.insert(R.legs.end(), b_only.begin(), b_only.end());
    R.a.assign(std::size_t{1} << (ra + rb), cdouble(0.0));

    for (std::size_t ia = 0; ia < (std::size_t{1} << ra); ++ia) {
        const std::size_t base_a = scatter(ia, pa_own);
        for (std::size_t ib = 0; ib < (std::size_t{1} << rb); ++ib) {
            const std::size_t base_b = scatter(ib, pb_own);
            cdouble sum = 0.0;
            for (std::size_t is = 0; is < (std::size_t{1} << rs); ++is) {
                sum += A.a[base_a | scatter(is, pa_sh)] *
                       B.a[base_b | scatter(is, pb_sh)];
            }
            R.a[ia | (ib << ra)] = sum;
        }
    }
    return R;
}

LegTensor spider_tensor(SpiderColor color, const Phase& phase,
                        std::vector<int> legs) {
    const std::size_t n = legs.size();
    const cdouble eia = std::polar(1.0, phase.radians());
    LegTensor t;
    t.legs = std::move(legs);
    t.a.assign(std::size_t{1} << n, cdouble(0.0));
    if (n == 0) {
        t.a[0] = cdouble(1.0) + eia;
        return t;
    }
    if (color == SpiderColor::Z) {
        t.a[0] = 1.0;
        t.a[(std::size_t{1} << n) - 1] = eia;
    } else {
        const double norm = std::pow(2.0, -static_cast<double>(n) / 2.0);
        for (std::size_t idx = 0; idx < t.a.size(); ++idx) {
            const bool odd = __builtin_parityll(idx) != 0;
            t.a[idx] = norm * (cdouble(1.0) + (odd ? -eia : eia));
        }
    }
    return t;
}

}  // namespace

Matrix ZxDiagram::to_matrix() const {
    validate();
    const std::size_t n_in = inputs().size();
    const std::size_t n_out = outputs().size();
    if (n_in + n_out > 12)
        throw ResourceError("to_matrix: more than 12 boundary ports");

    // One factor per edge (identity or Hadamard) over its two end labels
    // 2e and 2e+1, plus one factor per spider over its end labels. A
    // boundary port contributes no factor; its end label stays open.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<LegTensor> factors;
    for (const int e : edge_ids()) {
        LegTensor t;
        t.legs = {2 * e, 2 * e + 1};
        if (edge(e).hadamard)
            t.a = {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        else
            t.a = {1.0, 0.0, 0.0, 1.0};
        factors.push_back(std::move(t));
    }
    std::map<int, int> open_leg;  // boundary node -> its open leg label
    for (const auto id : spider_ids()) {
        std::vector<int> legs;
        for (const int e : incident_edges(id))
            legs.push_back(2 * e + (edge(e).a == id ? 0 : 1));
        factors.push_back(spider_tensor(color(id), phase(id), std::move(legs)));
    }
    auto note_boundary = [&](int b) {
        const std::vector<int> inc = incident_edges(b);
        // validate() guarantees degree exactly 1
        const int e = inc.front();
        open_leg[b] = 2 * e + (edge(e).a == b ? 0 : 1);
    };
    for (const int b : inputs()) note_boundary(b);
    for (const int b : outputs()) note_boundary(b);

    // Greedy pairwise contraction: maximize shared legs, break ties by
    // smallest result rank, then by lowest pair indices.
    while (factors.size() > 1) {
        std::size_t best_i = 0, best_j = 1;
        int best_shared = -1;
        std::size_t best_rank = SIZE_MAX;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                int shared = 0;
                for (const int l : factors[i].legs)
                    if (std::find(factors[j].legs.begin(), factors[j].legs.end(), l) !=
                        factors[j].legs.end())
                        ++shared;
                const std::size_t rank =
                    factors[i].legs.size() + factors[j].legs.size() - 2 * shared;
                if (shared > best_shared ||
                    (shared == best_shared && rank < best_rank)) {
                    best_shared = shared;
                    best_rank = rank;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        LegTensor merged = contract_pair(factors[best_i], factors[best_j]);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(best_j));
        factors[best_i] = std::move(merged);
    }

    LegTensor final_t;
    if (factors.empty()) {
        final_t.a = {cdouble(1.0)};
    } else {
        final_t = std::move(factors.front());
    }
    if (final_t.legs.size() != n_in + n_out)
        throw InternalError("to_matrix: dangling internal legs after contraction");

    // Repack into a matrix: first output port is the most significant row
    // bit, first input port the most significant column bit.
    std::vector<int> out_pos(n_out), in_pos(n_in);
    auto leg_pos = [&](int label) {
        const auto it = std::find(final_t.legs.begin(), final_t.legs.end(), label);
        if (it == final_t.legs.end())
            throw InternalError("to_matrix: boundary leg was contracted away");
        return static_cast<int>(it - final_t.legs.begin());
    };
    for (std::size_t k = 0; k < n_out; ++k) out_pos[k] = leg_pos(open_leg.at(outputs()[k]));
    for (std::size_t k = 0; k < n_in; ++k) in_pos[k] = leg_pos(open_leg.at(inputs()[k]));

    Matrix m(std::size_t{1} << n_out, std::size_t{1} << n_in);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            std::size_t idx = 0;
            for (std::size_t k = 0; k < n_out; ++k)
                idx |= ((r >> (n_out - 1 - k)) & 1ULL) << out_pos[k];
            for (std::size_t k = 0; k < n_in; ++k)
                idx |= ((c >> (n_in - 1 - k)) & 1ULL) << in_pos[k];
            m.at(r, c) = scalar() * final_t.a[idx];
        }
    }
    return m;
}

}  // namespace qloom
