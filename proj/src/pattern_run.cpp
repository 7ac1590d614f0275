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
#include <numbers>
#include <random>
#include <set>
#include <unordered_map>

#include "qloom/pattern_run.hpp"

namespace qloom {

namespace {

constexpr std::size_t kMaxEnumerationNodes = 22;
constexpr std::size_t kMaxWindowQubits = 22;
constexpr std::size_t kExactDeterminismMeasurements = 14;

/**
 * Lazy-window statevector over the pattern's live nodes. A node enters the
 * window (prepared |+>, or jointly for input nodes) no later than the
 * first measurement that touches it; each entangling edge is applied when
 * its first endpoint is measured; measuring a node projects it out of the
 * window. The amplitude vector stays unnormalized, so the squared norm is
 * the probability of the realized outcome prefix.
 */
class WindowSim {
  public:
    WindowSim(const MeasurementPattern& p, const InputState* input) : pat_(&p) {
        // Precompute adjacency and edge bookkeeping.
        for (std::size_t e = 0; e < p.entangle.size(); ++e) {
            adj_[p.entangle[e].first].push_back(e);
            adj_[p.entangle[e].second].push_back(e);
        }
        edge_applied_.assign(p.entangle.size(), false);
        amp_ = {cdouble(1.0)};
        if (!p.inputs.empty()) {
            if (input == nullptr)
                throw InputError("pattern run: pattern has inputs but no input "
                                 "state was provided");
            if (input->size() != (std::size_t{1} << p.inputs.size()))
                throw InputError("pattern run: input state dimension mismatch");
            // Splice the joint input state in directly: slot k = inputs[k].
            amp_ = *input;
            for (std::size_t k = 0; k < p.inputs.size(); ++k) {
                slot_of_[p.inputs[k]] = static_cast<int>(k);
                node_of_slot_.push_back(p.inputs[k]);
            }
        } else if (input != nullptr) {
            throw InputError("pattern run: input state given but pattern has "
                             "no input nodes");
        }
    }

    /** Brings a node into the window as |+> if not already present. */
    void activate(int node) {
        if (slot_of_.count(node)) return;
        const std::size_t k = node_of_slot_.size();
        if (k + 1 > kMaxWindowQubits)
            throw ResourceError("pattern run: window exceeds " +
                                std::to_string(kMaxWindowQubits) + " qubits");
        const double s = 1.0 / std::sqrt(2.0);
        std::vector<cdouble> next(amp_.size() * 2);
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            const cdouble v = s * amp_[i];
            next[i] = v;
            next[i | (std::size_t{1} << k)] = v;
        }
        amp_ = std::move(next);
        slot_of_[node] = static_cast<int>(k);
        node_of_slot_.push_back(node);
    }

    void apply_cz(int a, int b) {
        const std::size_t ma = std::size_t{1} << slot_of_.at(a);
        const std::size_t mb = std::size_t{1} << slot_of_.at(b);
        for (std::size_t i = 0; i < amp_.size(); ++i)
            if ((i & ma) && (i & mb)) amp_[i] = -amp_[i];
    }

    /** Activates `node` and its entangling partners; applies pending edges. */
    void prepare_for_measurement(int node) {
        activate(node);
        const auto it = adj_.find(node);
        if (it == adj_.end()) return;
        for (const std::size_t e : it->second) {
            if (edge_applied_[e]) continue;
            const auto& [a, b] = pat_->entangle[e];
            activate(a == node ? b : a);
            apply_cz(a, b);
            edge_applied_[e] = true;
        }
    }

    /** Applies edges never triggered by a measurement (output-output). */
    void apply_remaining_edges() {
        for (std::size_t e = 0; e < pat_->entangle.size(); ++e) {
            if (edge_applied_[e]) continue;
            const auto& [a, b] = pat_->entangle[e];
            activate(a);
            activate(b);
            apply_cz(a, b);
            edge_applied_[e] = true;
        }
        // Isolated outputs may never appear in any edge; bring them in.
        for (const int out : pat_->outputs) activate(out);
    }

    [[nodiscard]] double norm2() const {
        double s = 0.0;
        for (const cdouble& v : amp_) s += std::norm(v);
        return s;
    }

    /**
     * Projects `node` onto outcome m of the given plane/angle, removing it
     * from the window. Returns the conditional probability of m.
     */
    double project(int node, MeasPlane plane, double theta_eff, int m) {
        const int slot = slot_of_.at(node);
        cdouble e0, e1;  // effect row: amplitude of |0> and |1>
        if (plane == MeasPlane::XY) {
            const double s = 1.0 / std::sqrt(2.0);
            e0 = s;
            e1 = s * std::polar(1.0, -theta_eff) * (m ? -1.0 : 1.0);
        } else {
            // <m| e^{-i theta X / 2}: rows of the X-rotation matrix.
            const cdouble c = std::cos(theta_eff / 2.0);
            const cdouble is = cdouble(0.0, -1.0) * std::sin(theta_eff / 2.0);
            if (m == 0) {
                e0 = c;
                e1 = is;
            } else {
                e0 = is;
                e1 = c;
            }
        }
        const double before = norm2();
        const std::size_t bit = std::size_t{1} << slot;
        const std::size_t half = amp_.size() >> 1;
        std::vector<cdouble> next(half);
        const std::size_t low_mask = bit - 1;
        for (std::size_t s2 = 0; s2 < half; ++s2) {
            const std::size_t idx0 = (s2 & low_mask) | ((s2 & ~low_mask) << 1);
            next[s2] = e0 * amp_[idx0] + e1 * amp_[idx0 | bit];
        }
        amp_ = std::move(next);
        // Remove the slot: renumber everything above it down by one.
        node_of_slot_.erase(node_of_slot_.begin() + slot);
        slot_of_.erase(node);
        for (std::size_t k = static_cast<std::size_t>(slot); k < node_of_slot_.size(); ++k)
            slot_of_[node_of_slot_[k]] = static_cast<int>(k);
        const double after = norm2();
        return before > 0.0 ? after / before : 0.0;
    }

    void apply_pauli(int node, char pauli) {
        const int slot = slot_of_.at(node);
        const std::size_t bit = std::size_t{1} << slot;
        if (pauli == 'X') {
            for (std::size_t i = 0; i < amp_.size(); ++i)
                if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
        } else {
            for (std::size_t i = 0; i < amp_.size(); ++i)
                if (i & bit) amp_[i] = -amp_[i];
        }
    }

    /** Final state over the outputs, normalized; bit k = outputs[k]. */
    [[nodiscard]] std::vector<cdouble> output_state() const {
        if (node_of_slot_.size() != pat_->outputs.size())
            throw InternalError("pattern run: window does not match outputs at end");
        std::vector<int> slot_for_bit(pat_->outputs.size());
        for (std::size_t k = 0; k < pat_->outputs.size(); ++k)
            slot_for_bit[k] = slot_of_.at(pat_->outputs[k]);
        std::vector<cdouble> out(amp_.size());
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            std::size_t j = 0;
            for (std::size_t k = 0; k < slot_for_bit.size(); ++k)
                j |= ((i >> slot_for_bit[k]) & 1ULL) << k;
            out[j] = amp_[i];
        }
        double n2 = 0.0;
        for (const cdouble& v : out) n2 += std::norm(v);
        if (n2 > 0.0) {
            const double inv = 1.0 / std::sqrt(n2);
            for (cdouble& v : out) v *= inv;
        }
        return out;
    }

    WindowSim(const WindowSim&) = default;
    WindowSim& operator=(const WindowSim&) = default;

  private:
    const MeasurementPattern* pat_;
    std::unordered_map<int, std::vector<std::size_t>> adj_;
    std::vector<bool> edge_applied_;
    std::vector<cdouble> amp_;
    std::unordered_map<int, int> slot_of_;
    std::vector<int> node_of_slot_;
};

double effective_angle(const MeasureCmd& m,
                       const std::unordered_map<int, int>& outcome_of) {
    int sign_parity = 0, offset_parity = 0;
    for (const int d : m.sign_domain) sign_parity ^= outcome_of.at(d);
    for (const int d : m.offset_domain) offset_parity ^= outcome_of.at(d);
    double theta = sign_parity ? -m.angle : m.angle;
    if (offset_parity) theta += std::numbers::pi;
    return theta;
}

void require_valid(const MeasurementPattern& p) {
    const PatternDiagnostics d = validate_pattern(p);
    if (!d.ok)
        throw InputError("pattern run: invalid pattern: " + d.problems.front());
}

void apply_corrections(WindowSim& sim, const MeasurementPattern& p,
                       const std::unordered_map<int, int>& outcome_of) {
    for (const CorrectionCmd& c : p.corrections) {
        int parity = 0;
        for (const int d : c.domain) parity ^= outcome_of.at(d);
        if (parity) sim.apply_pauli(c.node, c.pauli);
    }
}

}  // namespace

std::vector<BranchResult> enumerate_branches(const MeasurementPattern& p,
                                             const InputState* input) {
    require_valid(p);
    if (p.nodes.size() > kMaxEnumerationNodes)
        throw ResourceError("enumerate_branches: more than " +
                            std::to_string(kMaxEnumerationNodes) + " nodes");
    std::vector<BranchResult> results;
    struct Frame {
        WindowSim sim;
        std::unordered_map<int, int> outcome_of;
        std::vector<std::uint8_t> outcomes;
        double probability;
    };
    // Depth-first over outcome prefixes; copies the window at each split.
    std::vector<Frame> stack;
    stack.push_back(Frame{WindowSim(p, input), {}, {}, 1.0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const std::size_t step = f.outcomes.size();
        if (step == p.measure.size()) {
            f.sim.apply_remaining_edges();
            apply_corrections(f.sim, p, f.outcome_of);
            BranchResult r;
            r.outcomes = std::move(f.outcomes);
            r.probability = f.probability;
            r.state = f.sim.output_state();
            results.push_back(std::move(r));
            continue;
        }
        const MeasureCmd& m = p.measure[step];
        const double theta = effective_angle(m, f.outcome_of);
        for (const int outcome : {1, 0}) {
            Frame g = f;  // copy; the m=0 branch is pushed last, popped first
            g.sim.prepare_for_measurement(m.node);
            const double cond = g.sim.project(m.node, m.plane, theta, outcome);
            g.probability *= cond;
            g.outcome_of[m.node] = outcome;
            g.outcomes.push_back(static_cast<std::uint8_t>(outcome));
            stack.push_back(std::move(g));
        }
    }
    return results;
}

BranchResult run_branch(const MeasurementPattern& p,
                        const std::vector<std::uint8_t>& outcomes,
                        const InputState* input) {
    require_valid(p);
    if (outcomes.size() != p.measure.size())
        throw InputError("run_branch: outcome count mismatch");
    WindowSim sim(p, input);
    std::unordered_map<int, int> outcome_of;
    double probability = 1.0;
    for (std::size_t i = 0; i < p.measure.size(); ++i) {
        const MeasureCmd& m = p.measure[i];
        const double theta = effective_angle(m, outcome_of);
        sim.prepare_for_measurement(m.node);
        probability *= sim.project(m.node, m.plane, theta, outcomes[i]);
        outcome_of[m.node] = outcomes[i];
    }
    sim.apply_remaining_edges();
    apply_corrections(sim, p, outcome_of);
    BranchResult r;
    r.outcomes = outcomes;
    r.probability = probability;
    r.state = sim.output_state();
    return r;
}

namespace {

struct PathCheck {
    BranchResult branch;
    bool probs_uniform = true;
    double worst_cond = 0.5;
};

/** Forced run that also verifies every conditional probability is 1/2. */
PathCheck run_checked(const MeasurementPattern& p,
                      const std::vector<std::uint8_t>& outcomes,
                      const InputState* input, double prob_tol) {
    PathCheck out;
    WindowSim sim(p, input);
    std::unordered_map<int, int> outcome_of;
    double probability = 1.0;
    for (std::size_t i = 0; i < p.measure.size(); ++i) {
        const MeasureCmd& m = p.measure[i];
        const double theta = effective_angle(m, outcome_of);
        sim.prepare_for_measurement(m.node);
        const double cond = sim.project(m.node, m.plane, theta, outcomes[i]);
        probability *= cond;
        if (std::abs(cond - 0.5) > prob_tol) {
            out.probs_uniform = false;
            if (std::abs(cond - 0.5) > std::abs(out.worst_cond - 0.5))
                out.worst_cond = cond;
        }
        outcome_of[m.node] = outcomes[i];
    }
    sim.apply_remaining_edges();
    apply_corrections(sim, p, outcome_of);
    out.branch.outcomes = outcomes;
    out.branch.probability = probability;
    out.branch.state = sim.output_state();
    return out;
}

}  // namespace

DeterminismReport check_determinism(const MeasurementPattern& p, double tol,
                                    const InputState* input, std::uint64_t seed,
                                    std::size_t random_paths) {
    require_valid(p);
    DeterminismReport rep;
    const std::size_t k = p.measure.size();

    if (k <= kExactDeterminismMeasurements &&
        p.nodes.size() <= kMaxEnumerationNodes) {
        const std::vector<BranchResult> branches = enumerate_branches(p, input);
        rep.exhaustive = true;
        rep.branches_checked = branches.size();
        const double expected = std::pow(0.5, static_cast<double>(k));
        for (const BranchResult& b : branches) {
            if (std::abs(b.probability - expected) > 1e-9 * std::max(1.0, expected * 2)) {
                // Deterministic patterns have exactly uniform branch weights.
                rep.deterministic = false;
                rep.detail = "branch probability " + std::to_string(b.probability) +
                             " deviates from uniform";
                return rep;
            }
            if (!equal_up_to_phase(b.state, branches.front().state, tol)) {
                rep.deterministic = false;
                rep.detail = "branch states differ beyond tolerance";
                return rep;
            }
        }
        rep.deterministic = true;
        return rep;
    }

    // Stress mode for large patterns: compare selected branches against the
    // all-zeros reference and require uniform conditional probabilities.
    const double prob_tol = 1e-7;
    const std::vector<std::uint8_t> zeros(k, 0);
    const PathCheck ref = run_checked(p, zeros, input, prob_tol);
    rep.branches_checked = 1;
    auto fail = [&](const std::string& why) {
        rep.deterministic = false;
        rep.detail = why;
        return rep;
    };
    if (!ref.probs_uniform)
        return fail("reference branch has a non-uniform conditional probability " +
                    std::to_string(ref.worst_cond));
    auto check_path = [&](const std::vector<std::uint8_t>& outcomes,
                          const std::string& label) -> bool {
        const PathCheck c = run_checked(p, outcomes, input, prob_tol);
        ++rep.branches_checked;
        if (!c.probs_uniform) {
            rep.detail = label + ": non-uniform conditional probability " +
                         std::to_string(c.worst_cond);
            return false;
        }
        if (!equal_up_to_phase(c.branch.state, ref.branch.state, tol)) {
            rep.detail = label + ": corrected state differs from reference";
            return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::uint8_t> flip = zeros;
        flip[i] = 1;
        if (!check_path(flip, "single flip at " + std::to_string(i)))
            return rep;
    }
    std::mt19937_64 rng(seed);
    const std::size_t pair_budget = std::min<std::size_t>(64, k * (k - 1) / 2);
    for (std::size_t t = 0; t < pair_budget; ++t) {
        std::vector<std::uint8_t> flip = zeros;
        const std::size_t i = rng() % k;
        std::size_t j = rng() % k;
        while (j == i) j = rng() % k;
        flip[i] = 1;
        flip[j] = 1;
        if (!check_path(flip, "double flip")) return rep;
    }
    for (std::size_t t = 0; t < random_paths; ++t) {
        std::vector<std::uint8_t> path(k);
        for (std::size_t i = 0; i < k; ++i)
            path[i] = static_cast<std::uint8_t>(rng() & 1ULL);
        if (!check_path(path, "random path")) return rep;
    }
    rep.deterministic = true;
    return rep;
}

std::vector<double> reference_output_distribution(const MeasurementPattern& p,
                                                  const InputState* input) {
    const std::vector<std::uint8_t> zeros(p.measure.size(), 0);
    const BranchResult ref = run_branch(p, zeros, input);
    std::vector<double> dist(ref.state.size());
    for (std::size_t i = 0; i < ref.state.size(); ++i)
        dist[i] = std::norm(ref.state[i]);
    return dist;
}

std::vector<double> mixture_output_distribution(const MeasurementPattern& p,
                                                const InputState* input) {
    const std::vector<BranchResult> branches = enumerate_branches(p, input);
    std::vector<double> dist(std::size_t{1} << p.outputs.size(), 0.0);
    for (const BranchResult& b : branches)
        for (std::size_t i = 0; i < b.state.size(); ++i)
            dist[i] += b.probability * std::norm(b.state[i]);
    return dist;
}

SampleResult sample_pattern(const MeasurementPattern& p, std::size_t shots,
                            std::uint64_t seed, const InputState* input) {
    require_valid(p);
    SampleResult res;
    res.shots.reserve(shots);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t s = 0; s < shots; ++s) {
        WindowSim sim(p, input);
        std::unordered_map<int, int> outcome_of;
        for (const MeasureCmd& m : p.measure) {
            const double theta = effective_angle(m, outcome_of);
            sim.prepare_for_measurement(m.node);
            // Peek the outcome-0 conditional probability via a trial copy.
            WindowSim trial = sim;
            const double p0 = trial.project(m.node, m.plane, theta, 0);
            const int outcome = unif(rng) < p0 ? 0 : 1;
            if (outcome == 0)
                sim = std::move(trial);
            else
                sim.project(m.node, m.plane, theta, 1);
            outcome_of[m.node] = outcome;
        }
        sim.apply_remaining_edges();
        apply_corrections(sim, p, outcome_of);
        const std::vector<cdouble> state = sim.output_state();
        // Collapse the outputs in the computational basis.
        double r = unif(rng);
        std::uint64_t picked = state.empty() ? 0 : state.size() - 1;
        for (std::size_t i = 0; i < state.size(); ++i) {
            const double w = std::norm(state[i]);
            if (r < w) {
                picked = i;
                break;
            }
            r -= w;
        }
        res.shots.push_back(picked);
        ++res.counts[picked];
    }
    return res;
}

double total_variation_distance(const std::vector<double>& p,
                                const std::vector<double>& q) {
    if (p.size() != q.size())
        throw InputError("total_variation_distance: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

}  // namespace qloom
