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

// Command-line front end. Subcommands: compile, verify, sample, resources,
// mis, sweep, export-graph. Machine-readable JSON goes to stdout (and to
// --out when given); human summaries go to stderr. Exit codes: 0 success,
// 1 verification failure, 2 input error, 3 resource guard, 4 internal bug.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qloom/compiler.hpp"
#include "qloom/error.hpp"
#include "qloom/gates.hpp"
#include "qloom/mis.hpp"
#include "qloom/pattern.hpp"
#include "qloom/pattern_run.hpp"
#include "qloom/qubo.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceGuard = 3;
constexpr int kExitInternal = 4;

constexpr double kPi = 3.14159265358979323846;

struct Options {
    std::string input;
    std::string out;
    std::string format = "json";
    std::vector<std::string> gammas;
    std::vector<std::string> betas;
    int depth = 0;  // 0 = not given
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    double tol = 1e-9;
};

[[nodiscard]] std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qloom::InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qloom::InputError("cannot open output file: " + path);
    out << text;
    if (!out) throw qloom::InputError("failed writing output file: " + path);
}

/** Prints to stdout and mirrors into --out when set. */
void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    if (!out_path.empty())
        write_file(out_path, text.back() == '\n' ? text : text + "\n");
}

/**
 * Parses one angle token: plain radians ("1.5708"), a multiple of pi
 * ("0.25pi", "-pi"), or a rational multiple of pi ("1/4pi", "-3/8pi").
 */
[[nodiscard]] double parse_angle(const std::string& token) {
    const auto fail = [&]() -> double {
        throw qloom::InputError("cannot parse angle '" + token +
                                "' (use radians, '0.25pi', or '1/4pi')");
    };
    std::string s = token;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) return fail();
    double mult = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        mult = kPi;
        s = s.substr(0, s.size() - 2);
        if (s.empty() || s == "+") s = "1";
        if (s == "-") s = "-1";
    }
    try {
        const auto slash = s.find('/');
        if (slash != std::string::npos) {
            std::size_t used = 0;
            const double num = std::stod(s.substr(0, slash), &used);
            if (used != slash) return fail();
            const std::string den_text = s.substr(slash + 1);
            const double den = std::stod(den_text, &used);
            if (used != den_text.size() || den == 0.0) return fail();
            return num / den * mult;
        }
        std::size_t used = 0;
        const double value = std::stod(s, &used);
        if (used != s.size()) return fail();
        return value * mult;
    } catch (const std::logic_error&) {
        return fail();
    }
}

[[nodiscard]] qloom::QaoaParams parse_params(const Options& o) {
    if (o.gammas.empty() || o.betas.empty())
        throw qloom::InputError(
            "this subcommand needs an angle schedule: --gammas and --betas");
    qloom::QaoaParams p;
    for (const std::string& t : o.gammas) p.gammas.push_back(parse_angle(t));
    for (const std::string& t : o.betas) p.betas.push_back(parse_angle(t));
    const int depth = p.depth();  // validates matching lengths
    if (o.depth != 0 && o.depth != depth)
        throw qloom::InputError("--depth disagrees with the angle list length");
    return p;
}

/** Bitstring with variable 0 as the leftmost character. */
[[nodiscard]] std::string bitstring(std::uint64_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int v = 0; v < n; ++v)
        if ((x >> v) & 1ULL) s[static_cast<std::size_t>(v)] = '1';
    return s;
}

[[nodiscard]] nlohmann::json distribution_json(const std::vector<double>& dist, int n) {
    nlohmann::json j = nlohmann::json::object();
    for (std::uint64_t x = 0; x < dist.size(); ++x)
        if (dist[x] > 1e-12) j[bitstring(x, n)] = dist[x];
    return j;
}

/** Max-norm distance after aligning the global phase on the largest entry. */
[[nodiscard]] double phase_aligned_distance(const std::vector<qloom::cdouble>& a,
                                            const std::vector<qloom::cdouble>& b) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i]) > std::abs(a[k])) k = i;
    qloom::cdouble phase{1.0, 0.0};
    if (std::abs(a[k]) > 1e-14 && std::abs(b[k]) > 1e-14)
        phase = (b[k] / std::abs(b[k])) / (a[k] / std::abs(a[k]));
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] * phase - b[i]));
    return d;
}

[[nodiscard]] qloom::ProblemInput load_problem(const std::string& path) {
    return qloom::problem_from_json(slurp(path));
}

void require_pattern_kind(const qloom::ProblemInput& p) {
    if (p.kind == qloom::ProblemKind::Mis)
        throw qloom::InputError(
            "MIS instances use the constraint-preserving gate ansatz and are "
            "not compiled to measurement patterns; run the 'mis' subcommand");
}

/** A compiled pattern together with its provenance for reporting. */
struct LoadedPattern {
    qloom::MeasurementPattern pattern;
    qloom::QuboProblem qubo;
    qloom::QaoaParams params;
    std::string problem_json;   // canonical problem document
};

/**
 * Loads either a problem document (then compiles with the angle flags) or
 * a pattern document with an embedded problem, sniffed by its keys. Also
 * accepts the combined report emitted by `compile` (its "pattern" member).
 */
[[nodiscard]] LoadedPattern load_pattern_input(const Options& o) {
    std::string text = slurp(o.input);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw qloom::InputError(std::string("input JSON: parse error: ") + e.what());
    }
    if (doc.is_object() && doc.contains("pattern") && doc["pattern"].is_object())
        doc = doc["pattern"];

    LoadedPattern lp;
    if (doc.is_object() && doc.contains("type")) {
        const qloom::ProblemInput prob = qloom::problem_from_json(text);
        require_pattern_kind(prob);
        lp.params = parse_params(o);
        lp.qubo = prob.qubo;
        lp.pattern = qloom::compile_qaoa(prob.qubo, lp.params);
        lp.problem_json = qloom::problem_to_json(prob);
        return lp;
    }
    if (!o.gammas.empty() || !o.betas.empty())
        throw qloom::InputError(
            "the angle schedule is embedded in the pattern file; "
            "drop --gammas/--betas");
    qloom::ParsedPattern parsed = qloom::pattern_from_json(doc.dump());
    if (parsed.problem_json.empty())
        throw qloom::InputError(
            "pattern file has no embedded problem; re-emit it with 'compile'");
    const qloom::ProblemInput prob = qloom::problem_from_json(parsed.problem_json);
    require_pattern_kind(prob);
    lp.pattern = std::move(parsed.pattern);
    lp.qubo = prob.qubo;
    lp.params.gammas = std::move(parsed.gammas);
    lp.params.betas = std::move(parsed.betas);
    lp.problem_json = parsed.problem_json;
    return lp;
}

[[nodiscard]] nlohmann::json estimate_json(const qloom::QuboProblem& q, int depth) {
    return nlohmann::json::parse(
        qloom::resource_estimate_to_json(qloom::resource_estimate(q, depth)));
}

int cmd_compile(const Options& o) {
    const qloom::ProblemInput prob = load_problem(o.input);
    require_pattern_kind(prob);
    const qloom::QaoaParams params = parse_params(o);
    const qloom::MeasurementPattern pat = qloom::compile_qaoa(prob.qubo, params);

    const std::string pattern_doc = qloom::pattern_to_json(
        pat, qloom::problem_to_json(prob), params.gammas, params.betas);

    nlohmann::json report;
    report["pattern"] = nlohmann::json::parse(pattern_doc);
    report["resources"] = estimate_json(prob.qubo, params.depth());
    report["resources"]["actual"] = {
        {"nodes", pat.nodes.size()},
        {"cz_edges", pat.entangle.size()},
        {"measurements", pat.measure.size()},
    };
    std::cout << report.dump(2) << '\n';
    if (!o.out.empty()) write_file(o.out, pattern_doc + "\n");

    const auto& r = report["resources"];
    std::cerr << "compiled " << prob.qubo.num_vars << " variables at depth "
              << params.depth() << ": " << pat.nodes.size() << " nodes, "
              << pat.entangle.size() << " cz edges, " << pat.measure.size()
              << " measurements\n"
              << "core bound (edge + mixer gadgets): ancillas "
              << r["pattern"]["bound_ancillas"] << ", cz "
              << r["pattern"]["bound_cz"] << "; with linear gadgets: ancillas "
              << r["pattern"]["ancillas"] << ", cz " << r["pattern"]["cz_count"]
              << "; actual cz " << pat.entangle.size() << "\n";
    return kExitPass;
}

int cmd_resources(const Options& o) {
    const qloom::ProblemInput prob = load_problem(o.input);
    require_pattern_kind(prob);
    const int depth = o.depth == 0 ? 1 : o.depth;
    const nlohmann::json j = estimate_json(prob.qubo, depth);
    emit(j.dump(2), o.out);
    std::cerr << "depth " << depth << " on " << prob.qubo.num_vars
              << " variables: " << j["pattern"]["nodes"] << " pattern nodes, "
              << j["pattern"]["cz_count"] << " cz edges ("
              << j["gate_model"]["zz_rotations"] << " gate-model zz rotations)\n";
    return kExitPass;
}

int cmd_verify(const Options& o) {
    LoadedPattern lp;
    nlohmann::json report;
    try {
        lp = load_pattern_input(o);
        const qloom::MeasurementPattern& pat = lp.pattern;

        const qloom::PatternDiagnostics diag = qloom::validate_pattern(pat);
        if (!diag.ok) {
            report["verdict"] = "FAIL";
            report["structural_problems"] = diag.problems;
            emit(report.dump(2), o.out);
            std::cerr << "FAIL: pattern structure is invalid\n";
            return kExitVerifyFail;
        }

        // Gate oracle first: its size guard is the cheapest way to learn
        // the instance is beyond exact verification.
        const auto gate = qloom::qaoa_distribution(lp.qubo, lp.params);
        const auto det = qloom::check_determinism(pat, o.tol);
        const auto dist = qloom::reference_output_distribution(pat);
        const double tvd = qloom::total_variation_distance(dist, gate);

        double pattern_energy = 0.0;
        double gate_energy = 0.0;
        for (std::uint64_t x = 0; x < dist.size(); ++x) {
            pattern_energy += dist[x] * qloom::qubo_cost(lp.qubo, x);
            gate_energy += gate[x] * qloom::qubo_cost(lp.qubo, x);
        }

        bool pass = det.deterministic && tvd < o.tol;
        report["determinism"] = {
            {"deterministic", det.deterministic},
            {"exhaustive", det.exhaustive},
            {"branches_checked", det.branches_checked},
            {"detail", det.detail},
        };
        report["tvd"] = tvd;
        report["tolerance"] = o.tol;
        report["expectation"] = {{"pattern", pattern_energy}, {"gate", gate_energy}};
        report["distribution"] = distribution_json(dist, lp.qubo.num_vars);

        // Small patterns also get the exact per-branch deviation, maximized
        // over every measurement outcome record.
        if (pat.measure.size() <= 14) {
            const auto reference = qloom::run_branch(
                pat, std::vector<std::uint8_t>(pat.measure.size(), 0));
            double dev = 0.0;
            for (const auto& b : qloom::enumerate_branches(pat))
                dev = std::max(dev, phase_aligned_distance(b.state, reference.state));
            report["max_branch_deviation"] = dev;
            const auto mix = qloom::mixture_output_distribution(pat);
            const double mix_tvd = qloom::total_variation_distance(mix, gate);
            report["mixture_tvd"] = mix_tvd;
            pass = pass && dev < o.tol && mix_tvd < o.tol;
        }

        report["verdict"] = pass ? "PASS" : "FAIL";
        emit(report.dump(2), o.out);
        std::cerr << (pass ? "PASS" : "FAIL") << ": tvd " << tvd
                  << ", deterministic " << (det.deterministic ? "yes" : "no")
                  << " (" << det.branches_checked << " branches"
                  << (det.exhaustive ? ", exhaustive" : "") << ")\n";
        return pass ? kExitPass : kExitVerifyFail;
    } catch (const qloom::ResourceError& e) {
        throw qloom::ResourceError(std::string(e.what()) +
                                   "; for instances beyond exact verification, "
                                   "use the sample subcommand");
    }
}

int cmd_sample(const Options& o) {
    if (o.shots == 0) throw qloom::InputError("--shots must be at least 1");
    const LoadedPattern lp = load_pattern_input(o);
    const auto result = qloom::sample_pattern(lp.pattern, o.shots, o.seed);

    const int n = lp.qubo.num_vars;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [x, c] : result.counts) counts[bitstring(x, n)] = c;
    nlohmann::json j;
    j["num_vars"] = n;
    j["shots"] = o.shots;
    j["seed"] = o.seed;
    j["counts"] = counts;
    emit(j.dump(2), o.out);
    std::cerr << "sampled " << o.shots << " shots (seed " << o.seed << ") over "
              << result.counts.size() << " distinct outcomes\n";
    return kExitPass;
}

int cmd_mis(const Options& o) {
    const qloom::ProblemInput prob = load_problem(o.input);
    if (prob.kind != qloom::ProblemKind::Mis)
        throw qloom::InputError(
            "the mis subcommand needs a problem file with type \"mis\"");
    const qloom::QaoaParams params = parse_params(o);
    const qloom::MisRunResult r =
        qloom::run_mis_qaoa(qloom::MisInstance{prob.graph}, params);

    nlohmann::json j;
    j["num_vertices"] = r.num_vertices;
    j["depth"] = params.depth();
    j["optimum"] = r.optimum;
    j["best_feasible"] = r.best_feasible;
    j["expectation"] = r.expectation;
    j["leakage"] = r.leakage;
    j["distribution"] = distribution_json(r.distribution, r.num_vertices);
    emit(j.dump(2), o.out);
    std::cerr << "independent-set ansatz on " << r.num_vertices
              << " vertices: E[set size] " << r.expectation << ", leakage "
              << r.leakage << ", best feasible " << r.best_feasible << " (optimum "
              << r.optimum << ")\n";
    return kExitPass;
}

int cmd_sweep(const Options& o) {
    const qloom::ProblemInput prob = load_problem(o.input);
    require_pattern_kind(prob);
    constexpr int kGrid = 16;

    nlohmann::json grid = nlohmann::json::array();
    double best = -std::numeric_limits<double>::infinity();
    int best_j = 0;
    int best_k = 0;
    for (int j = 0; j < kGrid; ++j) {
        nlohmann::json row = nlohmann::json::array();
        const double gamma = static_cast<double>(j) * kPi / kGrid;
        for (int k = 0; k < kGrid; ++k) {
            const double beta = static_cast<double>(k) * kPi / kGrid;
            const double e = qloom::qaoa_expectation(
                prob.qubo, qloom::QaoaParams{{gamma}, {beta}});
            row.push_back(e);
            if (e > best) {
                best = e;
                best_j = j;
                best_k = k;
            }
        }
        grid.push_back(std::move(row));
    }

    nlohmann::json j;
    j["depth"] = 1;
    j["grid"] = {
        {"points_per_axis", kGrid},
        {"step", "pi/16"},
        {"gamma_range", "[0, pi)"},
        {"beta_range", "[0, pi)"},
    };
    j["best"] = {
        {"gamma_index", best_j},
        {"beta_index", best_k},
        {"gamma", static_cast<double>(best_j) * kPi / kGrid},
        {"beta", static_cast<double>(best_k) * kPi / kGrid},
        {"expectation", best},
    };
    j["expectations"] = std::move(grid);
    emit(j.dump(2), o.out);
    std::cerr << "best expectation " << best << " at gamma " << best_j
              << "pi/16, beta " << best_k << "pi/16\n";
    return kExitPass;
}

int cmd_export_graph(const Options& o) {
    const LoadedPattern lp = load_pattern_input(o);
    if (o.format == "dot") {
        emit(qloom::export_resource_graph_dot(lp.pattern), o.out);
    } else {
        emit(qloom::export_resource_graph_json(lp.pattern), o.out);
    }
    std::cerr << "resource graph: " << lp.pattern.nodes.size() << " nodes, "
              << lp.pattern.entangle.size() << " edges\n";
    return kExitPass;
}

void add_angle_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--gammas", o.gammas,
                    "phase-layer angles, comma separated (radians, '0.25pi', '1/4pi')")
        ->delimiter(',');
    cmd->add_option("--betas", o.betas, "mixer angles, same syntax as --gammas")
        ->delimiter(',');
    cmd->add_option("--depth", o.depth, "cross-check: layer count")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qloom: compiles QAOA circuits for QUBO problems into "
        "measurement-based patterns and verifies them against a gate-model "
        "simulator"};
    app.require_subcommand(1);

    Options o;

    CLI::App* compile = app.add_subcommand(
        "compile", "compile a problem into a measurement pattern");
    compile->add_option("--input", o.input, "problem JSON file")->required();
    add_angle_flags(compile, o);
    compile->add_option("--out", o.out, "write the pattern document here");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a pattern (or problem + angles) against the gate simulator");
    verify->add_option("--input", o.input, "pattern or problem JSON file")->required();
    add_angle_flags(verify, o);
    verify->add_option("--tol", o.tol, "tolerance for TVD and state deviation")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", o.out, "mirror the verdict JSON here");

    CLI::App* sample = app.add_subcommand(
        "sample", "sample measurement outcomes from the pattern runtime");
    sample->add_option("--input", o.input, "pattern or problem JSON file")->required();
    add_angle_flags(sample, o);
    sample->add_option("--shots", o.shots, "number of shots")->required();
    sample->add_option("--seed", o.seed, "PRNG seed")->required();
    sample->add_option("--out", o.out, "mirror the counts JSON here");

    CLI::App* resources = app.add_subcommand(
        "resources", "closed-form resource estimate for a problem");
    resources->add_option("--input", o.input, "problem JSON file")->required();
    resources->add_option("--depth", o.depth, "layer count (default 1)")
        ->check(CLI::PositiveNumber);
    resources->add_option("--out", o.out, "mirror the estimate JSON here");

    CLI::App* mis = app.add_subcommand(
        "mis", "run the constraint-preserving independent-set ansatz (gate model)");
    mis->add_option("--input", o.input, "problem JSON file with type \"mis\"")
        ->required();
    add_angle_flags(mis, o);
    mis->add_option("--out", o.out, "mirror the report JSON here");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "depth-1 grid sweep (16x16 over [0,pi)^2) of the expectation");
    sweep->add_option("--input", o.input, "problem JSON file")->required();
    sweep->add_option("--out", o.out, "mirror the sweep JSON here");

    CLI::App* export_graph = app.add_subcommand(
        "export-graph", "emit the entanglement resource graph");
    export_graph->add_option("--input", o.input, "pattern or problem JSON file")
        ->required();
    add_angle_flags(export_graph, o);
    export_graph->add_option("--format", o.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    export_graph->add_option("--out", o.out, "mirror the export here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (app.got_subcommand(compile)) return cmd_compile(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(sample)) return cmd_sample(o);
        if (app.got_subcommand(resources)) return cmd_resources(o);
        if (app.got_subcommand(mis)) return cmd_mis(o);
        if (app.got_subcommand(sweep)) return cmd_sweep(o);
        if (app.got_subcommand(export_graph)) return cmd_export_graph(o);
        std::cerr << "error: no subcommand\n";
        return kExitInputError;
    } catch (const qloom::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const qloom::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kExitResourceGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
