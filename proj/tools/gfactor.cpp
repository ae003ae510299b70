/*
 * gfactor: exact solver and verification harness for degree-constrained
 * subgraph problems.  Subcommands: solve | oracle | verify | gen | bench.
 *
 * All output is buffered and flushed only on success, so error paths never
 * leave partial reports behind.  Structured reports (--out) are JSON with a
 * fixed field order; every number in them is an exact integer.
 */
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfactor/bruteforce.hpp"
#include "gfactor/generate.hpp"
#include "gfactor/graphfactor.hpp"
#include "gfactor/instance.hpp"
#include "gfactor/lemmalab.hpp"
#include "gfactor/rng.hpp"
#include "json.hpp"

using namespace gfactor;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct CommonFlags {
    u64 seed = 1;
    i64 trials = -1;  // -1 = suite defaults
    bool brute = false;
    u64 budget = u64(1) << 24;
    std::string initial_path;
    std::string objective;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags* f) {
    cmd->add_option("--seed", f->seed, "master random seed");
    cmd->add_option("--trials", f->trials, "trial count override (0 = vacuous)");
    cmd->add_flag("--brute", f->brute, "use the exhaustive reference implementation");
    cmd->add_option("--budget", f->budget, "enumeration budget (subset / point cap)");
    cmd->add_option("--initial", f->initial_path, "file with initial factor edge ids");
    cmd->add_option("--objective", f->objective, "objective mode")
        ->check(CLI::IsMember({"cardinality", "weighted"}));
    cmd->add_option("--out", f->out_path, "write a JSON report to this path");
}

/* Flushes the buffered human-readable text, then the report file, if any. */
void finish(const std::ostringstream& text, const std::string& out_path, const ordered_json& report) {
    std::cout << text.str() << std::flush;
    if (out_path.empty()) return;
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open report file " + out_path);
    os << report.dump(2) << "\n";
}

Objective resolve_objective(const Instance& inst, const std::string& flag) {
    if (flag == "cardinality") return Objective::cardinality;
    if (flag == "weighted") return Objective::weighted;
    return inst.objective.value_or(Objective::weighted);
}

const char* objective_name(Objective mode) {
    return mode == Objective::cardinality ? "cardinality" : "weighted";
}

/* Initial factor from a side file: whitespace-separated edge ids. */
Factor load_factor_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open initial factor file " + path);
    Factor f;
    int id = 0;
    while (is >> id) f.push_back(id);
    if (!is.eof()) throw std::runtime_error("bad token in initial factor file " + path);
    return f;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

/* "lo:hi,lo:hi,..." with one interval per vertex. */
ParityProduct parse_product(const std::string& spec, int vertices) {
    ParityProduct box;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("bad interval '" + part + "', expected lo:hi");
        box.push_back(ParityInterval{std::stoll(part.substr(0, colon)),
                                     std::stoll(part.substr(colon + 1))});
    }
    if (int(box.size()) != vertices)
        throw std::runtime_error("product has " + std::to_string(box.size()) +
                                 " intervals for " + std::to_string(vertices) + " vertices");
    return box;
}

int cmd_solve(const std::string& path, const CommonFlags& flags) {
    Instance inst = load_instance(path);
    MultiGraph g = instance_graph(inst);
    Objective mode = resolve_objective(inst, flags.objective);

    std::optional<Factor> start = inst.initial;
    if (!flags.initial_path.empty()) start = load_factor_file(flags.initial_path);

    std::ostringstream text;
    ordered_json report;
    report["command"] = "solve";
    report["objective"] = objective_name(mode);
    text << "objective     " << objective_name(mode) << "\n";

    SolveResult res = solve_general_factor(g, inst.bsets, mode, start, flags.budget);
    if (!res.feasible) {
        text << "status        infeasible\n";
        report["status"] = "infeasible";
        finish(text, flags.out_path, report);
        return kExitInfeasible;
    }

    text << "status        optimal\n"
         << "value         " << res.value << "\n"
         << "witness       " << join(res.factor) << "\n"
         << "degrees       " << join(res.degrees) << "\n"
         << "iterations    " << res.trace.iterations << "\n"
         << "oracle calls  " << res.trace.oracle_calls << "\n";
    report["status"] = "optimal";
    report["value"] = res.value;
    report["witness"] = res.factor;
    report["degrees"] = res.degrees;
    report["iterations"] = res.trace.iterations;
    report["oracle_calls"] = res.trace.oracle_calls;

    if (flags.brute) {
        EnumerationBudget budget;
        budget.max_subsets = flags.budget;
        MultiGraph priced = mode == Objective::cardinality ? g.with_unit_weights() : g;
        BruteFactorResult ref = brute_optimal_factor(priced, inst.bsets, budget);
        bool agree = ref.feasible && ref.value == res.value;
        text << "brute value   " << ref.value << (agree ? "  (agrees)" : "  (MISMATCH)") << "\n";
        report["brute_value"] = ref.value;
        report["brute_agrees"] = agree;
        if (!agree) {
            std::cout << text.str();
            std::cerr << "error: solver disagrees with exhaustive reference\n";
            return kExitError;
        }
    }

    finish(text, flags.out_path, report);
    return kExitOk;
}

int cmd_oracle(const std::string& path, const std::string& product_spec, const CommonFlags& flags) {
    Instance inst = load_instance(path);
    MultiGraph g = instance_graph(inst);
    ParityProduct box = parse_product(product_spec, inst.vertices);

    OracleAnswer ans;
    if (flags.brute) {
        EnumerationBudget budget;
        budget.max_subsets = flags.budget;
        ans = brute_oracle(g, box, budget);
    } else {
        ans = oracle_parity_factor(g, box);
    }

    std::ostringstream text;
    ordered_json report;
    report["command"] = "oracle";
    report["engine"] = flags.brute ? "brute" : "matching";
    if (!ans.feasible) {
        text << "status  infeasible\n";
        report["status"] = "infeasible";
        finish(text, flags.out_path, report);
        return kExitInfeasible;
    }

    Factor witness = std::any_cast<Factor>(ans.witness);
    text << "status   feasible\n"
         << "value    " << ans.value << "\n"
         << "point    " << join(ans.point) << "\n"
         << "witness  " << join(witness) << "\n";
    report["status"] = "feasible";
    report["value"] = ans.value;
    report["point"] = ans.point;
    report["witness"] = witness;
    finish(text, flags.out_path, report);
    return kExitOk;
}

int cmd_verify(const CommonFlags& flags) {
    std::optional<i64> trials;
    if (flags.trials >= 0) trials = flags.trials;
    std::vector<SuiteReport> reports = run_verify_suites(flags.seed, trials);

    std::ostringstream text;
    ordered_json doc;
    doc["command"] = "verify";
    doc["seed"] = flags.seed;
    doc["suites"] = ordered_json::array();
    i64 total_failures = 0;
    for (const SuiteReport& r : reports) {
        bool pass = r.failures == 0;
        total_failures += r.failures;
        text << (pass ? "PASS" : "FAIL") << "  " << r.suite;
        for (size_t pad = r.suite.size(); pad < 20; ++pad) text << ' ';
        text << "trials " << r.trials;
        if (!pass) text << "  failures " << r.failures << "\n      first: " << r.first_failure;
        text << "\n";
        ordered_json jr;
        jr["suite"] = r.suite;
        jr["status"] = pass ? "pass" : "fail";
        jr["trials"] = r.trials;
        jr["failures"] = r.failures;
        if (!pass) jr["first_failure"] = r.first_failure;
        doc["suites"].push_back(jr);
    }
    doc["total_failures"] = total_failures;
    finish(text, flags.out_path, doc);
    return total_failures == 0 ? kExitOk : kExitError;
}

struct GenParams {
    int vertices = 4;
    int edges = 5;
    int bmax = 4;
    i64 wmin = -9;
    i64 whi = 9;
    bool loops = false;
};

int cmd_gen(const GenParams& p, const CommonFlags& flags) {
    if (p.vertices < 1) throw std::runtime_error("need at least one vertex");
    if (p.edges < 0 || p.bmax < 1 || p.wmin > p.whi) throw std::runtime_error("bad generator parameters");

    Rng rng(flags.seed);
    MultiGraph g = random_multigraph(rng, p.vertices, p.edges, p.wmin, p.whi, p.loops);
    BProfile b = random_degree_profile(rng, g, p.bmax);

    Instance inst;
    inst.vertices = p.vertices;
    inst.edges = g.edges();
    inst.bsets = b;
    std::string body = emit_instance(inst);

    if (flags.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream os(flags.out_path);
        if (!os) throw std::runtime_error("cannot open output file " + flags.out_path);
        os << body;
    }
    return kExitOk;
}

/* Wall-clock timings, reported as exact integer microseconds. */
int cmd_bench(const std::string& path, int repeat, const CommonFlags& flags) {
    Instance inst = load_instance(path);
    MultiGraph g = instance_graph(inst);
    Objective mode = resolve_objective(inst, flags.objective);

    std::ostringstream text;
    i64 total_us = 0;
    i64 value = 0;
    for (int run = 0; run < repeat; ++run) {
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = solve_general_factor(g, inst.bsets, mode, inst.initial, flags.budget);
        auto t1 = std::chrono::steady_clock::now();
        i64 us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
        total_us += us;
        value = res.feasible ? res.value : 0;
        text << "run " << run << "  " << us << " us"
             << (res.feasible ? "" : "  (infeasible)") << "\n";
    }
    text << "total " << total_us << " us over " << repeat << " runs, value " << value << "\n";
    std::cout << text.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree-constrained subgraph solver and verification harness"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string instance_path, product_spec;
    GenParams gen;
    int repeat = 5;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance to optimality");
    solve->add_option("instance", instance_path, "instance file")->required();
    add_common(solve, &flags);

    CLI::App* oracle = app.add_subcommand("oracle", "run the degree-range oracle once");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_option("--product", product_spec, "per-vertex ranges lo:hi,lo:hi,...")->required();
    add_common(oracle, &flags);

    CLI::App* verify = app.add_subcommand("verify", "run the randomized verification suites");
    add_common(verify, &flags);

    CLI::App* gencmd = app.add_subcommand("gen", "generate a random instance");
    gencmd->add_option("--vertices", gen.vertices, "vertex count");
    gencmd->add_option("--edges", gen.edges, "edge count");
    gencmd->add_option("--bmax", gen.bmax, "largest degree set size");
    gencmd->add_option("--wmin", gen.wmin, "smallest edge weight");
    gencmd->add_option("--wmax", gen.whi, "largest edge weight");
    gencmd->add_flag("--loops", gen.loops, "allow self-loops");
    add_common(gencmd, &flags);

    CLI::App* bench = app.add_subcommand("bench", "time repeated solves of one instance");
    bench->add_option("instance", instance_path, "instance file")->required();
    bench->add_option("--repeat", repeat, "number of solve runs");
    add_common(bench, &flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (solve->parsed()) return cmd_solve(instance_path, flags);
        if (oracle->parsed()) return cmd_oracle(instance_path, product_spec, flags);
        if (verify->parsed()) return cmd_verify(flags);
        if (gencmd->parsed()) return cmd_gen(gen, flags);
        if (bench->parsed()) return cmd_bench(instance_path, repeat, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
