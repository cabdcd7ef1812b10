#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tempres/dispatch.hpp"
#include "tempres/errors.hpp"
#include "tempres/generators.hpp"
#include "tempres/io.hpp"
#include "tempres/reductions.hpp"
#include "tempres/verifier.hpp"

namespace {

using nlohmann::json;
using namespace tempres;

constexpr int kExitOk = 0;
constexpr int kExitNotResolving = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

TemporalGraph load_graph(const std::string& path) {
    auto instance = load_instance_file(path);
    if (auto* g = std::get_if<TemporalGraph>(&instance))
        return std::move(*g);
    throw std::invalid_argument(path + ": expected a temporal-graph instance");
}

ThreeDMInstance load_3dm(const std::string& path) {
    auto instance = load_instance_file(path);
    if (auto* inst = std::get_if<ThreeDMInstance>(&instance))
        return std::move(*inst);
    throw std::invalid_argument(path + ": expected a 3dm instance");
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string token;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!token.empty()) {
                out.push_back(std::stoi(token));
                token.clear();
            }
        } else {
            token += c;
        }
    }
    return out;
}

std::string time_to_text(TimeStep t) { return t == kInfinity ? "inf" : std::to_string(t); }

json vectors_to_json(const std::vector<TemporalDistanceVector>& vectors) {
    json rows = json::array();
    for (const auto& row : vectors) {
        json entry = json::array();
        for (TimeStep t : row)
            entry.push_back(t == kInfinity ? json() : json(t));
        rows.push_back(std::move(entry));
    }
    return rows;
}

void print_vectors(std::ostream& out, const std::vector<TemporalDistanceVector>& vectors) {
    for (std::size_t v = 0; v < vectors.size(); ++v) {
        out << "vertex " << v << ": [";
        for (std::size_t i = 0; i < vectors[v].size(); ++i)
            out << (i ? ", " : "") << time_to_text(vectors[v][i]);
        out << "]\n";
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

struct SolveArgs {
    std::string input;
    std::string algorithm = "auto";
    std::string pool = "all";
    bool reverse_path = false;
    bool no_guard = false;
    int jobs = 1;
    bool as_json = false;
};

int cmd_solve(const SolveArgs& args) {
    auto g = load_graph(args.input);
    SolveOptions options;
    if (args.algorithm != "auto") {
        auto algorithm = algorithm_from_name(args.algorithm);
        if (!algorithm)
            throw std::invalid_argument("unknown algorithm: " + args.algorithm);
        options.algorithm = algorithm;
    }
    if (args.pool == "leaves")
        options.pool_leaves = true;
    else if (args.pool != "all")
        throw std::invalid_argument("unknown pool: " + args.pool);
    options.reverse_path = args.reverse_path;
    options.skip_guard = args.no_guard;
    options.jobs = args.jobs;

    auto report = run_solver(g, options);
    if (report.pool_exhausted) {
        if (args.as_json)
            std::cout << json{{"algorithm", to_string(report.used)},
                              {"pool_exhausted", true}}
                             .dump()
                      << "\n";
        else
            std::cout << "pool exhausted: no resolving set within the restricted pool\n";
        return kExitNotResolving;
    }
    auto vectors = distance_vectors(g, report.witness);
    if (args.as_json) {
        std::cout << json{{"algorithm", to_string(report.used)},
                          {"size", report.witness.size()},
                          {"witness", report.witness},
                          {"vectors", vectors_to_json(vectors)}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "algorithm: " << to_string(report.used) << "\n";
    std::cout << "size: " << report.witness.size() << "\n";
    std::cout << "witness:";
    for (Vertex v : report.witness)
        std::cout << " " << v;
    std::cout << "\n";
    print_vectors(std::cout, vectors);
    return kExitOk;
}

struct VerifyArgs {
    std::string input;
    std::string set;
    bool as_json = false;
};

int cmd_verify(const VerifyArgs& args) {
    auto g = load_graph(args.input);
    auto landmarks = parse_vertex_list(args.set);
    if (landmarks.empty())
        throw std::invalid_argument("--set must name at least one vertex");
    auto cert = check_resolving(g, landmarks);

    std::string verdict = cert.resolving() ? "resolving"
                          : cert.verdict == ResolutionCertificate::Verdict::NotReaching
                              ? "not-reaching"
                              : "not-separating";
    if (args.as_json) {
        json out{{"verdict", verdict}, {"landmarks", cert.landmarks},
                 {"vectors", vectors_to_json(cert.vectors)}};
        if (cert.verdict == ResolutionCertificate::Verdict::NotReaching)
            out["unreached"] = cert.unreached;
        if (cert.verdict == ResolutionCertificate::Verdict::NotSeparating)
            out["collision"] = {cert.collision.first, cert.collision.second};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "verdict: " << verdict << "\n";
        if (cert.verdict == ResolutionCertificate::Verdict::NotReaching)
            std::cout << "unreached vertex: " << cert.unreached << "\n";
        if (cert.verdict == ResolutionCertificate::Verdict::NotSeparating)
            std::cout << "identical vectors: " << cert.collision.first << " "
                      << cert.collision.second << "\n";
        print_vectors(std::cout, cert.vectors);
    }
    return cert.resolving() ? kExitOk : kExitNotResolving;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal resolving set toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute a minimum temporal resolving set");
    solve->add_option("--input", solve_args.input, "instance file")->required();
    solve->add_option("--algorithm", solve_args.algorithm,
                      "auto|bruteforce|path|star|substar12|substar-periodic|"
                      "cycle-periodic|periodic-tree");
    solve->add_option("--pool", solve_args.pool, "bruteforce pool: all|leaves");
    solve->add_flag("--reverse-path", solve_args.reverse_path,
                    "run the path algorithm right-to-left");
    solve->add_flag("--unsafe-no-guard", solve_args.no_guard, "disable the bruteforce guard");
    solve->add_option("--jobs", solve_args.jobs, "parallel bruteforce enumeration")
        ->check(CLI::Range(1, 256));
    solve->add_flag("--json", solve_args.as_json, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check whether a set resolves the instance");
    verify->add_option("--input", verify_args.input, "instance file")->required();
    verify->add_option("--set", verify_args.set, "comma-separated vertex ids")->required();
    verify->add_flag("--json", verify_args.as_json, "machine-readable output");

    auto* generate = app.add_subcommand("generate", "emit a random instance");
    generate->require_subcommand(1);
    std::string out_path;
    std::uint64_t seed = 0;
    int gen_n = 8, gen_label_max = 4, gen_delta = 3, gen_branch = 3, gen_period = 2;
    int gen_psize = 2, gen_triples = 3;
    bool gen_periodic_labels = false;

    auto* gen_path = generate->add_subcommand("path", "random temporal path");
    gen_path->add_option("--n", gen_n, "vertex count");
    gen_path->add_option("--label-max", gen_label_max, "labels drawn from [1, label-max]");
    gen_path->add_option("--seed", seed, "PRNG seed")->required();
    gen_path->add_option("--output", out_path, "write to file instead of stdout");

    auto* gen_star = generate->add_subcommand("substar", "random subdivided star");
    gen_star->add_option("--delta", gen_delta, "branch count (>= 3)");
    gen_star->add_option("--max-branch-len", gen_branch, "branch length bound");
    gen_star->add_option("--label-max", gen_label_max, "finite labels from [1, label-max]");
    gen_star->add_flag("--periodic", gen_periodic_labels, "periodic residues instead");
    gen_star->add_option("--period", gen_period, "period for --periodic");
    gen_star->add_option("--seed", seed, "PRNG seed")->required();
    gen_star->add_option("--output", out_path, "write to file instead of stdout");

    auto* gen_tree = generate->add_subcommand("periodic-tree", "random periodic tree");
    gen_tree->add_option("--n", gen_n, "vertex count");
    gen_tree->add_option("--period", gen_period, "period");
    gen_tree->add_option("--seed", seed, "PRNG seed")->required();
    gen_tree->add_option("--output", out_path, "write to file instead of stdout");

    auto* gen_3dm = generate->add_subcommand("3dm", "random 3-dimensional matching instance");
    gen_3dm->add_option("--p-size", gen_psize, "ground set size");
    gen_3dm->add_option("--triples", gen_triples, "number of triples");
    gen_3dm->add_option("--n", gen_n, "ground value bound");
    gen_3dm->add_option("--seed", seed, "PRNG seed")->required();
    gen_3dm->add_option("--output", out_path, "write to file instead of stdout");

    auto* reduce = app.add_subcommand("reduce", "build a hardness gadget from an instance");
    reduce->require_subcommand(1);
    std::string reduce_input;
    std::string budget_rule = "proof";
    bool reduce_normalize = false;
    bool reduce_json = false;
    auto* red_substar = reduce->add_subcommand("3dm-substar", "twice-subdivided star gadget");
    red_substar->add_option("--input", reduce_input, "3dm instance file")->required();
    red_substar->add_option("--budget", budget_rule, "proof|statement");
    red_substar->add_flag("--json", reduce_json, "machine-readable output");
    red_substar->add_option("--output", out_path, "write instance text to file");
    auto* red_tree = reduce->add_subcommand("3dm-tree", "temporal tree gadget");
    red_tree->add_option("--input", reduce_input, "3dm instance file")->required();
    red_tree->add_flag("--normalize", reduce_normalize, "shift labels down to start at 1");
    red_tree->add_flag("--json", reduce_json, "machine-readable output");
    red_tree->add_option("--output", out_path, "write instance text to file");
    auto* red_tree_iv =
        reduce->add_subcommand("3dm-tree-intervals", "tree gadget, two consecutive labels");
    red_tree_iv->add_option("--input", reduce_input, "3dm instance file")->required();
    red_tree_iv->add_flag("--normalize", reduce_normalize, "shift labels down to start at 1");
    red_tree_iv->add_flag("--json", reduce_json, "machine-readable output");
    red_tree_iv->add_option("--output", out_path, "write instance text to file");
    auto* red_adj =
        reduce->add_subcommand("adjacency-complete", "complete graph from the underlying graph");
    red_adj->add_option("--input", reduce_input, "temporal-graph file (labels ignored)")
        ->required();
    red_adj->add_flag("--json", reduce_json, "machine-readable output");
    red_adj->add_option("--output", out_path, "write instance text to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_args);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (generate->parsed()) {
            std::string text;
            if (gen_path->parsed())
                text = serialize_instance(random_temporal_path(gen_n, gen_label_max, seed).graph);
            else if (gen_star->parsed())
                text = serialize_instance(
                    random_subdivided_star(gen_delta, gen_branch,
                                           gen_periodic_labels
                                               ? SubstarLabelDomain::periodic(gen_period)
                                               : SubstarLabelDomain::finite_upto(gen_label_max),
                                           seed)
                        .graph);
            else if (gen_tree->parsed())
                text = serialize_instance(random_periodic_tree(gen_n, gen_period, seed));
            else
                text = serialize_instance(random_3dm(gen_psize, gen_triples, gen_n, seed));
            write_output(out_path, text);
            return kExitOk;
        }
        // reduce
        TemporalGraph gadget;
        long long budget = -1;
        if (red_substar->parsed()) {
            BudgetRule rule;
            if (budget_rule == "proof")
                rule = BudgetRule::Proof;
            else if (budget_rule == "statement")
                rule = BudgetRule::Statement;
            else
                throw std::invalid_argument("unknown budget rule: " + budget_rule);
            auto red = reduce_3dm_to_substar(load_3dm(reduce_input), rule);
            gadget = std::move(red.graph);
            budget = red.budget;
        } else if (red_tree->parsed() || red_tree_iv->parsed()) {
            auto red = red_tree->parsed() ? reduce_3dm_to_tree(load_3dm(reduce_input))
                                          : reduce_3dm_to_tree_intervals(load_3dm(reduce_input));
            gadget = reduce_normalize ? normalize(red.graph) : std::move(red.graph);
            budget = red.budget;
        } else {
            gadget = reduce_adjacency_to_complete(underlying(load_graph(reduce_input)));
        }
        std::string text = serialize_instance(gadget);
        if (reduce_json) {
            json out{{"instance", text}};
            if (budget >= 0)
                out["budget"] = budget;
            std::cout << out.dump() << "\n";
        } else {
            std::string prefix;
            if (budget >= 0)
                prefix = "# budget " + std::to_string(budget) + "\n";
            write_output(out_path, prefix + text);
        }
        return kExitOk;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
