// dhvd: command-line front end for the distance-hereditary deletion solver.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dhvd/bench.hpp"
#include "dhvd/edge_list.hpp"
#include "dhvd/generators.hpp"
#include "dhvd/oracle.hpp"
#include "dhvd/recognition.hpp"
#include "dhvd/solver.hpp"
#include "dhvd/split_decomposition.hpp"

namespace {

using namespace dhvd;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

void print_stats(const SolverStats& st) {
    std::cout << "nodes=" << st.nodes << '\n' << "branch_nodes=" << st.branch_nodes << '\n';
    for (int r = 0; r < kRuleCount; ++r)
        std::cout << "rule_" << to_string(static_cast<RuleTag>(r)) << '=' << st.fired[r] << '\n';
    std::cout << "max_children=" << st.max_children << '\n' << "compressions=" << st.compressions << '\n';
}

int cmd_solve(const std::string& file, int k, bool stats) {
    const auto doc = read_edge_list(file);
    const SolveOutcome out = doc.s.empty() ? solve(doc.graph, k) : solve_disjoint(Instance(doc.graph, doc.s, k));
    std::cout << "verdict=" << (out.yes ? "yes" : "no") << '\n' << "k=" << k << '\n';
    if (out.yes) std::cout << "q=" << join(out.deletion_set) << '\n';
    if (stats) print_stats(out.stats);
    return out.yes ? kExitYes : kExitNo;
}

int cmd_recognize(const std::string& file) {
    const auto doc = read_edge_list(file);
    const auto obs = find_obstruction(doc.graph);
    if (!obs) {
        std::cout << "dh=yes\n";
        return kExitYes;
    }
    std::cout << "dh=no\n"
              << "obstruction=" << to_string(obs->kind) << '\n'
              << "size=" << obs->vertices.size() << '\n'
              << "witness=" << join(obs->vertices) << '\n';
    return kExitNo;
}

int cmd_decompose(const std::string& file) {
    const auto doc = read_edge_list(file);
    const auto comps = connected_components(doc.graph);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto sub = induced_subgraph(doc.graph, comps[c]);
        const auto d = canonical_decomposition(sub.graph, sub.to_parent);
        std::cout << "component " << c << " vertices=" << join(sub.to_parent) << " bags=" << d.bag_count() << '\n'
                  << d.dump();
    }
    return kExitYes;
}

int cmd_oracle(const std::string& file, const std::string& engine, std::optional<int> k, int max_k) {
    const auto doc = read_edge_list(file);
    std::optional<std::vector<Vertex>> best;
    if (engine == "exhaustive") {
        const auto res = oracle_min_dhvd(doc.graph, doc.s);
        if (res.size >= 0) best = res.deletion_set.to_vector();
    } else {
        best = branching_min_dhvd(doc.graph, doc.s, std::max(k.value_or(0), max_k));
    }
    if (best) std::cout << "minimum=" << best->size() << '\n' << "q=" << join(*best) << '\n';
    else std::cout << "minimum=none\n";
    if (k) {
        const bool yes = best && static_cast<int>(best->size()) <= *k;
        std::cout << "verdict=" << (yes ? "yes" : "no") << '\n';
        return yes ? kExitYes : kExitNo;
    }
    return best ? kExitYes : kExitNo;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else write_edge_list(path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-hereditary vertex deletion solver"};
    app.require_subcommand(1);

    std::string file;
    int k = 0;
    bool stats = false;
    auto* solve_cmd = app.add_subcommand("solve", "Decide whether deleting k vertices leaves a DH graph");
    solve_cmd->add_option("file", file, "edge-list file")->required();
    solve_cmd->add_option("-k", k, "deletion budget")->required()->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--stats", stats, "print search statistics");

    auto* recognize_cmd = app.add_subcommand("recognize", "Test distance-heredity and print an obstruction");
    recognize_cmd->add_option("file", file, "edge-list file")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Print canonical split decompositions");
    decompose_cmd->add_option("file", file, "edge-list file")->required();

    std::string engine = "exhaustive";
    std::optional<int> oracle_k;
    int oracle_max_k = 8;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimum deletion set");
    oracle_cmd->add_option("file", file, "edge-list file")->required();
    oracle_cmd->add_option("--engine", engine, "exhaustive (<= 16 vertices) or branching")
        ->check(CLI::IsMember({"exhaustive", "branching"}));
    oracle_cmd->add_option("-k", oracle_k, "report a yes/no verdict for this budget");
    oracle_cmd->add_option("--max-k", oracle_max_k, "search limit for the branching engine");

    std::string out_path;
    std::uint64_t seed = 1;
    int n = 10;
    double p = 0.3;
    int n_dh = 20, k_noise = 2;
    std::string base_file;
    auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
    gen_cmd->require_subcommand(1);
    auto* gen_random = gen_cmd->add_subcommand("random", "G(n, p)");
    gen_random->add_option("--n", n, "vertices")->check(CLI::NonNegativeNumber);
    gen_random->add_option("--p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
    auto* gen_planted_cmd = gen_cmd->add_subcommand("planted", "DH core plus noise vertices");
    gen_planted_cmd->add_option("--n-dh", n_dh, "core vertices")->check(CLI::PositiveNumber);
    gen_planted_cmd->add_option("--k-noise", k_noise, "noise vertices")->check(CLI::NonNegativeNumber);
    auto* gen_gadget = gen_cmd->add_subcommand("vc-gadget", "Edge-to-double-path gadget of a base graph");
    gen_gadget->add_option("--base", base_file, "base graph file (default: random base from --n/--p/--seed)");
    gen_gadget->add_option("--n", n, "random base vertices")->check(CLI::NonNegativeNumber);
    gen_gadget->add_option("--p", p, "random base edge probability")->check(CLI::Range(0.0, 1.0));
    for (auto* sub : {gen_random, gen_planted_cmd, gen_gadget}) {
        sub->add_option("--seed", seed, "64-bit seed");
        sub->add_option("-o,--output", out_path, "output file (default stdout)");
    }

    std::string bench_dir, csv_path;
    std::optional<int> bench_k;
    int bench_max_k = 8;
    auto* bench_cmd = app.add_subcommand("bench", "Solve every file of a directory and write CSV");
    bench_cmd->add_option("dir", bench_dir, "instance directory")->required();
    bench_cmd->add_option("-o,--output", csv_path, "CSV file (default stdout)");
    bench_cmd->add_option("-k", bench_k, "fixed budget (default: minimum up to --max-k)");
    bench_cmd->add_option("--max-k", bench_max_k, "search limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(file, k, stats);
        if (*recognize_cmd) return cmd_recognize(file);
        if (*decompose_cmd) return cmd_decompose(file);
        if (*oracle_cmd) return cmd_oracle(file, engine, oracle_k, oracle_max_k);
        if (*gen_random) {
            emit(out_path, emit_edge_list(random_graph(n, p, seed)));
            return kExitYes;
        }
        if (*gen_planted_cmd) {
            const auto inst = gen_planted(n_dh, k_noise, seed);
            std::string planted = "planted";
            for (Vertex v : inst.planted) planted += ' ' + std::to_string(v);
            emit(out_path, emit_edge_list(inst.graph, inst.graph.none(), {planted}));
            return kExitYes;
        }
        if (*gen_gadget) {
            const Graph base = base_file.empty() ? random_graph(n, p, seed) : read_edge_list(base_file).graph;
            emit(out_path, emit_edge_list(gen_vc_gadget(base)));
            return kExitYes;
        }
        if (*bench_cmd) {
            BenchOptions options;
            options.k = bench_k;
            options.max_k = bench_max_k;
            const auto csv = bench_csv(run_bench(bench_dir, options));
            if (csv_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(csv_path);
                if (!out) throw std::runtime_error(csv_path + ": cannot write file");
                out << csv;
            }
            return kExitYes;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
