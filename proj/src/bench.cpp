#include "dhvd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "dhvd/edge_list.hpp"

namespace dhvd {

namespace {

SolveOutcome solve_document(const EdgeListDocument& doc, int k) {
    if (doc.s.empty()) return solve(doc.graph, k);
    return solve_disjoint(Instance(doc.graph, doc.s, k));
}

}  // namespace

std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options) {
    std::error_code ec;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) throw std::runtime_error(dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    for (const auto& file : files) {
        const auto doc = read_edge_list(file);
        BenchRow row;
        row.instance = file.filename().string();
        row.n = doc.graph.order();
        row.m = doc.graph.size();
        const auto start = std::chrono::steady_clock::now();
        SolveOutcome out;
        if (options.k) {
            row.k = *options.k;
            out = solve_document(doc, row.k);
        } else {
            for (row.k = 0; row.k <= options.max_k; ++row.k) {
                auto attempt = solve_document(doc, row.k);
                out.stats += attempt.stats;
                if (attempt.yes) {
                    out.yes = true;
                    out.deletion_set = attempt.deletion_set;
                    break;
                }
            }
            row.k = std::min(row.k, options.max_k);
        }
        row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.yes = out.yes;
        row.q_size = out.yes ? static_cast<int>(out.deletion_set.size()) : -1;
        row.nodes = out.stats.nodes;
        row.rules = out.stats.fired;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "instance,n,m,k,verdict,q_size,nodes";
    for (int r = 0; r < kRuleCount; ++r) out << ",rules_" << to_string(static_cast<RuleTag>(r));
    out << ",millis\n";
    for (const auto& row : rows) {
        out << row.instance << ',' << row.n << ',' << row.m << ',' << row.k << ',' << (row.yes ? "yes" : "no") << ','
            << row.q_size << ',' << row.nodes;
        for (auto count : row.rules) out << ',' << count;
        char millis[32];
        std::snprintf(millis, sizeof millis, "%.3f", row.millis);
        out << ',' << millis << '\n';
    }
    return out.str();
}

}  // namespace dhvd
