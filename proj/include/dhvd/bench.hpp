#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dhvd/solver.hpp"

namespace dhvd {

struct BenchRow {
    std::string instance;
    int n = 0;
    int m = 0;
    int k = 0;
    bool yes = false;
    /// -1 for a no verdict.
    int q_size = -1;
    std::uint64_t nodes = 0;
    std::array<std::uint64_t, kRuleCount> rules{};
    double millis = 0;
};

struct BenchOptions {
    /// Fixed budget; when absent the smallest k <= max_k is searched.
    std::optional<int> k;
    int max_k = 8;
};

/// Solves every regular file in `dir`; rows sorted by file name.
/// Unreadable or malformed files raise std::runtime_error naming the file.
std::vector<BenchRow> run_bench(const std::filesystem::path& dir, const BenchOptions& options);

/// Header plus one line per row:
/// instance,n,m,k,verdict,q_size,nodes,rules_B1,...,rules_R5,millis
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace dhvd
