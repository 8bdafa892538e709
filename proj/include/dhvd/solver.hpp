#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dhvd/graph.hpp"
#include "dhvd/split_decomposition.hpp"

namespace dhvd {

/// Disjoint-DHVD instance (G, S, k). Vertices carry global labels so that
/// solutions survive deletions; labels >= the original order were introduced
/// by the leaf-collapse rule.
class Instance {
public:
    Instance(Graph g, VertexSet s, int k);
    Instance(Graph g, std::vector<Vertex> labels, VertexSet s, int k, Vertex next_label);

    const Graph& graph() const { return g_; }
    const std::vector<Vertex>& labels() const { return labels_; }
    const VertexSet& s() const { return s_; }
    int k() const { return k_; }
    Vertex next_label() const { return next_label_; }

    /// k + cc(G[S]).
    int measure() const;

    /// Components of G - S (smallest vertex first) and their canonical
    /// decompositions, labelled with vertices of graph(). Computed on first use.
    const std::vector<VertexSet>& components() const;
    const std::vector<SplitDecomposition>& decompositions() const;
    const TwinClassPartition& twins() const;

    /// New instance without `gone` (local ids); budget reduced by `spend`.
    Instance without(const VertexSet& gone, int spend) const;
    /// New instance with `more` (local ids) moved into S.
    Instance with_in_s(const VertexSet& more) const;

private:
    struct Cache;
    const Cache& cache() const;

    Graph g_;
    std::vector<Vertex> labels_;
    VertexSet s_;
    int k_ = 0;
    Vertex next_label_ = 0;
    std::shared_ptr<Cache> cache_;
};

enum class RuleTag { B1, B2, R1, R2, R3, R4, R5 };
inline constexpr int kRuleCount = 7;

const char* to_string(RuleTag tag);

/// Reduction step found on an instance. Vertex ids are local to that instance.
struct RuleAction {
    RuleTag tag = RuleTag::R1;
    /// R1: the component, R2/R3: the vertex, R4: swapped twin class,
    /// R5: C1 then C2.
    std::vector<Vertex> vertices;
    /// R2 only: move into S instead of deleting.
    bool to_s = false;
    /// Component index and bag ids in its decomposition (R4: B, B'; R5: B1, B2, B3).
    int component = -1;
    std::vector<int> bags;
    /// R5 only.
    std::vector<Vertex> c1, c2;
};

/// Branching step: `x` (local ids) and the children in order
/// (deletions of x[0], x[1], ..., then for B2 the absorb child).
struct Branch {
    RuleTag tag = RuleTag::B1;
    std::vector<Vertex> x;
    std::vector<Instance> children;
    /// Per child: the deleted vertex (local id), or -1 for the absorb child.
    std::vector<Vertex> removed;
};

using Step = std::variant<Branch, RuleAction>;

/// Exchange recorded by the leaf-collapse rule, in global labels.
struct CollapseRecord {
    std::vector<Vertex> c1, c2, created;
    Graph before_graph;
    std::vector<Vertex> before_labels;
    Graph after_graph;
    std::vector<Vertex> after_labels;
};

struct AppliedRule {
    Instance instance;
    std::optional<CollapseRecord> record;
};

std::optional<Branch> try_branch_B1(const Instance& inst);
std::optional<Branch> try_branch_B2(const Instance& inst);
std::optional<RuleAction> rule_R1_prune(const Instance& inst);
std::optional<RuleAction> rule_R2_pendant(const Instance& inst);
std::optional<RuleAction> rule_R3_irrelevant(const Instance& inst);
/// R3 test for a single vertex.
bool r3_applies(const Instance& inst, Vertex v);
std::optional<RuleAction> rule_R4_leaf_merge(const Instance& inst);
std::optional<RuleAction> rule_R5_collapse(const Instance& inst);

AppliedRule apply_rule(const Instance& inst, const RuleAction& action);

/// B1, B2, R1, ..., R5; the first that applies.
std::optional<Step> apply_first_rule(const Instance& inst);

/// Raised when no rule applies although k > 0 and G - S is non-empty.
class ExhaustionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t branch_nodes = 0;
    std::array<std::uint64_t, kRuleCount> fired{};
    int max_children = 0;
    /// Branch children whose measure did not drop.
    std::uint64_t measure_violations = 0;
    /// Disjoint calls whose branch-node count exceeded 6^measure.
    std::uint64_t branch_bound_violations = 0;
    /// Failed structural checks (only counted with check_invariants).
    std::uint64_t structure_violations = 0;
    std::uint64_t compressions = 0;

    SolverStats& operator+=(const SolverStats& o);
};

struct SolverOptions {
    /// Verify reduced-instance structure and iterative-compression step
    /// validity at every node (slow).
    bool check_invariants = false;
};

struct SolveOutcome {
    bool yes = false;
    /// Vertices of the input graph (or global labels for solve_disjoint).
    std::vector<Vertex> deletion_set;
    SolverStats stats;
};

/// Disjoint-DHVD. Deletion set is reported in the instance's global labels.
SolveOutcome solve_disjoint(const Instance& inst, const SolverOptions& options = {});

/// DHVD by iterative compression over the input vertex order.
SolveOutcome solve(const Graph& g, int k, const SolverOptions& options = {});

/// Smallest k with a yes answer, trying 0..max_k; nullopt if none.
std::optional<SolveOutcome> solve_minimum(const Graph& g, int max_k, const SolverOptions& options = {});

struct OracleResult {
    int size = 0;
    VertexSet deletion_set;
};

/// Minimum Q outside `forbidden` with g - Q DH, by increasing-size subset
/// enumeration (lexicographic within a size); size is -1 when no such Q exists.
/// Throws std::domain_error above 16 vertices.
OracleResult oracle_min_dhvd(const Graph& g, const VertexSet& forbidden);

}  // namespace dhvd
