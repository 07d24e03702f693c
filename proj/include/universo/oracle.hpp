#pragma once

#include "universo/graph.hpp"

#include <optional>
#include <vector>

namespace universo {

struct OracleBudget {
    int max_host_vertices = 9;
    double max_seconds = 300.0;
    long long max_states = 100'000'000; // embedding / coloring search nodes
};

/// All non-isomorphic graphs on exactly n vertices (n <= 8), generated by
/// vertex augmentation; duplicates are rejected by invariant hashing
/// (degree sequence + neighbor-degree profile + triangle count) with full
/// isomorphism checks only inside hash buckets. Ordered by edge count, then
/// generation order. Cached per n.
const std::vector<Graph>& all_graphs(int n);

struct MinUniversalResult {
    bool exact = false;
    /// exact: the minimum host size. partial: every host with fewer vertices
    /// was ruled out, so the minimum is >= size.
    int size = 0;
    std::optional<Graph> witness; // minimum-edge witness when exact
    long long states = 0;
};

/// Smallest N such that some N-vertex host contains every family member as
/// an induced subgraph. Hosts are enumerated by increasing vertex count,
/// then increasing edge count.
MinUniversalResult min_universal_size(const FamilySpec& family,
                                      const OracleBudget& budget = {});

struct MinDeletionResult {
    bool exact = false;
    /// exact: the minimum deletion size. partial: lower bound so far.
    int deletions = 0;
    long long states = 0;
};

/// Smallest |X| over vertex subsets such that g minus X has an equitable
/// proper k-coloring; exhaustive over subsets and colorings with class-size
/// capacity pruning. Feasible around n <= 12 (hard cap 14).
MinDeletionResult min_equitable_deletion(const Graph& g, int k,
                                         const OracleBudget& budget = {});

struct LowerBoundLevel {
    int j = 0;
    long long expected = 0; // sum over i <= j of floor(n/i)
    int actual = 0;
    bool exact = false;
    bool pass = false;
};

struct LowerBoundReport {
    std::vector<LowerBoundLevel> levels;
    bool complete = true; // false when the budget ran out
    bool all_pass = true;
};

/// Checks the clique-union recurrence at desk scale: the minimum universal
/// size of {G_1..G_j} must equal sum of floor(n/i) for every j <= k.
LowerBoundReport check_lower_bound_argument(int n, int k,
                                            const OracleBudget& budget = {});

} // namespace universo
