#pragma once

#include "universo/graph.hpp"
#include "universo/pathdecomp.hpp"

#include <utility>
#include <vector>

namespace universo {

/// Partition of a vertex subset into stable classes plus an explicit
/// deletion set. classes and deleted hold sorted vertex ids.
struct Coloring {
    std::vector<std::vector<int>> classes;
    std::vector<int> deleted;

    int k() const noexcept { return static_cast<int>(classes.size()); }
    int colored_count() const noexcept;

    static Coloring of(std::vector<std::vector<int>> classes,
                       std::vector<int> deleted = {});
};

/// All classes stable in g and pairwise disjoint (also from deleted).
bool is_proper(const Coloring& c, const Graph& g);

/// Proper and class sizes pairwise differ by at most one.
bool is_equitable(const Coloring& c, const Graph& g);

/// Greedy proper coloring (ascending ids, smallest available color).
Coloring greedy_coloring(const Graph& g);

/// Audit record of one rebalancing run: the per-bag color counters of the
/// walk, which bag was chosen as the deletion set (-1 when a subset of the
/// smaller class was deleted directly), and the requested target.
struct RebalanceTrace {
    std::vector<std::pair<int, int>> counters; // (a_i, b_i), one per bag
    int chosen_bag = -1;
    int target = 0;
};

struct RebalanceResult {
    std::vector<int> deleted;
    std::vector<int> class1; // |class1| == target
    std::vector<int> class2;
    RebalanceTrace trace;
};

/// Deletes at most max_deletions vertices (default: the decomposition width)
/// from the two-colored subgraph so that the first output class has exactly
/// `a` vertices. decomp must be a nice decomposition covering exactly
/// class1 + class2, and |class1| >= |class2| is required.
/// Valid targets: max(0, |class2| - max_deletions) <= a <= |class1|.
RebalanceResult rebalance_two_coloring(const Graph& g, const PathDecomposition& decomp,
                                       const std::vector<int>& class1,
                                       const std::vector<int>& class2, int a,
                                       int max_deletions = -1);

struct AlmostEquitableResult {
    Coloring coloring;
    std::vector<RebalanceTrace> traces;
};

/// Turns a proper k-coloring into an equitable one by deleting exactly
/// min{p(k-1), n-k} vertices, p being the decomposition width. The input
/// coloring must cover all of g with stable classes.
AlmostEquitableResult almost_equitable_coloring(const Graph& g,
                                                const PathDecomposition& decomp,
                                                const Coloring& proper);

/// Grows the deletion set to exactly `target` vertices, taking one vertex at
/// a time from a currently-largest class (lowest class index on ties, lowest
/// vertex id within the class). Keeps the coloring equitable.
Coloring pad_deletion_set(const Graph& g, const Coloring& c, int target);

} // namespace universo
