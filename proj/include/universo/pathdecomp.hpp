#pragma once

#include "universo/graph.hpp"

#include <string>
#include <vector>

namespace universo {

/// Ordered bag sequence. Bags hold vertex ids of the associated graph,
/// sorted ascending. width must equal (max bag size - 1).
struct PathDecomposition {
    std::vector<std::vector<int>> bags;
    int width = -1;
    bool nice = false;

    static PathDecomposition of(std::vector<std::vector<int>> bags, bool nice = false);
    int recomputed_width() const;
};

struct DecompositionReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks vertex coverage, contiguity, edge coverage and the recorded width;
/// when the nice flag is set, also empty end bags and one-step transitions.
/// Never throws: failures land in the report.
DecompositionReport validate(const PathDecomposition& decomp, const Graph& g);

inline bool is_valid(const PathDecomposition& decomp, const Graph& g) {
    return validate(decomp, g).ok;
}

/// Canonical nice refinement: empty end bags, each transition first removes
/// departing vertices then inserts arriving ones, both in ascending id order.
/// Width is preserved; already-nice input comes back unchanged.
/// Throws contract_error when the input bags are not contiguous.
PathDecomposition make_nice(const PathDecomposition& decomp);

enum class DecomposeKind { caterpillar, tree, interval_heuristic };

/// Constructions for test families. caterpillar: width 1 whenever the graph
/// has an edge; tree: centroid-separator recursion, width <= ceil(log2 n);
/// interval_heuristic: BFS-order active-window bags, any graph, no width
/// guarantee. Throws classification_error when g is not of the declared kind.
PathDecomposition decompose(const Graph& g, DecomposeKind kind);

} // namespace universo
