#pragma once

#include "universo/coloring.hpp"
#include "universo/graph.hpp"

#include <random>
#include <vector>

namespace test_util {

using universo::Coloring;
using universo::Graph;

/// random tree: each vertex v >= 1 attaches to a uniform earlier vertex
inline Graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, std::move(edges));
}

/// random caterpillar with ~n vertices (spine + leaves)
inline Graph random_caterpillar(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> spine_pick(1, std::max(1, n / 2));
    int m = spine_pick(rng);
    std::vector<int> leaves(m, 0);
    for (int extra = 0; extra < n - m; ++extra) {
        std::uniform_int_distribution<int> at(0, m - 1);
        ++leaves[at(rng)];
    }
    return universo::make_caterpillar(leaves);
}

inline Graph random_graph(int n, double density, std::mt19937& rng) {
    std::bernoulli_distribution flip(density);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng))
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// proper 2-coloring of a forest: bipartition with per-component side flips
inline Coloring random_two_coloring(const Graph& g, std::mt19937& rng) {
    std::vector<std::vector<int>> classes(2);
    for (const auto& comp : g.connected_components()) {
        std::bernoulli_distribution flip(0.5);
        int base = flip(rng) ? 1 : 0;
        // BFS 2-coloring of the component
        std::vector<int> color(g.vertex_count(), -1);
        std::vector<int> queue{comp[0]};
        color[comp[0]] = base;
        std::size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int w : g.neighbors(u))
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                }
        }
        for (int v : comp)
            classes[color[v]].push_back(v);
    }
    return Coloring::of(std::move(classes));
}

/// the 29-vertex caterpillar with bipartition sizes 18/11
inline Graph figure_caterpillar() {
    return universo::make_caterpillar({1, 3, 2, 4, 2, 3, 1, 3, 1});
}

} // namespace test_util
