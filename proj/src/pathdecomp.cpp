#include "universo/pathdecomp.hpp"
#include "universo/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace universo {

PathDecomposition PathDecomposition::of(std::vector<std::vector<int>> bags, bool nice) {
    PathDecomposition d;
    for (auto& b : bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    d.bags = std::move(bags);
    d.width = d.recomputed_width();
    d.nice = nice;
    return d;
}

int PathDecomposition::recomputed_width() const {
    std::size_t m = 0;
    for (const auto& b : bags)
        m = std::max(m, b.size());
    return static_cast<int>(m) - 1;
}

namespace {

std::vector<std::vector<int>> sorted_bags(const PathDecomposition& d) {
    auto bags = d.bags;
    for (auto& b : bags)
        std::sort(b.begin(), b.end());
    return bags;
}

// first/last bag index per vertex; -1 when absent
struct Runs {
    std::vector<int> first, last;
    bool in_range = true;
};

Runs vertex_runs(const std::vector<std::vector<int>>& bags, int n) {
    Runs r;
    r.first.assign(n, -1);
    r.last.assign(n, -1);
    for (std::size_t i = 0; i < bags.size(); ++i) {
        for (int v : bags[i]) {
            if (v < 0 || v >= n) {
                r.in_range = false;
                continue;
            }
            if (r.first[v] == -1)
                r.first[v] = static_cast<int>(i);
            r.last[v] = static_cast<int>(i);
        }
    }
    return r;
}

} // namespace

DecompositionReport validate(const PathDecomposition& decomp, const Graph& g) {
    DecompositionReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    int n = g.vertex_count();
    const auto bags = sorted_bags(decomp);
    Runs runs = vertex_runs(bags, n);
    if (!runs.in_range)
        fail("bag references a vertex outside the graph");

    for (int v = 0; v < n; ++v)
        if (runs.first[v] == -1)
            fail("vertex " + std::to_string(v) + " occurs in no bag");

    // contiguity: v present in every bag between first and last
    for (int v = 0; v < n; ++v) {
        if (runs.first[v] == -1)
            continue;
        for (int i = runs.first[v]; i <= runs.last[v]; ++i) {
            const auto& b = bags[i];
            if (!std::binary_search(b.begin(), b.end(), v)) {
                fail("vertex " + std::to_string(v) + " run broken at bag " + std::to_string(i));
                break;
            }
        }
    }

    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : bags) {
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") in no bag");
    }

    if (decomp.width != decomp.recomputed_width())
        fail("recorded width " + std::to_string(decomp.width) + " != max bag size - 1");

    if (decomp.nice) {
        if (bags.empty()) {
            fail("nice decomposition must have bags");
        } else {
            if (!bags.front().empty())
                fail("nice: first bag not empty");
            if (!bags.back().empty())
                fail("nice: last bag not empty");
            for (std::size_t i = 0; i + 1 < bags.size(); ++i) {
                const auto& a = bags[i];
                const auto& b = bags[i + 1];
                std::vector<int> sym;
                std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                              std::back_inserter(sym));
                bool one_step = sym.size() == 1 &&
                                (b.size() == a.size() + 1 || a.size() == b.size() + 1);
                if (!one_step) {
                    fail("nice: bags " + std::to_string(i) + "," + std::to_string(i + 1) +
                         " do not differ by one vertex");
                    break;
                }
            }
        }
    }
    return rep;
}

PathDecomposition make_nice(const PathDecomposition& decomp) {
    const auto bags = sorted_bags(decomp);

    // structural sanity that does not need the graph: contiguous runs
    int max_id = -1;
    for (const auto& b : bags)
        for (int v : b)
            max_id = std::max(max_id, v);
    Runs runs = vertex_runs(bags, max_id + 1);
    for (int v = 0; v <= max_id; ++v) {
        if (runs.first[v] == -1)
            continue;
        for (int i = runs.first[v]; i <= runs.last[v]; ++i)
            if (!std::binary_search(bags[i].begin(), bags[i].end(), v))
                throw contract_error("make_nice: input bags are not contiguous");
    }

    std::vector<std::vector<int>> out;
    out.push_back({});
    std::vector<int> cur;
    auto step_to = [&](const std::vector<int>& target) {
        std::vector<int> leave, enter;
        std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(),
                            std::back_inserter(leave));
        std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(),
                            std::back_inserter(enter));
        for (int v : leave) {
            cur.erase(std::find(cur.begin(), cur.end(), v));
            out.push_back(cur);
        }
        for (int v : enter) {
            cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
            out.push_back(cur);
        }
    };
    for (const auto& b : bags)
        step_to(b);
    step_to({});

    PathDecomposition nice;
    nice.bags = std::move(out);
    nice.width = nice.recomputed_width();
    nice.nice = true;
    return nice;
}

namespace {

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
           g.connected_components().size() == 1;
}

// longest path endpoint via BFS
int bfs_far(const Graph& g, int s, std::vector<int>* parent = nullptr) {
    std::vector<int> dist(g.vertex_count(), -1);
    if (parent)
        parent->assign(g.vertex_count(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    int far = s;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (dist[u] > dist[far] || (dist[u] == dist[far] && u < far))
            far = u;
        for (int v : g.neighbors(u)) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                if (parent)
                    (*parent)[v] = u;
                q.push_back(v);
            }
        }
    }
    return far;
}

PathDecomposition decompose_caterpillar(const Graph& g) {
    if (!is_tree(g))
        throw classification_error("decompose: graph is not a caterpillar (not a tree)");
    int n = g.vertex_count();
    if (n == 1)
        return PathDecomposition::of({{0}});

    // the diameter path of a caterpillar contains the spine
    int a = bfs_far(g, 0);
    std::vector<int> parent;
    int b = bfs_far(g, a, &parent);
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());

    std::vector<char> on_path(n, 0);
    for (int v : path)
        on_path[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!on_path[v] && g.degree(v) != 1)
            throw classification_error("decompose: graph is not a caterpillar");

    std::vector<std::vector<int>> bags;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int s = path[i];
        for (int l : g.neighbors(s))
            if (!on_path[l])
                bags.push_back({s, l});
        if (i + 1 < path.size())
            bags.push_back({s, path[i + 1]});
    }
    return PathDecomposition::of(std::move(bags));
}

void decompose_tree_rec(const Graph& g, std::vector<int> verts,
                        std::vector<std::vector<int>>& bags) {
    if (verts.empty())
        return;
    if (verts.size() == 1) {
        bags.push_back(verts);
        return;
    }
    // centroid of the induced subtree: minimizes the largest remaining piece
    std::sort(verts.begin(), verts.end());
    auto inside = [&](int v) { return std::binary_search(verts.begin(), verts.end(), v); };

    int best = -1, best_sz = static_cast<int>(verts.size()) + 1;
    for (int c : verts) {
        // component sizes of verts \ {c} via DFS
        std::vector<char> vis(g.vertex_count(), 0);
        vis[c] = 1;
        int largest = 0;
        for (int s : verts) {
            if (vis[s])
                continue;
            int sz = 0;
            std::vector<int> stack{s};
            vis[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++sz;
                for (int w : g.neighbors(u))
                    if (inside(w) && !vis[w]) {
                        vis[w] = 1;
                        stack.push_back(w);
                    }
            }
            largest = std::max(largest, sz);
        }
        if (largest < best_sz || (largest == best_sz && c < best)) {
            best_sz = largest;
            best = c;
        }
    }

    // split into components of verts \ {centroid}, recurse, add centroid everywhere
    std::vector<char> vis(g.vertex_count(), 0);
    vis[best] = 1;
    std::size_t start = bags.size();
    for (int s : verts) {
        if (vis[s])
            continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        vis[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (inside(w) && !vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
        }
        decompose_tree_rec(g, std::move(comp), bags);
    }
    if (start == bags.size())
        bags.push_back({}); // isolated centroid
    for (std::size_t i = start; i < bags.size(); ++i)
        bags[i].push_back(best);
}

PathDecomposition decompose_tree(const Graph& g) {
    if (!is_tree(g))
        throw classification_error("decompose: graph is not a tree");
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        all[v] = v;
    std::vector<std::vector<int>> bags;
    decompose_tree_rec(g, std::move(all), bags);
    return PathDecomposition::of(std::move(bags));
}

PathDecomposition sweep_decomposition(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    std::vector<int> last_pos(n, 0); // rightmost position among v and its neighbors
    for (int v = 0; v < n; ++v) {
        last_pos[v] = pos[v];
        for (int w : g.neighbors(v))
            last_pos[v] = std::max(last_pos[v], pos[w]);
    }
    std::vector<std::vector<int>> bags(n);
    for (int v = 0; v < n; ++v)
        for (int i = pos[v]; i <= last_pos[v]; ++i)
            bags[i].push_back(v);
    return PathDecomposition::of(std::move(bags));
}

PathDecomposition decompose_interval(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0)
        return PathDecomposition::of({{}});

    // BFS order, good for path-like graphs
    std::vector<int> bfs_order;
    std::vector<char> vis(n, 0);
    for (int s = 0; s < n; ++s) {
        if (vis[s])
            continue;
        std::deque<int> q{s};
        vis[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            bfs_order.push_back(u);
            for (int v : g.neighbors(u))
                if (!vis[v]) {
                    vis[v] = 1;
                    q.push_back(v);
                }
        }
    }
    // descending-degree order, good for dense-core graphs like K_{p,q}
    std::vector<int> deg_order(n);
    for (int v = 0; v < n; ++v)
        deg_order[v] = v;
    std::sort(deg_order.begin(), deg_order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    PathDecomposition bfs = sweep_decomposition(g, bfs_order);
    PathDecomposition deg = sweep_decomposition(g, deg_order);
    return bfs.width <= deg.width ? bfs : deg;
}

} // namespace

PathDecomposition decompose(const Graph& g, DecomposeKind kind) {
    switch (kind) {
    case DecomposeKind::caterpillar:
        return decompose_caterpillar(g);
    case DecomposeKind::tree:
        return decompose_tree(g);
    case DecomposeKind::interval_heuristic:
        return decompose_interval(g);
    }
    throw parameter_error("decompose: unknown kind");
}

} // namespace universo
