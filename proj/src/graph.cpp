#include "universo/graph.hpp"
#include "universo/errors.hpp"

#include <algorithm>
#include <numeric>

namespace universo {

namespace {

inline std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

} // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 0)
        throw parameter_error("graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parameter_error("graph: edge endpoint out of range");
        if (u == v)
            throw parameter_error("graph: self-loop");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(n_, std::vector<std::uint64_t>(word_count(n_), 0));
    for (const auto& [u, v] : edges_) {
        adj_[u][v / 64] |= std::uint64_t{1} << (v % 64);
        adj_[v][u / 64] |= std::uint64_t{1} << (u % 64);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw parameter_error("has_edge: vertex out of range");
    if (u == v)
        return false;
    return (adj_[u][v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_)
        throw parameter_error("degree: vertex out of range");
    int d = 0;
    for (std::uint64_t w : adj_[v])
        d += __builtin_popcountll(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw parameter_error("neighbors: vertex out of range");
    std::vector<int> out;
    for (std::size_t w = 0; w < adj_[v].size(); ++w) {
        std::uint64_t bits = adj_[v][w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            out.push_back(static_cast<int>(w * 64) + b);
            bits &= bits - 1;
        }
    }
    return out;
}

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

FamilySpec FamilySpec::of(std::vector<Graph> members) {
    if (members.empty())
        throw parameter_error("family: needs at least one member");
    int n = members[0].vertex_count();
    for (const auto& g : members)
        if (g.vertex_count() != n)
            throw parameter_error("family: members must share the vertex count");
    return FamilySpec{std::move(members)};
}

Graph generate_clique_union(int n, int i) {
    if (i < 1 || i > n)
        throw parameter_error("clique_union: need 1 <= i <= n");
    std::vector<std::pair<int, int>> edges;
    int cliques = n / i;
    for (int c = 0; c < cliques; ++c)
        for (int a = 0; a < i; ++a)
            for (int b = a + 1; b < i; ++b)
                edges.emplace_back(c * i + a, c * i + b);
    return Graph(n, std::move(edges),
                 "clique-union-" + std::to_string(n) + "-" + std::to_string(i));
}

Graph make_path(int n) {
    if (n < 1)
        throw parameter_error("path: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges), "path-" + std::to_string(n));
}

Graph make_star(int n) {
    if (n < 1)
        throw parameter_error("star: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return Graph(n, std::move(edges), "star-" + std::to_string(n));
}

Graph make_caterpillar(const std::vector<int>& leaves_per_spine) {
    int m = static_cast<int>(leaves_per_spine.size());
    if (m < 1)
        throw parameter_error("caterpillar: empty spine");
    for (int c : leaves_per_spine)
        if (c < 0)
            throw parameter_error("caterpillar: negative leaf count");
    int n = m + std::accumulate(leaves_per_spine.begin(), leaves_per_spine.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s + 1 < m; ++s)
        edges.emplace_back(s, s + 1);
    int next = m;
    for (int s = 0; s < m; ++s)
        for (int l = 0; l < leaves_per_spine[s]; ++l)
            edges.emplace_back(s, next++);
    return Graph(n, std::move(edges), "caterpillar-" + std::to_string(n));
}

Graph make_complete_bipartite(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1)
        throw parameter_error("complete_bipartite: bad part sizes");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
            edges.emplace_back(a, p + b);
    return Graph(p + q, std::move(edges),
                 "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph make_hard_kpartite(int k, int p) {
    if (k < 2 || p < 0)
        throw parameter_error("hard_kpartite: need k >= 2, p >= 0");
    std::vector<int> sizes;
    int parts = k - 1;
    int base = p / parts, rem = p % parts;
    for (int i = 0; i < parts; ++i)
        sizes.push_back(base + (i < rem ? 1 : 0));
    sizes.push_back(2 * p + 2 * k - 1);

    std::vector<int> start(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        start[i + 1] = start[i] + sizes[i];
    int n = start.back();

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            for (int a = start[i]; a < start[i + 1]; ++a)
                for (int b = start[j]; b < start[j + 1]; ++b)
                    edges.emplace_back(a, b);
    return Graph(n, std::move(edges),
                 "hard-" + std::to_string(k) + "-" + std::to_string(p));
}

Graph generate_named(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](std::size_t c) {
        if (params.size() != c)
            throw parameter_error("generate_named(" + kind + "): expected " +
                                  std::to_string(c) + " parameters");
    };
    if (kind == "path") {
        want(1);
        return make_path(params[0]);
    }
    if (kind == "star") {
        want(1);
        return make_star(params[0]);
    }
    if (kind == "caterpillar") {
        if (params.empty())
            throw parameter_error("generate_named(caterpillar): needs leaf counts");
        return make_caterpillar(params);
    }
    if (kind == "complete_bipartite") {
        want(2);
        return make_complete_bipartite(params[0], params[1]);
    }
    if (kind == "hard_kpartite") {
        want(2);
        return make_hard_kpartite(params[0], params[1]);
    }
    throw parameter_error("generate_named: unknown kind '" + kind + "'");
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const VertexMap& map) {
    if (map.pattern_size() != pattern.vertex_count())
        throw parameter_error("is_induced_embedding: map size != pattern size");
    std::vector<char> used(host.vertex_count(), 0);
    for (int x : map.image) {
        if (x < 0 || x >= host.vertex_count())
            throw parameter_error("is_induced_embedding: image out of range");
        if (used[x])
            throw parameter_error("is_induced_embedding: image not injective");
        used[x] = 1;
    }
    int np = pattern.vertex_count();
    for (int u = 0; u < np; ++u)
        for (int v = u + 1; v < np; ++v)
            if (pattern.has_edge(u, v) != host.has_edge(map.image[u], map.image[v]))
                return false;
    return true;
}

namespace {

struct EmbedCtx {
    const Graph& host;
    const Graph& pattern;
    const std::vector<int>& order; // pattern vertices, search order
    std::vector<int> assign;       // pattern id -> host id or -1
    std::vector<char> used;        // host id taken
    EmbedSearch& search;
};

bool embed_rec(EmbedCtx& c, std::size_t depth) {
    if (c.search.node_limit >= 0 && c.search.nodes >= c.search.node_limit) {
        c.search.aborted = true;
        return false;
    }
    ++c.search.nodes;
    if (depth == c.order.size())
        return true;
    int u = c.order[depth];
    int pu_deg = c.pattern.degree(u);
    int pu_codeg = c.pattern.vertex_count() - 1 - pu_deg;
    for (int v = 0; v < c.host.vertex_count(); ++v) {
        if (c.used[v])
            continue;
        if (c.host.degree(v) < pu_deg)
            continue;
        if (c.host.vertex_count() - 1 - c.host.degree(v) < pu_codeg)
            continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth; ++d) {
            int w = c.order[d];
            if (c.pattern.has_edge(u, w) != c.host.has_edge(v, c.assign[w])) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        c.assign[u] = v;
        c.used[v] = 1;
        if (embed_rec(c, depth + 1))
            return true;
        c.assign[u] = -1;
        c.used[v] = 0;
        if (c.search.aborted)
            return false;
    }
    return false;
}

} // namespace

std::optional<VertexMap> find_induced_embedding(const Graph& host, const Graph& pattern,
                                                EmbedSearch& search) {
    if (pattern.vertex_count() > host.vertex_count())
        return std::nullopt;
    std::vector<int> order(pattern.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = pattern.degree(a), db = pattern.degree(b);
        return da != db ? da > db : a < b;
    });
    EmbedCtx ctx{host, pattern, order,
                 std::vector<int>(pattern.vertex_count(), -1),
                 std::vector<char>(host.vertex_count(), 0), search};
    if (!embed_rec(ctx, 0))
        return std::nullopt;
    VertexMap map;
    map.image.assign(ctx.assign.begin(), ctx.assign.end());
    return map;
}

std::optional<VertexMap> find_induced_embedding(const Graph& host, const Graph& pattern) {
    EmbedSearch search;
    return find_induced_embedding(host, pattern, search);
}

} // namespace universo
