#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace universo {

/// Simple undirected graph over dense vertex ids 0..n-1.
/// Immutable once constructed: build the edge list first, then construct.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list, std::string name = {});

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Normalized (u < v), lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    const std::string& name() const noexcept { return name_; }
    Graph renamed(std::string name) const;

    std::vector<std::vector<int>> connected_components() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::uint64_t>> adj_; // bit rows
    std::string name_;
};

/// Injective map from pattern vertices to host vertices.
struct VertexMap {
    std::vector<int> image;
    int pattern_size() const noexcept { return static_cast<int>(image.size()); }
};

/// Finite family of same-order graphs.
struct FamilySpec {
    std::vector<Graph> members;

    int t() const noexcept { return static_cast<int>(members.size()); }
    int n() const noexcept { return members.empty() ? 0 : members[0].vertex_count(); }

    /// Checks t >= 1 and equal vertex counts.
    static FamilySpec of(std::vector<Graph> members);
};

// --- generators ---

/// floor(n/i) disjoint i-cliques plus (n mod i) isolated vertices, n vertices total.
/// Cliques occupy consecutive ids starting at 0, isolated vertices come last.
Graph generate_clique_union(int n, int i);

Graph make_path(int n);
/// Star on n vertices: center 0, leaves 1..n-1.
Graph make_star(int n);
/// Spine path 0..m-1 (m = leaves_per_spine.size()), then the leaves of spine
/// vertex s occupy the next leaves_per_spine[s] ids, grouped by ascending s.
Graph make_caterpillar(const std::vector<int>& leaves_per_spine);
/// Parts {0..p-1} and {p..p+q-1}.
Graph make_complete_bipartite(int p, int q);
/// Complete k-partite graph with k-1 small parts summing to p (first p mod (k-1)
/// parts take the ceiling) and one large part of 2p + 2k - 1 vertices.
/// Small parts occupy consecutive ids first, the large part last.
Graph make_hard_kpartite(int k, int p);

/// String-dispatch used by the CLI; kinds: path, star, caterpillar,
/// complete_bipartite, hard_kpartite.
Graph generate_named(const std::string& kind, const std::vector<int>& params);

// --- induced-subgraph machinery ---

/// True iff map sends pattern edges to host edges and pattern non-edges to
/// host non-edges. Throws parameter_error on size mismatch, out-of-range or
/// non-injective images.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const VertexMap& map);

struct EmbedSearch {
    long long nodes = 0;
    long long node_limit = -1; // <0: unlimited
    bool aborted = false;
};

/// Backtracking search for an induced embedding; pattern vertices are tried
/// by descending degree (then ascending id), host candidates by ascending id,
/// so the returned map is deterministic. nullopt if none exists.
std::optional<VertexMap> find_induced_embedding(const Graph& host, const Graph& pattern);
std::optional<VertexMap> find_induced_embedding(const Graph& host, const Graph& pattern,
                                                EmbedSearch& search);

} // namespace universo
