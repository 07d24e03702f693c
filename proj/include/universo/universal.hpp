#pragma once

#include "universo/coloring.hpp"
#include "universo/design.hpp"
#include "universo/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace universo {

struct ConstructionInfo {
    std::string scheme; // clique-union | block-design | sqrt
    int n = 0, k = 0, p = 0, t = 0, s = 0;
    long long expected_host_size() const;
};

/// Host graph bundled with one certified induced embedding per family member
/// and the provenance of the construction.
struct UniversalGraph {
    Graph host;
    std::map<std::string, VertexMap> embeddings;
    ConstructionInfo construction;
};

/// Name used as the embedding key of member i.
std::string member_name(const FamilySpec& family, int i);

/// Host for all unions of cliques of size <= k on <= n vertices:
/// floor(n/j) disjoint cliques of at least j vertices for every j <= k,
/// sum over i of floor(n/i) vertices total. Cliques are laid out
/// consecutively in non-increasing size order. Embeddings start empty and
/// are populated via embed_clique_union.
UniversalGraph build_clique_union_universal(int n, int k);

/// Greedy embedding: pattern cliques sorted by non-increasing size, the i-th
/// into the i-th largest host clique. Throws classification_error when g is
/// not a union of cliques within the (n, k) limits of the host.
VertexMap embed_clique_union(const UniversalGraph& u, const Graph& g);

/// Block-design construction: s stable groups of ceil((n-p)/k) vertices;
/// member i's color classes (sorted by non-increasing size) map onto the
/// groups of packing block i (ascending point order), its edges are added
/// between groups, and its p deleted vertices become private vertices after
/// the groups, member-major. Every coloring must already carry exactly p
/// deleted vertices and be equitable on the rest.
UniversalGraph build_universal(const FamilySpec& family, int k, int p,
                               const std::vector<Coloring>& colorings,
                               const CliquePacking& packing);

/// Packing with at least min_blocks blocks on ground [s], from the first
/// source that reaches the count: all pairs (k = 2), the prime group
/// construction (largest prime s' <= s/k), exact brute force when feasible,
/// greedy first-fit. nullopt when none reaches min_blocks.
std::optional<CliquePacking> packing_with_blocks(int s, int k, long long min_blocks);

/// For t >= max{k^2, 811} picks s = ceil(15/14 * k * sqrt(t)) - 1, which
/// guarantees a packing with t blocks and host size below
/// 15/14 * sqrt(t) * (n - p + k) + t*p. For smaller t falls back to the
/// smallest s <= 4*k*ceil(sqrt(t)) where packing_with_blocks succeeds.
UniversalGraph build_sqrt_universal(const FamilySpec& family, int k, int p,
                                    const std::vector<Coloring>& colorings);

struct DoubledGraph {
    Graph graph;       // g plus n-2q isolated vertices, 2(n-q) total
    Coloring coloring; // equitable 2k-coloring, nothing deleted
};

/// Doubling step: splits the new graph into S = V(g) \ x (keeping the given
/// equitable k-coloring) and T = x plus the new isolated vertices, colored
/// with k fresh classes padded to match the S class sizes. Requires
/// q*(k+1) <= n, the p(k^2-1) <= n hypothesis expressed in q = |x| = p(k-1).
DoubledGraph augment_to_double(const Graph& g, const std::vector<int>& x, int k,
                               const Coloring& equitable_rest,
                               const std::vector<std::vector<int>>& x_classes);

struct MemberCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<MemberCheck> members;
    bool size_ok = true;
    std::string size_detail;
    bool edge_disjoint_checked = false; // only for block-design hosts
    bool edge_disjoint_ok = true;
    std::string edge_detail;
    bool all_pass() const;
};

/// Independent re-check: every member embedding against the host, host size
/// against the construction formula, and (for block-design hosts) pairwise
/// edge-disjointness of the member images.
VerifyReport verify_universal(const UniversalGraph& u, const FamilySpec& family);

} // namespace universo
