#include "universo/oracle.hpp"
#include "universo/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace universo {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a(const std::vector<long long>& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (long long v : data)
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    return h;
}

std::uint64_t invariant_hash(const Graph& g) {
    int n = g.vertex_count();
    std::vector<long long> sig{n, g.edge_count()};
    std::vector<std::vector<long long>> profiles(n);
    long long triangles = 0;
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        std::vector<long long> prof;
        for (int w : nb)
            prof.push_back(g.degree(w));
        std::sort(prof.begin(), prof.end());
        prof.insert(prof.begin(), g.degree(v));
        profiles[v] = std::move(prof);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                triangles += g.has_edge(nb[i], nb[j]) ? 1 : 0;
    }
    sig.push_back(triangles);
    std::sort(profiles.begin(), profiles.end());
    for (const auto& p : profiles) {
        sig.push_back(-1);
        sig.insert(sig.end(), p.begin(), p.end());
    }
    return fnv1a(sig);
}

bool isomorphic_same_order(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    // equal order and size: an induced embedding is an isomorphism
    return find_induced_embedding(a, b).has_value();
}

// candidates on n vertices: parent on n-1 plus one vertex wired to a subset
Graph augment(const Graph& parent, unsigned mask) {
    int pn = parent.vertex_count();
    std::vector<std::pair<int, int>> edges = parent.edges();
    for (int v = 0; v < pn; ++v)
        if ((mask >> v) & 1)
            edges.emplace_back(v, pn);
    return Graph(pn + 1, std::move(edges));
}

} // namespace

const std::vector<Graph>& all_graphs(int n) {
    if (n < 0 || n > 8)
        throw parameter_error("all_graphs: enumeration supported for 0 <= n <= 8");

    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    for (int m = 0; m <= n; ++m) {
        if (cache.count(m))
            continue;
        std::vector<Graph> out;
        if (m == 0) {
            out.emplace_back(0, std::vector<std::pair<int, int>>{});
        } else {
            const std::vector<Graph>& parents = cache.at(m - 1);
            std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
            for (const Graph& parent : parents) {
                for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                    Graph cand = augment(parent, mask);
                    std::uint64_t h = invariant_hash(cand);
                    auto& bucket = buckets[h];
                    bool dup = false;
                    for (std::size_t idx : bucket)
                        if (isomorphic_same_order(out[idx], cand)) {
                            dup = true;
                            break;
                        }
                    if (!dup) {
                        bucket.push_back(out.size());
                        out.push_back(std::move(cand));
                    }
                }
            }
            std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
                return a.edge_count() < b.edge_count();
            });
        }
        cache.emplace(m, std::move(out));
    }
    return cache.at(n);
}

namespace {

struct BudgetState {
    const OracleBudget& budget;
    Clock::time_point start = Clock::now();
    long long states = 0;

    bool exhausted() const {
        if (budget.max_states >= 0 && states > budget.max_states)
            return true;
        return std::chrono::duration<double>(Clock::now() - start).count() >
               budget.max_seconds;
    }
};

// every member embeds induced into host?
bool hosts_all(const Graph& host, const std::vector<const Graph*>& members,
               BudgetState& bs, bool& aborted) {
    for (const Graph* m : members) {
        EmbedSearch search;
        search.node_limit = std::max<long long>(0, bs.budget.max_states - bs.states);
        auto found = find_induced_embedding(host, *m, search);
        bs.states += search.nodes;
        if (search.aborted || bs.exhausted()) {
            aborted = true;
            return false;
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace

MinUniversalResult min_universal_size(const FamilySpec& family, const OracleBudget& budget) {
    // denser members fail faster, check them first
    std::vector<const Graph*> members;
    for (const Graph& g : family.members)
        members.push_back(&g);
    std::sort(members.begin(), members.end(), [](const Graph* a, const Graph* b) {
        return a->edge_count() > b->edge_count();
    });

    BudgetState bs{budget};
    MinUniversalResult res;
    const int n = family.n();

    for (int N = n;; ++N) {
        if (N > budget.max_host_vertices) {
            res.exact = false;
            res.size = N;
            res.states = bs.states;
            return res;
        }
        bool aborted = false;
        if (N <= 8) {
            for (const Graph& host : all_graphs(N)) {
                if (hosts_all(host, members, bs, aborted)) {
                    res.exact = true;
                    res.size = N;
                    res.witness = host;
                    res.states = bs.states;
                    return res;
                }
                if (aborted)
                    break;
            }
        } else {
            // stream parent + new-vertex-neighborhood candidates in edge-count
            // order; isomorphic duplicates merely repeat work here
            const auto& parents = all_graphs(N - 1);
            std::vector<std::vector<unsigned>> masks_by_popcount(N);
            for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask)
                masks_by_popcount[__builtin_popcount(mask)].push_back(mask);
            int max_edges = N * (N - 1) / 2;
            for (int e = 0; e <= max_edges && !aborted; ++e) {
                for (const Graph& parent : parents) {
                    int extra = e - parent.edge_count();
                    if (extra < 0 || extra > N - 1)
                        continue;
                    for (unsigned mask : masks_by_popcount[extra]) {
                        Graph host = augment(parent, mask);
                        if (hosts_all(host, members, bs, aborted)) {
                            res.exact = true;
                            res.size = N;
                            res.witness = std::move(host);
                            res.states = bs.states;
                            return res;
                        }
                        if (aborted)
                            break;
                    }
                    if (aborted)
                        break;
                }
            }
        }
        if (aborted) {
            res.exact = false;
            res.size = N; // everything below N is ruled out
            res.states = bs.states;
            return res;
        }
    }
}

namespace {

// equitable proper k-coloring of the vertices in `verts` (induced in g)?
bool equitable_colorable(const Graph& g, const std::vector<int>& verts, int k,
                         BudgetState& bs, bool& aborted) {
    const int m = static_cast<int>(verts.size());
    if (m == 0)
        return true;
    std::vector<int> cap(k, m / k);
    for (int i = 0; i < m % k; ++i)
        ++cap[i];

    // high-degree first within the induced subgraph
    std::vector<int> order = verts;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (int v : verts) {
            da += g.has_edge(a, v) ? 1 : 0;
            db += g.has_edge(b, v) ? 1 : 0;
        }
        return da != db ? da > db : a < b;
    });

    std::vector<std::vector<int>> cls(k);
    std::vector<int> load(k, 0);

    std::function<bool(int)> rec = [&](int idx) -> bool {
        ++bs.states;
        if (bs.exhausted()) {
            aborted = true;
            return false;
        }
        if (idx == m)
            return true;
        int v = order[idx];
        bool tried_empty_hi = false, tried_empty_lo = false;
        for (int c = 0; c < k; ++c) {
            if (load[c] == cap[c])
                continue;
            if (load[c] == 0) {
                // empty classes of equal capacity are interchangeable
                bool hi = cap[c] == cap[0];
                if (hi ? tried_empty_hi : tried_empty_lo)
                    continue;
                (hi ? tried_empty_hi : tried_empty_lo) = true;
            }
            bool conflict = false;
            for (int w : cls[c])
                if (g.has_edge(v, w)) {
                    conflict = true;
                    break;
                }
            if (conflict)
                continue;
            cls[c].push_back(v);
            ++load[c];
            if (rec(idx + 1))
                return true;
            cls[c].pop_back();
            --load[c];
            if (aborted)
                return false;
        }
        return false;
    };
    return rec(0);
}

} // namespace

MinDeletionResult min_equitable_deletion(const Graph& g, int k, const OracleBudget& budget) {
    const int n = g.vertex_count();
    if (n > 14)
        throw parameter_error("min_equitable_deletion: exhaustive search limited to n <= 14");
    if (k < 1)
        throw parameter_error("min_equitable_deletion: need k >= 1");

    BudgetState bs{budget};
    MinDeletionResult res;

    for (int q = 0; q <= n; ++q) {
        // all q-subsets as deletion candidates, lexicographic
        std::vector<int> subset(q);
        for (int i = 0; i < q; ++i)
            subset[i] = i;
        for (;;) {
            std::vector<char> deleted(n, 0);
            for (int v : subset)
                deleted[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!deleted[v])
                    rest.push_back(v);
            bool aborted = false;
            if (equitable_colorable(g, rest, k, bs, aborted)) {
                res.exact = true;
                res.deletions = q;
                res.states = bs.states;
                return res;
            }
            if (aborted) {
                res.exact = false;
                res.deletions = q;
                res.states = bs.states;
                return res;
            }
            // next combination
            int i = q - 1;
            while (i >= 0 && subset[i] == n - q + i)
                --i;
            if (i < 0)
                break;
            ++subset[i];
            for (int j = i + 1; j < q; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }
    // unreachable: q = n always colors the empty rest
    res.exact = true;
    res.deletions = n;
    res.states = bs.states;
    return res;
}

LowerBoundReport check_lower_bound_argument(int n, int k, const OracleBudget& budget) {
    if (k < 1 || k > n)
        throw parameter_error("check_lower_bound_argument: need 1 <= k <= n");
    LowerBoundReport rep;
    std::vector<Graph> members;
    long long expected = 0;
    for (int j = 1; j <= k; ++j) {
        members.push_back(generate_clique_union(n, j));
        expected += n / j;
        MinUniversalResult r = min_universal_size(FamilySpec::of(members), budget);
        LowerBoundLevel level;
        level.j = j;
        level.expected = expected;
        level.actual = r.size;
        level.exact = r.exact;
        level.pass = r.exact && r.size == expected;
        rep.all_pass = rep.all_pass && level.pass;
        rep.levels.push_back(level);
        if (!r.exact) {
            rep.complete = false;
            break;
        }
    }
    return rep;
}

} // namespace universo
