#include "universo/coloring.hpp"
#include "universo/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace universo {

int Coloring::colored_count() const noexcept {
    int c = 0;
    for (const auto& cl : classes)
        c += static_cast<int>(cl.size());
    return c;
}

Coloring Coloring::of(std::vector<std::vector<int>> classes, std::vector<int> deleted) {
    for (auto& cl : classes)
        std::sort(cl.begin(), cl.end());
    std::sort(deleted.begin(), deleted.end());
    return Coloring{std::move(classes), std::move(deleted)};
}

namespace {

bool stable_in(const std::vector<int>& verts, const Graph& g) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                return false;
    return true;
}

bool disjoint_union_ok(const Coloring& c, const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    auto mark = [&](const std::vector<int>& verts) {
        for (int v : verts) {
            if (v < 0 || v >= g.vertex_count() || seen[v])
                return false;
            seen[v] = 1;
        }
        return true;
    };
    for (const auto& cl : c.classes)
        if (!mark(cl))
            return false;
    return mark(c.deleted);
}

} // namespace

bool is_proper(const Coloring& c, const Graph& g) {
    if (!disjoint_union_ok(c, g))
        return false;
    for (const auto& cl : c.classes)
        if (!stable_in(cl, g))
            return false;
    return true;
}

bool is_equitable(const Coloring& c, const Graph& g) {
    if (!is_proper(c, g))
        return false;
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& cl : c.classes) {
        lo = std::min(lo, cl.size());
        hi = std::max(hi, cl.size());
    }
    return c.classes.empty() || hi - lo <= 1;
}

Coloring greedy_coloring(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> taken;
        for (int w : g.neighbors(v))
            if (color[w] != -1)
                taken.insert(color[w]);
        int c = 0;
        while (taken.count(c))
            ++c;
        color[v] = c;
        k = std::max(k, c + 1);
    }
    std::vector<std::vector<int>> classes(std::max(k, 1));
    for (int v = 0; v < g.vertex_count(); ++v)
        classes[color[v]].push_back(v);
    return Coloring::of(std::move(classes));
}

RebalanceResult rebalance_two_coloring(const Graph& g, const PathDecomposition& decomp,
                                       const std::vector<int>& class1,
                                       const std::vector<int>& class2, int a,
                                       int max_deletions) {
    if (!decomp.nice)
        throw contract_error("rebalance: decomposition must be nice");
    const int p = max_deletions < 0 ? decomp.width : max_deletions;
    if (p < decomp.width)
        throw contract_error("rebalance: deletion budget below decomposition width");
    std::vector<int> c1_in = class1, c2_in = class2;
    std::sort(c1_in.begin(), c1_in.end());
    std::sort(c2_in.begin(), c2_in.end());

    const int n1 = static_cast<int>(c1_in.size());
    const int n2 = static_cast<int>(c2_in.size());
    if (n1 < n2)
        throw contract_error("rebalance: |class1| must be >= |class2|");
    if (a < 0 || a < n2 - p || a > n1)
        throw contract_error("rebalance: target outside [max(0,|C2|-p), |C1|]");

    std::vector<char> side(g.vertex_count(), 0); // 1: class1, 2: class2
    for (int v : c1_in)
        side[v] = 1;
    for (int v : c2_in) {
        if (side[v])
            throw contract_error("rebalance: classes overlap");
        side[v] = 2;
    }
    for (int v : c1_in)
        for (int w : g.neighbors(v))
            if (side[w] == 1)
                throw contract_error("rebalance: class1 is not stable");
    for (int v : c2_in)
        for (int w : g.neighbors(v))
            if (side[w] == 2)
                throw contract_error("rebalance: class2 is not stable");

    const int r = static_cast<int>(decomp.bags.size());
    // coverage: the decomposition must be over exactly class1 + class2
    {
        std::vector<char> seen(g.vertex_count(), 0);
        for (const auto& b : decomp.bags)
            for (int v : b) {
                if (side[v] == 0)
                    throw contract_error("rebalance: bag vertex outside the two classes");
                seen[v] = 1;
            }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (side[v] && !seen[v])
                throw contract_error("rebalance: decomposition misses a class vertex");
    }

    RebalanceResult res;
    res.trace.target = a;

    // counter walk over the nice decomposition: vertices after the bag keep
    // their color, vertices before it swap
    std::vector<std::pair<int, int>> counters(r);
    {
        int ca = n1, cb = n2; // all vertices are "after" the first (empty) bag
        counters[0] = {ca, cb};
        for (int i = 1; i < r; ++i) {
            const auto& prev = decomp.bags[i - 1];
            const auto& curb = decomp.bags[i];
            std::vector<int> diff;
            std::set_symmetric_difference(prev.begin(), prev.end(), curb.begin(),
                                          curb.end(), std::back_inserter(diff));
            assert(diff.size() == 1);
            int v = diff[0];
            if (curb.size() > prev.size()) { // v enters the bag, leaves "after"
                (side[v] == 1 ? ca : cb) -= 1;
            } else { // v leaves the bag, becomes "before": swapped color
                (side[v] == 2 ? ca : cb) += 1;
            }
            counters[i] = {ca, cb};
        }
        assert(ca == n2 && cb == n1);
    }
    res.trace.counters = counters;

    auto finish = [&](std::vector<int> deleted, std::vector<int> c1, std::vector<int> c2) {
        std::sort(deleted.begin(), deleted.end());
        std::sort(c1.begin(), c1.end());
        std::sort(c2.begin(), c2.end());
        res.deleted = std::move(deleted);
        res.class1 = std::move(c1);
        res.class2 = std::move(c2);
        assert(static_cast<int>(res.class1.size()) == a);
        assert(static_cast<int>(res.deleted.size()) <= p);
        return res;
    };

    if (a == n1) {
        // identity endpoint: the first (empty) bag realizes the target
        res.trace.chosen_bag = 0;
        return finish({}, c1_in, c2_in);
    }
    if (a <= n2) {
        // delete |class2| - a vertices of the smaller class, swap roles
        std::vector<int> del(c2_in.begin(), c2_in.begin() + (n2 - a));
        std::vector<int> c1(c2_in.begin() + (n2 - a), c2_in.end());
        res.trace.chosen_bag = -1;
        return finish(std::move(del), std::move(c1), c1_in);
    }

    // a in (n2, n1): walk the counters, take the largest bag index with a_j == a
    int j = -1;
    for (int i = r - 1; i >= 0; --i)
        if (counters[i].first == a) {
            j = i;
            break;
        }
    if (j < 0)
        throw contract_error("rebalance: counter walk never hits the target");
    if (static_cast<int>(decomp.bags[j].size()) > p)
        throw contract_error("rebalance: chosen bag larger than the deletion budget");
    res.trace.chosen_bag = j;

    // classify vertices against bag j by their runs
    std::vector<int> first(g.vertex_count(), -1), last(g.vertex_count(), -1);
    for (int i = 0; i < r; ++i)
        for (int v : decomp.bags[i]) {
            if (first[v] == -1)
                first[v] = i;
            last[v] = i;
        }
    std::vector<int> c1, c2;
    const auto& bag = decomp.bags[j];
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!side[v] || std::binary_search(bag.begin(), bag.end(), v))
            continue;
        bool after = first[v] > j;
        bool keep = (side[v] == 1);
        (after == keep ? c1 : c2).push_back(v);
    }
    return finish({bag.begin(), bag.end()}, std::move(c1), std::move(c2));
}

namespace {

// Restriction of a decomposition to a vertex subset, re-niced.
PathDecomposition restrict_decomposition(const PathDecomposition& decomp,
                                         const std::vector<char>& keep) {
    std::vector<std::vector<int>> bags;
    bags.reserve(decomp.bags.size());
    for (const auto& b : decomp.bags) {
        std::vector<int> nb;
        for (int v : b)
            if (v >= 0 && v < static_cast<int>(keep.size()) && keep[v])
                nb.push_back(v);
        bags.push_back(std::move(nb));
    }
    return make_nice(PathDecomposition::of(std::move(bags)));
}

} // namespace

AlmostEquitableResult almost_equitable_coloring(const Graph& g,
                                                const PathDecomposition& decomp,
                                                const Coloring& proper) {
    const int n = g.vertex_count();
    const int k = proper.k();
    if (k < 1)
        throw contract_error("almost_equitable: need at least one class");
    if (!proper.deleted.empty() || proper.colored_count() != n || !is_proper(proper, g))
        throw contract_error("almost_equitable: input must be a proper coloring of all of g");
    if (!is_valid(decomp, g))
        throw contract_error("almost_equitable: invalid path decomposition");
    const int p = decomp.width;

    AlmostEquitableResult result;

    if (n <= k) {
        // one vertex per class, nothing deleted
        std::vector<std::vector<int>> classes(k);
        for (int v = 0; v < n; ++v)
            classes[v] = {v};
        result.coloring = Coloring::of(std::move(classes));
        return result;
    }

    if (static_cast<long long>(p) * (k - 1) > n - k) {
        // cap case: delete down to k vertices, one per class
        Coloring cur = proper;
        int removals = n - k;
        std::vector<int> deleted;
        for (int step = 0; step < removals; ++step) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < cur.classes.size(); ++i)
                if (cur.classes[i].size() > cur.classes[best].size())
                    best = i;
            deleted.push_back(cur.classes[best].front());
            cur.classes[best].erase(cur.classes[best].begin());
        }
        std::vector<int> rest;
        for (const auto& cl : cur.classes)
            rest.insert(rest.end(), cl.begin(), cl.end());
        std::sort(rest.begin(), rest.end());
        std::vector<std::vector<int>> classes(k);
        for (int i = 0; i < k; ++i)
            classes[i] = {rest[i]};
        result.coloring = Coloring::of(std::move(classes), std::move(deleted));
        assert(is_equitable(result.coloring, g));
        return result;
    }

    // main pipeline: k-1 rebalancing rounds with targets
    // a_i = floor((n+p)/k) - p + d_i, d_i = 1 iff i <= r (and r > 0)
    const int rr = (n + p) % k;
    const int floor_target = (n + p) / k - p;

    std::vector<std::vector<int>> active = proper.classes;
    std::vector<std::vector<int>> done;
    std::vector<int> deleted;

    for (int round = 1; round < k; ++round) {
        const int target = floor_target + (round <= rr ? 1 : 0);

        std::size_t max_i = 0;
        for (std::size_t i = 1; i < active.size(); ++i)
            if (active[i].size() > active[max_i].size())
                max_i = i;
        std::size_t min_i = max_i == 0 ? 1 : 0;
        for (std::size_t i = 0; i < active.size(); ++i)
            if (i != max_i && active[i].size() < active[min_i].size())
                min_i = i;

        std::vector<char> keep(n, 0);
        for (int v : active[max_i])
            keep[v] = 1;
        for (int v : active[min_i])
            keep[v] = 1;
        PathDecomposition sub = restrict_decomposition(decomp, keep);

        RebalanceResult reb = rebalance_two_coloring(g, sub, active[max_i],
                                                     active[min_i], target, p);
        result.traces.push_back(reb.trace);

        // grow this round's deletions to exactly p, taking from class2
        std::vector<int> class2 = reb.class2;
        std::vector<int> del = reb.deleted;
        while (static_cast<int>(del.size()) < p) {
            if (class2.empty())
                throw contract_error("almost_equitable: cannot pad deletions to width");
            del.push_back(class2.front());
            class2.erase(class2.begin());
        }
        deleted.insert(deleted.end(), del.begin(), del.end());
        done.push_back(reb.class1);

        // the rebalanced leftover replaces the two consumed classes
        std::size_t lo = std::min(min_i, max_i), hi = std::max(min_i, max_i);
        active.erase(active.begin() + hi);
        active[lo] = std::move(class2);
    }

    assert(active.size() == 1);
    assert(static_cast<int>(active[0].size()) == floor_target);
    done.push_back(active[0]);
    result.coloring = Coloring::of(std::move(done), std::move(deleted));

    assert(static_cast<int>(result.coloring.deleted.size()) ==
           std::min(static_cast<long long>(p) * (k - 1), static_cast<long long>(n - k)));
    assert(is_equitable(result.coloring, g));
    return result;
}

Coloring pad_deletion_set(const Graph& g, const Coloring& c, int target) {
    const int n = g.vertex_count();
    const int k = c.k();
    if (target > n - k)
        throw contract_error("pad_deletion_set: target exceeds n - k");
    if (target < static_cast<int>(c.deleted.size()))
        throw contract_error("pad_deletion_set: deletion set already larger than target");
    if (!is_equitable(c, g))
        throw contract_error("pad_deletion_set: input coloring not equitable");

    Coloring out = c;
    while (static_cast<int>(out.deleted.size()) < target) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < out.classes.size(); ++i)
            if (out.classes[i].size() > out.classes[best].size())
                best = i;
        if (out.classes[best].empty())
            throw contract_error("pad_deletion_set: no vertex left to delete");
        out.deleted.push_back(out.classes[best].front());
        out.classes[best].erase(out.classes[best].begin());
    }
    std::sort(out.deleted.begin(), out.deleted.end());
    assert(is_equitable(out, g));
    return out;
}

} // namespace universo
