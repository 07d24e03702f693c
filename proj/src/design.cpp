#include "universo/design.hpp"
#include "universo/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>

namespace universo {

CliquePacking CliquePacking::of(int s, int k, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    return CliquePacking{s, k, std::move(blocks)};
}

CliquePacking CliquePacking::regrounded(int new_s) const {
    if (new_s < s)
        throw parameter_error("regrounded: ground set may only grow");
    CliquePacking out = *this;
    out.s = new_s;
    return out;
}

long long packing_counting_bound(int n, int k) {
    if (k < 2)
        return n; // degenerate: singleton blocks
    return (static_cast<long long>(n) * ((n - 1) / (k - 1))) / k;
}

bool validate_packing(const CliquePacking& p) {
    if (p.s < 0 || p.k < 1)
        return false;
    for (const auto& b : p.blocks) {
        if (static_cast<int>(b.size()) != p.k)
            return false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= p.s)
                return false;
            if (i > 0 && b[i] <= b[i - 1])
                return false; // distinct + sorted
        }
    }
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(p.blocks[i].begin(), p.blocks[i].end(),
                                  p.blocks[j].begin(), p.blocks[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() > 1)
                return false;
        }
    if (p.k >= 2 &&
        static_cast<long long>(p.blocks.size()) > packing_counting_bound(p.s, p.k))
        return false;
    return true;
}

bool is_prime(long long v) {
    if (v < 2)
        return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

std::optional<long long> next_prime_in(long long lo, long long hi) {
    if (lo >= hi)
        throw parameter_error("next_prime_in: need lo < hi");
    for (long long v = hi - 1; v > lo; --v)
        if (is_prime(v))
            return v;
    return std::nullopt;
}

CliquePacking construct_design_prime(int s, int k,
                                     const std::optional<CliquePacking>& inner) {
    if (!is_prime(s))
        throw parameter_error("construct_design_prime: s must be prime");
    if (k < 2 || k > s)
        throw parameter_error("construct_design_prime: need 2 <= k <= s");
    if (inner) {
        if (inner->s != s || inner->k != k || !validate_packing(*inner))
            throw parameter_error("construct_design_prime: inner packing does not match (s,k)");
    }

    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(s) * s + (inner ? k * inner->blocks.size() : 0));
    for (int p = 0; p < s; ++p)
        for (int q = 0; q < s; ++q) {
            std::vector<int> block(k);
            for (int i = 0; i < k; ++i)
                block[i] = i * s + (p + i * q) % s;
            blocks.push_back(std::move(block));
        }
    if (inner) {
        for (int i = 0; i < k; ++i)
            for (const auto& b : inner->blocks) {
                std::vector<int> copy(b);
                for (int& x : copy)
                    x += i * s;
                blocks.push_back(std::move(copy));
            }
    }
    CliquePacking out = CliquePacking::of(s * k, k, std::move(blocks));
    assert(validate_packing(out));
    return out;
}

// --- greedy first-fit ---

namespace {

// lexicographically least available k-clique, or empty
bool find_block_rec(const std::vector<std::vector<char>>& avail, int n, int k,
                    std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == k)
        return true;
    int from = chosen.empty() ? 0 : chosen.back() + 1;
    for (int w = from; w < n; ++w) {
        bool ok = true;
        for (int c : chosen)
            if (!avail[c][w]) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        chosen.push_back(w);
        if (find_block_rec(avail, n, k, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

CliquePacking greedy_packing(int n, int k) {
    if (k < 2)
        throw parameter_error("greedy_packing: need k >= 2");
    std::vector<std::vector<char>> avail(n, std::vector<char>(n, 1));
    std::vector<std::vector<int>> blocks;
    for (;;) {
        std::vector<int> chosen;
        if (!find_block_rec(avail, n, k, chosen))
            break;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                avail[chosen[i]][chosen[j]] = avail[chosen[j]][chosen[i]] = 0;
        blocks.push_back(std::move(chosen));
    }
    return CliquePacking::of(n, k, std::move(blocks));
}

// --- exact branch and bound ---

namespace {

struct PackSearch {
    int n, k, pairs_per_block;
    std::vector<std::uint64_t> vertex_mask; // edges incident to v
    long long best = 0;
    std::vector<std::vector<int>> best_blocks;
    std::vector<std::vector<int>> stack;

    int edge_index(int u, int v) const { // u < v
        return v * (v - 1) / 2 + u;
    }
    std::pair<int, int> edge_of(int idx) const {
        int v = 1;
        while ((v + 1) * v / 2 <= idx)
            ++v;
        return {idx - v * (v - 1) / 2, v};
    }

    long long upper_bound(std::uint64_t avail) const {
        int rem = __builtin_popcountll(avail);
        long long ub_edges = rem / pairs_per_block;
        long long degsum = 0;
        for (int v = 0; v < n; ++v)
            degsum += __builtin_popcountll(avail & vertex_mask[v]) / (k - 1);
        return std::min(ub_edges, degsum / k);
    }

    void extend(std::uint64_t avail, int u, int v, std::vector<int>& extra, int from,
                long long cur) {
        if (static_cast<int>(extra.size()) == k - 2) {
            std::vector<int> block{u, v};
            block.insert(block.end(), extra.begin(), extra.end());
            std::sort(block.begin(), block.end());
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j)
                    mask |= std::uint64_t{1} << edge_index(block[i], block[j]);
            stack.push_back(block);
            dfs(avail & ~mask, cur + 1);
            stack.pop_back();
            return;
        }
        for (int w = from; w < n; ++w) {
            if (w == u || w == v)
                continue;
            bool ok = (avail >> edge_index(std::min(u, w), std::max(u, w))) & 1;
            ok = ok && ((avail >> edge_index(std::min(v, w), std::max(v, w))) & 1);
            for (int x : extra)
                ok = ok && ((avail >> edge_index(std::min(x, w), std::max(x, w))) & 1);
            if (!ok)
                continue;
            extra.push_back(w);
            extend(avail, u, v, extra, w + 1, cur);
            extra.pop_back();
        }
    }

    void dfs(std::uint64_t avail, long long cur) {
        if (cur > best) {
            best = cur;
            best_blocks = stack;
        }
        if (cur + upper_bound(avail) <= best)
            return;
        if (!avail)
            return;
        int e = __builtin_ctzll(avail);
        auto [u, v] = edge_of(e);
        std::vector<int> extra;
        extend(avail, u, v, extra, 0, cur);
        // the very first block may be forced through the least pair
        if (cur > 0)
            dfs(avail & ~(std::uint64_t{1} << e), cur);
    }
};

} // namespace

ExactPacking brute_force_A(int n, int k) {
    if (k < 2 || n < 0)
        throw parameter_error("brute_force_A: need k >= 2, n >= 0");
    const bool feasible = (k == 2 && n <= 2000) || (k == 3 && n <= 10) || (k == 4 && n <= 9);
    if (!feasible) {
        double logsize = 0;
        for (int i = 0; i < k; ++i)
            logsize += std::log10(static_cast<double>(n - i) / (i + 1) + 1);
        throw parameter_error(
            "brute_force_A: (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
            ") beyond the documented range (k=2: n<=2000, k=3: n<=10, k=4: n<=9); "
            "candidate blocks ~10^" + std::to_string(static_cast<int>(logsize)));
    }
    if (n < k)
        return {0, CliquePacking::of(n, k, {})};
    if (k == 2) {
        // every pair is a block; attains the counting bound
        std::vector<std::vector<int>> blocks;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                blocks.push_back({u, v});
        long long count = static_cast<long long>(blocks.size());
        return {count, CliquePacking::of(n, 2, std::move(blocks))};
    }

    PackSearch search;
    search.n = n;
    search.k = k;
    search.pairs_per_block = k * (k - 1) / 2;
    search.vertex_mask.assign(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int e = search.edge_index(u, v);
            search.vertex_mask[u] |= std::uint64_t{1} << e;
            search.vertex_mask[v] |= std::uint64_t{1} << e;
        }

    CliquePacking greedy = greedy_packing(n, k);
    search.best = static_cast<long long>(greedy.blocks.size());
    search.best_blocks = greedy.blocks;

    std::uint64_t full = (n * (n - 1) / 2 == 64)
                             ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << (n * (n - 1) / 2)) - 1;
    search.dfs(full, 0);

    ExactPacking out;
    out.count = search.best;
    out.witness = CliquePacking::of(n, k, search.best_blocks);
    assert(validate_packing(out.witness));
    assert(static_cast<long long>(out.witness.blocks.size()) == out.count);
    return out;
}

std::optional<std::pair<long long, long long>> lookup_A(int n, int k) {
    static const std::map<std::pair<int, int>, std::pair<long long, long long>> table = {
        {{3, 2}, {3, 3}},     {{4, 2}, {6, 6}},     {{5, 3}, {2, 2}},
        {{9, 3}, {12, 12}},   {{11, 3}, {16, 16}},  {{15, 3}, {35, 35}},
        {{25, 4}, {50, 50}},  {{42, 4}, {136, 136}}, {{52, 5}, {123, 124}},
    };
    auto it = table.find({n, k});
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

LowerBoundA lower_bound_A(int n, int k) {
    if (k < 2 || n < 0)
        throw parameter_error("lower_bound_A: need k >= 2, n >= 0");
    if (n < k)
        return {0, CliquePacking::of(n, k, {}), "empty"};
    if (k == 2) {
        std::vector<std::vector<int>> blocks;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                blocks.push_back({u, v});
        long long count = static_cast<long long>(blocks.size());
        return {count, CliquePacking::of(n, 2, std::move(blocks)), "exact-k2"};
    }

    struct Candidate {
        long long value;
        std::optional<CliquePacking> witness;
        std::string source;
    };
    std::vector<Candidate> candidates;

    bool lemma_ran = false;
    if (15LL * k * k <= 14LL * (n + 1) && n >= 30 * k) {
        long long i = n / (15LL * k);
        auto s = next_prime_in(14 * i, 15 * i);
        if (s) {
            // s*k <= n and 15*s*k >= 14*(n+1), so s^2 >= (14/15 * (n+1)/k)^2
            assert(*s * k <= n);
            assert(15 * *s * k >= 14LL * (n + 1));
            CliquePacking w = construct_design_prime(static_cast<int>(*s), k).regrounded(n);
            candidates.push_back({*s * *s, std::move(w), "prime-lemma"});
            lemma_ran = true;
        }
    }
    if (auto lk = lookup_A(n, k))
        candidates.push_back({lk->first, std::nullopt, "lookup"});

    bool brute_ran = false;
    if ((k == 3 && n <= 10) || (k == 4 && n <= 9)) {
        ExactPacking ex = brute_force_A(n, k);
        candidates.push_back({ex.count, std::move(ex.witness), "brute-force"});
        brute_ran = true;
    }
    if (!lemma_ran && !brute_ran) {
        CliquePacking g = greedy_packing(n, k);
        long long count = static_cast<long long>(g.blocks.size());
        candidates.push_back({count, std::move(g), "greedy"});
    }

    // priority among equal values follows the listing order above
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    LowerBoundA out;
    out.bound = candidates.front().value;
    out.source = candidates.front().source;
    for (const auto& c : candidates)
        if (c.witness) {
            out.witness = c.witness;
            break;
        }
    return out;
}

} // namespace universo
