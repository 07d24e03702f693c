#include "universo/universal.hpp"
#include "universo/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace universo {

long long ConstructionInfo::expected_host_size() const {
    if (scheme == "clique-union") {
        long long total = 0;
        for (int i = 1; i <= k; ++i)
            total += n / i;
        return total;
    }
    long long m = k > 0 ? (static_cast<long long>(n) - p + k - 1) / k : 0;
    return s * m + static_cast<long long>(t) * p;
}

std::string member_name(const FamilySpec& family, int i) {
    const std::string& n = family.members[i].name();
    return n.empty() ? "member_" + std::to_string(i) : n;
}

UniversalGraph build_clique_union_universal(int n, int k) {
    if (k < 1 || k > n)
        throw parameter_error("clique_union_universal: need 1 <= k <= n");
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    for (int size = k; size >= 1; --size) {
        int count = n / size - (size < k ? n / (size + 1) : 0);
        for (int c = 0; c < count; ++c) {
            for (int a = 0; a < size; ++a)
                for (int b = a + 1; b < size; ++b)
                    edges.emplace_back(next + a, next + b);
            next += size;
        }
    }
    UniversalGraph u;
    u.construction = {"clique-union", n, k, 0, 0, 0};
    assert(next == u.construction.expected_host_size());
    u.host = Graph(next, std::move(edges), "U" + std::to_string(k) + "-" + std::to_string(n));
    return u;
}

VertexMap embed_clique_union(const UniversalGraph& u, const Graph& g) {
    if (u.construction.scheme != "clique-union")
        throw parameter_error("embed_clique_union: host is not a clique-union universal");

    // classify the pattern: every component must be a clique
    auto comps = g.connected_components();
    for (const auto& c : comps) {
        long long need = static_cast<long long>(c.size()) * (c.size() - 1) / 2;
        long long have = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                have += g.has_edge(c[i], c[j]) ? 1 : 0;
        if (have != need)
            throw classification_error("embed_clique_union: component is not a clique");
        if (static_cast<int>(c.size()) > u.construction.k)
            throw classification_error("embed_clique_union: clique larger than k");
    }
    if (g.vertex_count() > u.construction.n)
        throw classification_error("embed_clique_union: more than n vertices");

    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a[0] < b[0];
    });

    auto host_cliques = u.host.connected_components();
    std::sort(host_cliques.begin(), host_cliques.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a[0] < b[0];
    });

    if (comps.size() > host_cliques.size())
        throw classification_error("embed_clique_union: too many components");
    VertexMap map;
    map.image.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        // greedy invariant of the construction: the i-th largest host clique
        // is large enough for the i-th largest pattern clique
        assert(host_cliques[i].size() >= comps[i].size());
        for (std::size_t j = 0; j < comps[i].size(); ++j)
            map.image[comps[i][j]] = host_cliques[i][j];
    }
    return map;
}

UniversalGraph build_universal(const FamilySpec& family, int k, int p,
                               const std::vector<Coloring>& colorings,
                               const CliquePacking& packing) {
    const int t = family.t();
    const int n = family.n();
    if (k < 1 || p < 0 || p > n)
        throw parameter_error("build_universal: need k >= 1 and 0 <= p <= n");
    if (!validate_packing(packing) || packing.k != k)
        throw parameter_error("build_universal: packing invalid or block size != k");
    if (t > static_cast<int>(packing.blocks.size()))
        throw capacity_error("build_universal: family larger than the packing");
    if (static_cast<int>(colorings.size()) != t)
        throw parameter_error("build_universal: one coloring per member required");

    const int s = packing.s;
    const int m = (n - p + k - 1) / k; // group size
    const long long host_n = static_cast<long long>(s) * m + static_cast<long long>(t) * p;

    std::vector<std::pair<int, int>> edges;
    UniversalGraph u;
    for (int i = 0; i < t; ++i) {
        const Graph& g = family.members[i];
        const Coloring& col = colorings[i];
        if (static_cast<int>(col.deleted.size()) != p)
            throw contract_error("build_universal: member " + std::to_string(i) +
                                 " must have exactly p deleted vertices (pad first)");
        if (col.k() != k)
            throw contract_error("build_universal: member coloring must have k classes");
        if (col.colored_count() + p != n)
            throw contract_error("build_universal: coloring must cover the member");
        if (!is_equitable(col, g))
            throw contract_error("build_universal: coloring not equitable on member minus X");

        // largest class first onto the ascending block points
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return col.classes[a].size() != col.classes[b].size()
                       ? col.classes[a].size() > col.classes[b].size()
                       : a < b;
        });
        const auto& block = packing.blocks[i];

        std::vector<int> image(n, -1);
        for (int j = 0; j < k; ++j) {
            const auto& cls = col.classes[order[j]];
            assert(static_cast<int>(cls.size()) <= m);
            int base = block[j] * m;
            for (std::size_t slot = 0; slot < cls.size(); ++slot)
                image[cls[slot]] = base + static_cast<int>(slot);
        }
        int private_base = s * m + i * p;
        for (std::size_t j = 0; j < col.deleted.size(); ++j)
            image[col.deleted[j]] = private_base + static_cast<int>(j);

        for (const auto& [a, b] : g.edges())
            edges.emplace_back(image[a], image[b]);

        VertexMap vm;
        vm.image = std::move(image);
        u.embeddings.emplace(member_name(family, i), std::move(vm));
    }

    u.construction = {"block-design", n, k, p, t, s};
    u.host = Graph(static_cast<int>(host_n), std::move(edges), "U-family");
    assert(u.host.vertex_count() == u.construction.expected_host_size());
    return u;
}

std::optional<CliquePacking> packing_with_blocks(int s, int k, long long min_blocks) {
    if (k < 1 || s < 0)
        throw parameter_error("packing_with_blocks: need k >= 1, s >= 0");
    if (min_blocks <= 0)
        return CliquePacking::of(s, k, {});
    if (k == 1) {
        if (s < min_blocks)
            return std::nullopt;
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < min_blocks; ++i)
            blocks.push_back({i});
        return CliquePacking::of(s, k, std::move(blocks));
    }
    if (k == 2) {
        if (static_cast<long long>(s) * (s - 1) / 2 < min_blocks)
            return std::nullopt;
        std::vector<std::vector<int>> blocks;
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v)
                blocks.push_back({u, v});
        return CliquePacking::of(s, 2, std::move(blocks));
    }

    // prime group construction inside [s]
    for (int sp = s / k; sp >= k; --sp) {
        if (!is_prime(sp))
            continue;
        std::optional<CliquePacking> inner;
        if ((k == 3 && sp <= 10) || (k == 4 && sp <= 9))
            inner = brute_force_A(sp, k).witness;
        else
            inner = greedy_packing(sp, k);
        CliquePacking pk = construct_design_prime(sp, k, inner);
        if (static_cast<long long>(pk.blocks.size()) >= min_blocks)
            return pk.regrounded(s);
        break; // the largest prime gives the most cross-group blocks
    }
    if ((k == 3 && s <= 10) || (k == 4 && s <= 9)) {
        ExactPacking ex = brute_force_A(s, k);
        if (ex.count >= min_blocks)
            return ex.witness;
    }
    CliquePacking g = greedy_packing(s, k);
    if (static_cast<long long>(g.blocks.size()) >= min_blocks)
        return g;
    return std::nullopt;
}

UniversalGraph build_sqrt_universal(const FamilySpec& family, int k, int p,
                                    const std::vector<Coloring>& colorings) {
    const int t = family.t();
    const int n = family.n();
    if (k < 1)
        throw parameter_error("build_sqrt_universal: need k >= 1");

    const long long guarantee = std::max<long long>(static_cast<long long>(k) * k, 811);
    if (t >= guarantee) {
        // s + 1 = smallest m with (14m)^2 >= (15k)^2 t, i.e. m = ceil(15/14 k sqrt(t))
        long long rhs = 225LL * k * k * t;
        long long m = static_cast<long long>(std::sqrt(static_cast<double>(rhs) / 196.0));
        while (196 * m * m >= rhs)
            --m;
        while (196 * m * m < rhs)
            ++m;
        int s = static_cast<int>(m - 1);

        std::optional<CliquePacking> packing;
        if (k == 2) {
            packing = packing_with_blocks(s, 2, t);
        } else {
            LowerBoundA lb = lower_bound_A(s, k);
            if (lb.witness && static_cast<long long>(lb.witness->blocks.size()) >= t)
                packing = lb.witness;
        }
        if (!packing)
            throw capacity_error("build_sqrt_universal: no packing with t blocks at the "
                                 "theorem's s; hypotheses violated");
        UniversalGraph u = build_universal(family, k, p, colorings, *packing);
        u.construction.scheme = "sqrt";
        double size_bound = 15.0 / 14.0 * std::sqrt(static_cast<double>(t)) * (n - p + k) +
                            static_cast<double>(t) * p;
        if (!(static_cast<double>(u.host.vertex_count()) < size_bound))
            throw std::logic_error("build_sqrt_universal: host exceeds the theorem bound");
        return u;
    }

    // small families: smallest s where enough blocks are constructible
    const int s_max = 4 * k * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(t))));
    for (int s = k; s <= s_max; ++s) {
        if (auto packing = packing_with_blocks(s, k, t)) {
            UniversalGraph u = build_universal(family, k, p, colorings, *packing);
            u.construction.scheme = "sqrt";
            return u;
        }
    }
    throw capacity_error("build_sqrt_universal: no packing with " + std::to_string(t) +
                         " blocks up to s_max = " + std::to_string(s_max));
}

DoubledGraph augment_to_double(const Graph& g, const std::vector<int>& x, int k,
                               const Coloring& equitable_rest,
                               const std::vector<std::vector<int>>& x_classes) {
    const int n = g.vertex_count();
    const int q = static_cast<int>(x.size());
    if (k < 1)
        throw parameter_error("augment_to_double: need k >= 1");
    if (static_cast<long long>(q) * (k + 1) > n)
        throw contract_error("augment_to_double: hypothesis p(k^2-1) <= n violated "
                             "(q(k+1) > n)");

    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    if (equitable_rest.deleted != xs || equitable_rest.k() != k ||
        equitable_rest.colored_count() + q != n || !is_equitable(equitable_rest, g))
        throw contract_error("augment_to_double: coloring must be equitable on g minus x");
    if (static_cast<int>(x_classes.size()) != k)
        throw contract_error("augment_to_double: x needs a k-coloring");
    {
        std::vector<char> seen(n, 0);
        int covered = 0;
        for (const auto& cls : x_classes)
            for (int v : cls) {
                if (v < 0 || v >= n || seen[v] ||
                    !std::binary_search(xs.begin(), xs.end(), v))
                    throw contract_error("augment_to_double: x_classes must partition x");
                seen[v] = 1;
                ++covered;
            }
        if (covered != q)
            throw contract_error("augment_to_double: x_classes must partition x");
        for (const auto& cls : x_classes)
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j)
                    if (g.has_edge(cls[i], cls[j]))
                        throw contract_error("augment_to_double: x class not stable");
    }

    const int n2 = 2 * (n - q);
    Graph doubled(n2, std::vector<std::pair<int, int>>(g.edges()),
                  g.name().empty() ? "doubled" : g.name() + "-doubled");

    std::vector<std::vector<int>> classes = equitable_rest.classes;
    int next_isolated = n;
    for (int i = 0; i < k; ++i) {
        std::vector<int> cls = x_classes[i];
        assert(cls.size() <= classes[i].size());
        while (cls.size() < classes[i].size())
            cls.push_back(next_isolated++);
        classes.push_back(std::move(cls));
    }
    assert(next_isolated == n2);

    DoubledGraph out;
    out.coloring = Coloring::of(std::move(classes));
    out.graph = std::move(doubled);
    assert(is_equitable(out.coloring, out.graph));
    return out;
}

bool VerifyReport::all_pass() const {
    if (!size_ok || !edge_disjoint_ok)
        return false;
    for (const auto& m : members)
        if (!m.pass)
            return false;
    return true;
}

VerifyReport verify_universal(const UniversalGraph& u, const FamilySpec& family) {
    VerifyReport rep;

    long long expected = u.construction.expected_host_size();
    rep.size_ok = u.host.vertex_count() == expected;
    rep.size_detail = "host has " + std::to_string(u.host.vertex_count()) +
                      " vertices, formula gives " + std::to_string(expected);

    for (int i = 0; i < family.t(); ++i) {
        MemberCheck check;
        check.name = member_name(family, i);
        auto it = u.embeddings.find(check.name);
        if (it == u.embeddings.end()) {
            check.pass = false;
            check.detail = "no embedding recorded";
        } else {
            try {
                check.pass = is_induced_embedding(u.host, family.members[i], it->second);
                check.detail = check.pass ? "induced" : "not an induced embedding";
            } catch (const parameter_error& e) {
                check.pass = false;
                check.detail = e.what();
            }
        }
        rep.members.push_back(std::move(check));
    }

    if (u.construction.scheme == "block-design" || u.construction.scheme == "sqrt") {
        rep.edge_disjoint_checked = true;
        // no host edge may belong to two member images
        std::map<std::pair<int, int>, std::string> owner;
        for (int i = 0; i < family.t(); ++i) {
            auto it = u.embeddings.find(member_name(family, i));
            if (it == u.embeddings.end())
                continue;
            const auto& img = it->second.image;
            for (const auto& [a, b] : family.members[i].edges()) {
                if (a >= static_cast<int>(img.size()) || b >= static_cast<int>(img.size()))
                    continue;
                std::pair<int, int> e{std::min(img[a], img[b]), std::max(img[a], img[b])};
                auto [pos, fresh] = owner.emplace(e, member_name(family, i));
                if (!fresh && pos->second != member_name(family, i)) {
                    rep.edge_disjoint_ok = false;
                    rep.edge_detail = "host edge (" + std::to_string(e.first) + "," +
                                      std::to_string(e.second) + ") shared by " +
                                      pos->second + " and " + member_name(family, i);
                }
            }
        }
        if (rep.edge_disjoint_ok)
            rep.edge_detail = "member images pairwise edge-disjoint";
    }
    return rep;
}

} // namespace universo
