#include "universo/errors.hpp"
#include "universo/oracle.hpp"
#include "universo/universal.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace universo;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("graph enumeration matches the known counts") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n)
        CHECK(all_graphs(n).size() == expected[n]);
    // ordered by edge count
    int prev = -1;
    for (const Graph& g : all_graphs(6)) {
        CHECK(g.edge_count() >= prev);
        prev = g.edge_count();
    }
    CHECK_THROWS_AS(all_graphs(9), parameter_error);
}

TEST_CASE("minimum universal size for two tiny families") {
    // {3 K_1, K_2 + K_1}: 4 = floor(3/1) + floor(3/2)
    FamilySpec f1 = FamilySpec::of({generate_clique_union(3, 1), generate_clique_union(3, 2)});
    MinUniversalResult r1 = min_universal_size(f1);
    REQUIRE(r1.exact);
    CHECK(r1.size == 4);
    REQUIRE(r1.witness);
    CHECK(find_induced_embedding(*r1.witness, f1.members[0]));
    CHECK(find_induced_embedding(*r1.witness, f1.members[1]));

    // star + path on 4 vertices: the chair (P4 plus a leaf on its second
    // vertex) hosts both induced, so the minimum is 5, not 3*floor(4/2)
    FamilySpec f2 = FamilySpec::of({make_star(4), make_path(4)});
    MinUniversalResult r2 = min_universal_size(f2);
    REQUIRE(r2.exact);
    CHECK(r2.size == 5);

    Graph chair(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    CHECK(is_induced_embedding(chair, make_path(4), VertexMap{{0, 1, 2, 3}}));
    CHECK(is_induced_embedding(chair, make_star(4), VertexMap{{1, 0, 2, 4}}));
    // and no 4-vertex host: it would have to be P4 and K_{1,3} at once
    CHECK_FALSE(find_induced_embedding(make_path(4), make_star(4)));
}

TEST_CASE("single-member family needs exactly the member") {
    Graph p4 = make_path(4);
    MinUniversalResult r = min_universal_size(FamilySpec::of({p4}));
    REQUIRE(r.exact);
    CHECK(r.size == 4);
    REQUIRE(r.witness);
    CHECK(r.witness->edge_count() == p4.edge_count());
    CHECK(find_induced_embedding(*r.witness, p4));
}

TEST_CASE("minimum universal size is monotone under family inclusion") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> nn(2, 4), dd(2, 8);
        int n = nn(rng);
        std::vector<Graph> members;
        for (int i = 0; i < 3; ++i)
            members.push_back(test_util::random_graph(n, dd(rng) / 10.0, rng));
        MinUniversalResult small =
            min_universal_size(FamilySpec::of({members[0], members[1]}));
        MinUniversalResult big = min_universal_size(FamilySpec::of(members));
        REQUIRE(small.exact);
        REQUIRE(big.exact);
        CHECK(small.size <= big.size);
    }
}

TEST_CASE("oracle never beats a certified construction") {
    FamilySpec trees = FamilySpec::of({make_star(4), make_path(4)});
    MinUniversalResult oracle = min_universal_size(trees);
    REQUIRE(oracle.exact);

    std::vector<Coloring> colorings;
    for (const auto& g : trees.members) {
        auto res = almost_equitable_coloring(g, decompose(g, DecomposeKind::caterpillar),
                                             greedy_coloring(g));
        colorings.push_back(pad_deletion_set(g, res.coloring, 1));
    }
    UniversalGraph u = build_sqrt_universal(trees, 2, 1, colorings);
    REQUIRE(verify_universal(u, trees).all_pass());
    CHECK(oracle.size <= u.host.vertex_count());
}

TEST_CASE("budget exhaustion yields a partial bound") {
    OracleBudget tiny;
    tiny.max_states = 5;
    FamilySpec f = FamilySpec::of({make_star(4), make_path(4)});
    MinUniversalResult r = min_universal_size(f, tiny);
    CHECK_FALSE(r.exact);
    CHECK(r.size >= 4);

    OracleBudget cap;
    cap.max_host_vertices = 4;
    MinUniversalResult capped = min_universal_size(f, cap);
    CHECK_FALSE(capped.exact);
    CHECK(capped.size == 5);
}

TEST_CASE("minimum equitable deletion") {
    CHECK(min_equitable_deletion(make_complete_bipartite(3, 3), 2).deletions == 0);
    CHECK(min_equitable_deletion(make_star(5), 2).deletions == 1);
    CHECK(min_equitable_deletion(make_complete_bipartite(2, 7), 2).deletions == 2);
    CHECK(min_equitable_deletion(Graph(6, {}), 3).deletions == 0);
    CHECK_THROWS_AS(min_equitable_deletion(Graph(15, {}), 2), parameter_error);

    OracleBudget tiny;
    tiny.max_states = 2;
    MinDeletionResult partial = min_equitable_deletion(make_complete_bipartite(2, 7), 2, tiny);
    CHECK_FALSE(partial.exact);
}

TEST_CASE("hardness instances require deleting the small parts") {
    // the complete k-partite witness needs q >= p
    CHECK(min_equitable_deletion(make_hard_kpartite(2, 1), 2).deletions >= 1);
    CHECK(min_equitable_deletion(make_hard_kpartite(2, 2), 2).deletions >= 2);
    CHECK(min_equitable_deletion(make_hard_kpartite(2, 3), 2).deletions >= 3);
    CHECK(min_equitable_deletion(make_hard_kpartite(3, 1), 3).deletions >= 1);
    CHECK(min_equitable_deletion(make_hard_kpartite(3, 2), 3).deletions >= 2);
    CHECK(min_equitable_deletion(make_hard_kpartite(3, 3), 3).deletions >= 3);
}

TEST_CASE("clique-union lower-bound argument at desk scale") {
    LowerBoundReport r32 = check_lower_bound_argument(3, 2);
    CHECK(r32.all_pass);
    REQUIRE(r32.levels.size() == 2);
    CHECK(r32.levels[0].actual == 3);
    CHECK(r32.levels[1].actual == 4);

    LowerBoundReport r42 = check_lower_bound_argument(4, 2);
    CHECK(r42.all_pass);
    CHECK(r42.levels[1].actual == 6);

    LowerBoundReport r61 = check_lower_bound_argument(6, 1);
    CHECK(r61.all_pass);
    CHECK(r61.levels[0].actual == 6);
}

TEST_SUITE_END();
