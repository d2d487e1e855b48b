#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperdom/bfs.hpp"
#include "hyperdom/domination.hpp"
#include "hyperdom/engine.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/generators.hpp"

using namespace hyperdom;

TEST_CASE("derive_sequence") {
    CHECK(derive_sequence(8, 1.5) == std::vector<std::int32_t>{8, 5, 3, 2, 1, 0});
    CHECK(derive_sequence(0, 2.0) == std::vector<std::int32_t>{0});
    CHECK(derive_sequence(8, 1.01) == std::vector<std::int32_t>{8, 7, 6, 5, 4, 3, 2, 1, 0});
    CHECK(derive_sequence(2, 2.0) == std::vector<std::int32_t>{2, 1, 0});
    CHECK(derive_sequence(2, 3.0) == std::vector<std::int32_t>{2, 0});
    CHECK_THROWS_AS(derive_sequence(4, 1.0), ParameterError);
    CHECK_THROWS_AS(derive_sequence(4, 0.5), ParameterError);
    CHECK_THROWS_AS(derive_sequence(-1, 2.0), ParameterError);
}

TEST_CASE("star with sequence (1,0)") {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 1; i <= 6; ++i) edges.emplace_back(0, i);
    Graph g = Graph::from_edges(7, std::move(edges));
    std::int32_t seq[] = {1, 0};
    DominationHierarchy h = hierarchical_dominating_set(g, seq);
    REQUIRE(h.levels.size() == 2);
    CHECK(h.top_level().dominators == std::vector<VertexId>{0});
    CHECK(h.top_level().radius[0] == 1);
    for (VertexId v = 0; v < 7; ++v) CHECK(h.top_level().dominator_of[v] == 0);
    CHECK(hierarchy_check(g, h).ok);
}

TEST_CASE("C8 with sequence (2,0)") {
    Graph g = gen_cycle(8);
    std::int32_t seq[] = {2, 0};
    DominationHierarchy h = hierarchical_dominating_set(g, seq);
    const DominationLevel& top = h.top_level();
    CHECK(top.dominators == std::vector<VertexId>{0, 3});
    // closest-dominator assignment: d(2,3)=1 beats d(2,0)=2
    CHECK(top.dominator_of[0] == 0);
    CHECK(top.dominator_of[1] == 0);
    CHECK(top.dominator_of[6] == 0);
    CHECK(top.dominator_of[7] == 0);
    CHECK(top.dominator_of[2] == 3);
    CHECK(top.dominator_of[4] == 3);
    CHECK(top.dominator_of[5] == 3);
    CHECK(top.radius[0] == 2);
    CHECK(top.radius[3] == 2);
    // bottom level: every vertex its own dominator, children partition V
    CHECK(h.levels[0].dominators.size() == 8);
    CHECK(h.children_of(1, 0).size() + h.children_of(1, 3).size() == 8);
    CHECK(hierarchy_check(g, h).ok);
}

TEST_CASE("single-level sequence (0)") {
    Graph g = gen_random_connected(25, 0.2, 3);
    std::int32_t seq[] = {0};
    DominationHierarchy h = hierarchical_dominating_set(g, seq);
    REQUIRE(h.levels.size() == 1);
    CHECK(h.top_level().dominators.size() == 25);
    for (VertexId v = 0; v < 25; ++v) {
        CHECK(h.top_level().dominator_of[v] == v);
        CHECK(h.top_level().radius[v] == 0);
    }
    CHECK(hierarchy_check(g, h).ok);
}

TEST_CASE("hierarchy invariants on random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        std::size_t n = 20 + (seed * 31) % 101;
        Graph g = gen_random_connected(n, 0.05 + 3.0 / double(n), seed);
        for (std::int32_t k : {1, 2, 3}) {
            auto seq = derive_sequence(k, 2.0);
            DominationHierarchy h = hierarchical_dominating_set(g, seq);
            HierarchyReport report = hierarchy_check(g, h);
            INFO("seed ", seed, " k ", k, ": ", report.detail);
            CHECK(report.ok);
        }
    }
}

TEST_CASE("nesting: a vertex's dominator stays inside its parent cell") {
    Graph g = gen_grid_perturbed(10, 0.1, 9);
    auto seq = derive_sequence(4, 1.5);
    DominationHierarchy h = hierarchical_dominating_set(g, seq);
    for (std::size_t j = 0; j + 1 < h.levels.size(); ++j)
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            VertexId dj = h.levels[j].dominator_of[v];
            CHECK(h.levels[j + 1].dominator_of[dj] == h.levels[j + 1].dominator_of[v]);
        }
}

TEST_CASE("injected faults are detected") {
    Graph g = gen_cycle(12);
    auto seq = derive_sequence(2, 2.0);
    SUBCASE("understated radius leaves cell members uncovered") {
        DominationHierarchy h = hierarchical_dominating_set(g, seq);
        h.levels.back().radius[h.levels.back().dominators[0]] = 0;
        CHECK_FALSE(hierarchy_check(g, h).ok);
    }
    SUBCASE("overstated radius is not tight") {
        DominationHierarchy h = hierarchical_dominating_set(g, seq);
        VertexId d = h.levels.back().dominators[0];
        REQUIRE(h.levels.back().radius[d] == 1);  // cell {11,0,1} under closest assignment
        h.levels.back().radius[d] = 2;
        CHECK_FALSE(hierarchy_check(g, h).ok);
    }
    SUBCASE("vertex moved to a foreign cell breaks partition or nesting") {
        DominationHierarchy h = hierarchical_dominating_set(g, seq);
        const DominationLevel& top = h.top_level();
        REQUIRE(top.dominators.size() >= 2);
        VertexId a = top.dominators[0], b = top.dominators[1];
        // reassign one of b's members to a without touching radii
        for (VertexId v = 0; v < 12; ++v)
            if (top.dominator_of[v] == b && v != b) {
                h.levels.back().dominator_of[v] = a;
                break;
            }
        CHECK_FALSE(hierarchy_check(g, h).ok);
    }
}

TEST_CASE("corollary sandwich against brute force") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_random_connected(18 + (seed % 4) * 4, 0.18, seed);
        QuadrupleResult exact = brute_force_hyperbolicity(g);
        for (std::int32_t k : {1, 2}) {
            auto seq = derive_sequence(k, 2.0);
            DominationHierarchy h = hierarchical_dominating_set(g, seq);
            const auto& doms = h.top_level().dominators;
            // max delta over dominator quadruples, brute force on the subset
            std::vector<std::vector<std::int32_t>> dist;
            for (VertexId v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
            std::int64_t best = 0;
            for (std::size_t a = 0; a < doms.size(); ++a)
                for (std::size_t b = a; b < doms.size(); ++b)
                    for (std::size_t c = b; c < doms.size(); ++c)
                        for (std::size_t e = c; e < doms.size(); ++e) {
                            VertexId qa = doms[a], qb = doms[b], qc = doms[c], qe = doms[e];
                            best = std::max(
                                best, twice_delta4(dist[qa][qb], dist[qc][qe], dist[qa][qc],
                                                   dist[qb][qe], dist[qa][qe], dist[qb][qc]));
                        }
            CHECK(best <= exact.delta.twice);
            CHECK(exact.delta.twice <= best + 2 * 4 * k);
        }
    }
}
