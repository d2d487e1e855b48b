#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperdom/bfs.hpp"
#include "hyperdom/distance_cache.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/generators.hpp"

using namespace hyperdom;

TEST_CASE("capacity below 7 rejected") {
    CHECK_THROWS_AS(MatrixCache(6, 50000), ParameterError);
    CHECK_NOTHROW(MatrixCache(7, 50000));
}

TEST_CASE("hit and miss semantics") {
    Graph g = gen_cycle(8);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000);
    std::vector<VertexId> a{0, 1}, b{4, 5};
    auto m1 = cache.get(0, 0, 4, a, b, labels);
    REQUIRE(m1);
    CHECK(cache.stats().misses == 1);
    CHECK(cache.stats().label_queries == 4);
    auto m2 = cache.get(0, 0, 4, a, b, labels);
    CHECK(m2.get() == m1.get());
    CHECK(cache.stats().hits == 1);
    CHECK(cache.stats().label_queries == 4);  // no rebuild
}

TEST_CASE("cycle cell matrix entries") {
    Graph g = gen_cycle(8);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000);
    std::vector<VertexId> a{0, 1}, b{4, 5};
    auto m = cache.get(0, 0, 4, a, b, labels);
    REQUIRE(m);
    CHECK(m->at(0, 0) == 4);  // d(0,4)
    CHECK(m->at(0, 1) == 3);  // d(0,5)
    CHECK(m->at(1, 0) == 3);  // d(1,4)
    CHECK(m->at(1, 1) == 4);  // d(1,5)
}

TEST_CASE("oriented keys are distinct") {
    Graph g = gen_cycle(8);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000);
    std::vector<VertexId> a{0, 1}, b{4, 5};
    cache.get(0, 0, 4, a, b, labels);
    cache.get(0, 4, 0, b, a, labels);
    CHECK(cache.stats().misses == 2);
    CHECK(cache.stats().hits == 0);
}

TEST_CASE("lru eviction with 8 keys round robin") {
    Graph g = gen_cycle(16);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000);
    std::vector<std::vector<VertexId>> cells;
    for (VertexId v = 0; v < 8; ++v) cells.push_back({v, VertexId(v + 8)});
    for (VertexId v = 0; v < 8; ++v) cache.get(0, v, v, cells[v], cells[v], labels);
    CHECK(cache.stats().misses == 8);
    CHECK(cache.stats().evictions == 1);
    CHECK(cache.size() == 7);
    // key 0 was evicted: fetching it misses, fetching key 7 hits
    cache.get(0, 7, 7, cells[7], cells[7], labels);
    CHECK(cache.stats().hits == 1);
    cache.get(0, 0, 0, cells[0], cells[0], labels);
    CHECK(cache.stats().misses == 9);
}

TEST_CASE("eviction does not invalidate held matrices") {
    Graph g = gen_cycle(16);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000);
    std::vector<VertexId> first{0, 8};
    auto held = cache.get(0, 0, 0, first, first, labels);
    for (VertexId v = 1; v < 9; ++v) {
        std::vector<VertexId> cell{v, VertexId(v + 7)};
        cache.get(0, v, v, cell, cell, labels);
    }
    CHECK(cache.stats().evictions >= 1);
    CHECK(held->at(0, 1) == labels.query(0, 8));  // still alive
}

TEST_CASE("side limit bypass") {
    Graph g = gen_cycle(12);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 2);
    std::vector<VertexId> small{0, 1}, big{3, 4, 5};
    CHECK(cache.get(0, 0, 3, small, big, labels) == nullptr);
    CHECK(cache.stats().bypasses == 1);
    CHECK(cache.get(0, 0, 1, small, small, labels) != nullptr);
}

TEST_CASE("disabled cache always bypasses") {
    Graph g = gen_cycle(12);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000, false);
    std::vector<VertexId> a{0, 1};
    CHECK(cache.get(0, 0, 0, a, a, labels) == nullptr);
    CHECK(cache.stats().misses == 0);
    CHECK(cache.stats().label_queries == 0);
}

TEST_CASE("entries match bfs on a random graph") {
    Graph g = gen_random_connected(60, 0.08, 12);
    HubLabels labels = HubLabels::build(g);
    MatrixCache cache(7, 50000);
    std::vector<VertexId> a{3, 17, 40}, b{5, 28, 51, 9};
    auto m = cache.get(1, 3, 5, a, b, labels);
    REQUIRE(m);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto dist = bfs_distances(g, a[i]);
        for (std::size_t j = 0; j < b.size(); ++j) CHECK(m->at(i, j) == dist[b[j]]);
    }
}
