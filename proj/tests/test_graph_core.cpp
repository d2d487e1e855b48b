#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hyperdom/bfs.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/generators.hpp"
#include "hyperdom/graph.hpp"
#include "hyperdom/rng.hpp"

using namespace hyperdom;

namespace {

Graph star(std::size_t leaves) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, VertexId(i));
    return Graph::from_edges(leaves + 1, std::move(edges));
}

std::vector<std::int32_t> floyd_warshall_row(const Graph& g, VertexId s) {
    const std::size_t n = g.vertex_count();
    const std::int32_t inf = 1 << 20;
    std::vector<std::int32_t> d(n * n, inf);
    for (std::size_t v = 0; v < n; ++v) {
        d[v * n + v] = 0;
        for (VertexId w : g.neighbors(VertexId(v))) d[v * n + w] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    return {d.begin() + std::ptrdiff_t(s * n), d.begin() + std::ptrdiff_t((s + 1) * n)};
}

}  // namespace

TEST_CASE("edge list parsing") {
    SUBCASE("triangle") {
        std::istringstream in("0 1\n1 2\n2 0\n");
        LoadResult r = load_edge_list(in);
        CHECK(r.graph.vertex_count() == 3);
        CHECK(r.graph.edge_count() == 3);
    }
    SUBCASE("duplicate edges and loops dropped") {
        std::istringstream in("0 1\n0 1\n1 1\n");
        LoadResult r = load_edge_list(in);
        CHECK(r.graph.vertex_count() == 2);
        CHECK(r.graph.edge_count() == 1);
        CHECK(r.dropped.dropped_duplicates == 1);
        CHECK(r.dropped.dropped_loops == 1);
    }
    SUBCASE("comment lines skipped") {
        std::istringstream in("# SNAP header\n% matrix market\nc dimacs comment\n5 9\n9 11\n");
        LoadResult r = load_edge_list(in);
        CHECK(r.graph.vertex_count() == 3);
        CHECK(r.graph.edge_count() == 2);
        CHECK(r.original_ids == std::vector<std::uint64_t>{5, 9, 11});
    }
    SUBCASE("dimacs format") {
        std::istringstream in("c comment\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
        LoadResult r = load_edge_list(in, EdgeFormat::Dimacs);
        CHECK(r.graph.vertex_count() == 3);
        CHECK(r.graph.edge_count() == 3);
    }
    SUBCASE("malformed line reports its number") {
        std::istringstream in("0 1\n1 x\n");
        CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"), ParseError);
    }
    SUBCASE("extra token rejected") {
        std::istringstream in("0 1 7\n");
        CHECK_THROWS_AS(load_edge_list(in), ParseError);
    }
    SUBCASE("empty graph rejected") {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(load_edge_list(in), ParseError);
    }
    SUBCASE("ids densified in first-appearance order") {
        std::istringstream in("100 7\n7 42\n");
        LoadResult r = load_edge_list(in);
        CHECK(r.original_ids == std::vector<std::uint64_t>{100, 7, 42});
    }
}

TEST_CASE("write/load round trip") {
    Graph g = gen_random_connected(25, 0.2, 11);
    std::ostringstream out;
    write_edge_list(g, out, "test fixture");
    std::istringstream in(out.str());
    LoadResult r = load_edge_list(in);
    // loading densifies by first appearance; map back through original_ids
    REQUIRE(r.graph.vertex_count() == g.vertex_count());
    REQUIRE(r.graph.edge_count() == g.edge_count());
    for (VertexId v = 0; v < r.graph.vertex_count(); ++v)
        for (VertexId w : r.graph.neighbors(v))
            CHECK(g.has_edge(VertexId(r.original_ids[v]), VertexId(r.original_ids[w])));
}

TEST_CASE("graph summary") {
    SUBCASE("C8 is 2-regular") {
        GraphSummary s = graph_summary(gen_cycle(8));
        CHECK(s.min_degree == 2);
        CHECK(s.max_degree == 2);
        CHECK(s.mean_degree == doctest::Approx(2.0));
    }
    SUBCASE("star K_{1,4}") {
        GraphSummary s = graph_summary(star(4));
        CHECK(s.min_degree == 1);
        CHECK(s.max_degree == 4);
        CHECK(s.mean_degree == doctest::Approx(1.6));
    }
    SUBCASE("triangle") {
        GraphSummary s = graph_summary(gen_cycle(3));
        CHECK(s.n == 3);
        CHECK(s.m == 3);
        CHECK(s.min_degree == 2);
        CHECK(s.max_degree == 2);
    }
}

TEST_CASE("adjacency symmetry holds on generated graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = gen_random_connected(60, 0.08, seed + 1);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId w : g.neighbors(v)) {
                CHECK(v != w);
                CHECK(g.has_edge(w, v));
            }
    }
}

TEST_CASE("bfs distances") {
    SUBCASE("path endpoints") {
        auto d = bfs_distances(gen_path(5), 0);
        CHECK(d == std::vector<std::int32_t>{0, 1, 2, 3, 4});
    }
    SUBCASE("cycle") {
        auto d = bfs_distances(gen_cycle(8), 0);
        CHECK(d == std::vector<std::int32_t>{0, 1, 2, 3, 4, 3, 2, 1});
    }
    SUBCASE("matches Floyd-Warshall on random graphs") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            Graph g = gen_random_connected(12 + seed * 6, 0.15, seed);
            for (VertexId s = 0; s < g.vertex_count(); s += 3)
                CHECK(bfs_distances(g, s) == floyd_warshall_row(g, s));
        }
    }
    SUBCASE("triangle inequality on sampled triples") {
        Graph g = gen_random_connected(80, 0.06, 3);
        std::vector<std::vector<std::int32_t>> d;
        for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
        std::mt19937_64 gen(7);
        for (int i = 0; i < 2000; ++i) {
            VertexId a = VertexId(rng::below(gen, 80)), b = VertexId(rng::below(gen, 80)),
                     c = VertexId(rng::below(gen, 80));
            CHECK(d[a][b] <= d[a][c] + d[c][b]);
        }
    }
}

TEST_CASE("truncated multi-source bfs") {
    SUBCASE("cycle with two sources") {
        Graph g = gen_cycle(8);
        VertexId sources[] = {0, 3};
        auto hits = truncated_multi_source_bfs(g, sources, 2);
        REQUIRE(hits.size() == 8);  // every vertex within 2 of {0,3}
        auto find = [&](VertexId v) {
            for (auto& h : hits)
                if (h.vertex == v) return h;
            FAIL("missing vertex");
            return hits[0];
        };
        CHECK(find(2).distance == 1);  // adjacent to 3
        CHECK(find(2).source == 3);
        CHECK(find(1).distance == 1);
        CHECK(find(1).source == 0);
        CHECK(find(5).distance == 2);
        CHECK(find(5).source == 3);
    }
    SUBCASE("equidistant vertex takes the smaller source id") {
        Graph g = gen_cycle(8);
        VertexId sources[] = {0, 4};
        auto hits = truncated_multi_source_bfs(g, sources, 2);
        for (auto& h : hits)
            if (h.vertex == 2) {
                CHECK(h.distance == 2);  // tied between 0 and 4
                CHECK(h.source == 0);
            }
    }
    SUBCASE("radius zero maps sources to themselves") {
        Graph g = gen_cycle(6);
        VertexId sources[] = {1, 4};
        auto hits = truncated_multi_source_bfs(g, sources, 0);
        REQUIRE(hits.size() == 2);
        CHECK(hits[0].vertex == 1);
        CHECK(hits[0].distance == 0);
        CHECK(hits[1].vertex == 4);
    }
    SUBCASE("all vertices as sources") {
        Graph g = gen_random_connected(20, 0.3, 2);
        std::vector<VertexId> sources(20);
        for (VertexId v = 0; v < 20; ++v) sources[v] = v;
        auto hits = truncated_multi_source_bfs(g, sources, 3);
        REQUIRE(hits.size() == 20);
        for (auto& h : hits) {
            CHECK(h.distance == 0);
            CHECK(h.source == h.vertex);
        }
    }
    SUBCASE("filter limits reporting, not traversal") {
        Graph g = gen_path(7);
        VertexId sources[] = {0};
        auto hits = truncated_multi_source_bfs(g, sources, 6,
                                               [](VertexId v) { return v % 2 == 0; });
        REQUIRE(hits.size() == 4);
        CHECK(hits[3].vertex == 6);
        CHECK(hits[3].distance == 6);  // reached through odd vertices
    }
    SUBCASE("min distance + smallest source on random graphs") {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            Graph g = gen_random_connected(50, 0.08, seed);
            VertexId sources[] = {3, 11, 27};
            auto hits = truncated_multi_source_bfs(g, sources, 3);
            std::vector<std::vector<std::int32_t>> d;
            for (VertexId s : sources) d.push_back(bfs_distances(g, s));
            for (auto& h : hits) {
                std::int32_t best = std::min({d[0][h.vertex], d[1][h.vertex], d[2][h.vertex]});
                REQUIRE(best == h.distance);
                std::size_t si = 0;
                while (d[si][h.vertex] != best) ++si;
                CHECK(h.source == sources[si]);
            }
        }
    }
}

TEST_CASE("largest biconnected component") {
    SUBCASE("two triangles sharing a vertex") {
        std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {2, 0},
                                                         {2, 3}, {3, 4}, {4, 2}};
        Graph g = Graph::from_edges(5, std::move(edges));
        SubgraphResult r = largest_biconnected_component(g);
        CHECK(r.graph.vertex_count() == 3);
        CHECK(r.graph.edge_count() == 3);
        CHECK(r.original_ids == std::vector<VertexId>{0, 1, 2});  // tie-break: smaller min id
    }
    SUBCASE("a cycle is its own biconnected component") {
        Graph g = gen_cycle(8);
        SubgraphResult r = largest_biconnected_component(g);
        CHECK(r.graph == g);
    }
    SUBCASE("a path decomposes into single edges") {
        SubgraphResult r = largest_biconnected_component(gen_path(5));
        CHECK(r.graph.vertex_count() == 2);
        CHECK(r.graph.edge_count() == 1);
        CHECK(r.original_ids == std::vector<VertexId>{0, 1});
    }
    SUBCASE("rerunning on the output is the identity") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            Graph g = gen_random_connected(40, 0.06, seed);
            SubgraphResult once = largest_biconnected_component(g);
            SubgraphResult twice = largest_biconnected_component(once.graph);
            CHECK(twice.graph == once.graph);
        }
    }
    SUBCASE("single edge is biconnected by convention") {
        Graph g = gen_path(2);
        SubgraphResult r = largest_biconnected_component(g);
        CHECK(r.graph.vertex_count() == 2);
    }
    SUBCASE("n < 2 rejected") {
        CHECK_THROWS_AS(largest_biconnected_component(gen_path(1)), ParameterError);
    }
    SUBCASE("cycle with pendant path") {
        // C6 with a P3 tail: block = the C6
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId i = 0; i < 6; ++i) edges.emplace_back(i, VertexId((i + 1) % 6));
        edges.emplace_back(2, 6);
        edges.emplace_back(6, 7);
        Graph g = Graph::from_edges(8, std::move(edges));
        SubgraphResult r = largest_biconnected_component(g);
        CHECK(r.graph.vertex_count() == 6);
        CHECK(r.graph.edge_count() == 6);
    }
}
