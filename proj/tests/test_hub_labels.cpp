#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hyperdom/bfs.hpp"
#include "hyperdom/generators.hpp"
#include "hyperdom/hub_labels.hpp"

using namespace hyperdom;

namespace {

void check_all_pairs(const Graph& g, const HubLabels& labels) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        auto d = bfs_distances(g, u);
        for (VertexId v = 0; v < g.vertex_count(); ++v) REQUIRE(labels.query(u, v) == d[v]);
    }
}

}  // namespace

TEST_CASE("single edge") {
    Graph g = gen_path(2);
    HubLabels labels = HubLabels::build(g);
    CHECK(labels.query(0, 1) == 1);
    CHECK(labels.query(0, 0) == 0);
    CHECK(labels.query(1, 1) == 0);
}

TEST_CASE("cycle pair queries match bfs") {
    Graph g = gen_cycle(8);
    check_all_pairs(g, HubLabels::build(g));
}

TEST_CASE("label shape invariants") {
    Graph g = gen_random_connected(80, 0.07, 4);
    HubLabels labels = HubLabels::build(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto hubs = labels.label_hubs(v);
        auto dists = labels.label_dists(v);
        REQUIRE(hubs.size() == dists.size());
        bool self = false;
        for (std::size_t i = 0; i < hubs.size(); ++i) {
            if (i > 0) CHECK(hubs[i - 1] < hubs[i]);  // sorted, no duplicates
            if (hubs[i] == v) {
                self = true;
                CHECK(dists[i] == 0);
            }
        }
        CHECK(self);
    }
}

TEST_CASE("exactness on random graphs under both orderings") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::size_t n = 30 + (seed * 23) % 121;
        Graph g = gen_random_connected(n, 0.04 + 3.0 / double(n), seed);
        check_all_pairs(g, HubLabels::build(g, HubOrdering::DegreeDescending));
        check_all_pairs(g, HubLabels::build(g, HubOrdering::RandomSeeded, seed * 31 + 7));
    }
}

TEST_CASE("query symmetry") {
    Graph g = gen_grid_perturbed(8, 0.1, 6);
    HubLabels labels = HubLabels::build(g);
    for (VertexId u = 0; u < g.vertex_count(); u += 5)
        for (VertexId v = 0; v < g.vertex_count(); v += 3)
            CHECK(labels.query(u, v) == labels.query(v, u));
}

TEST_CASE("stats") {
    SUBCASE("single vertex has one entry") {
        HubLabels labels = HubLabels::build(gen_path(1));
        auto s = labels.stats();
        CHECK(s.total_entries == 1);
        CHECK(s.max_label_size == 1);
    }
    SUBCASE("totals add up") {
        Graph g = gen_random_connected(50, 0.1, 2);
        HubLabels labels = HubLabels::build(g);
        auto s = labels.stats();
        std::size_t total = 0;
        std::size_t biggest = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            total += labels.label_size(v);
            biggest = std::max(biggest, labels.label_size(v));
        }
        CHECK(s.total_entries == total);
        CHECK(s.max_label_size == biggest);
        CHECK(s.mean_label_size == doctest::Approx(double(total) / 50.0));
    }
    SUBCASE("paths give logarithmic labels under a bisecting order") {
        // the random order bisects in expectation; the degree order cannot
        // distinguish path interiors and is not asserted here
        Graph g = gen_path(256);
        HubLabels labels = HubLabels::build(g, HubOrdering::RandomSeeded, 17);
        check_all_pairs(g, labels);
        CHECK(labels.stats().mean_label_size <= 4.0 * std::log2(256.0));
    }
}

TEST_CASE("dump format") {
    Graph g = gen_path(3);
    HubLabels labels = HubLabels::build(g);
    std::ostringstream out;
    labels.dump(out);
    std::istringstream lines(out.str());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find(':') != std::string::npos);
        CHECK(line.find('(') != std::string::npos);
        ++count;
    }
    CHECK(count == 3);
    CHECK(out.str().substr(0, 2) == "0:");
}

TEST_CASE("construction order recorded") {
    Graph g = gen_cycle(6);
    HubLabels labels = HubLabels::build(g);
    CHECK(labels.construction_order().size() == 6);
    CHECK(labels.construction_order()[0] == 0);  // all degree 2, id tie-break
}
