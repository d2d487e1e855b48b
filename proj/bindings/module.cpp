#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "hyperdom/bfs.hpp"
#include "hyperdom/engine.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/generators.hpp"

namespace py = pybind11;
using namespace hyperdom;

namespace {

HubOrdering ordering_from(const std::string& name) {
    if (name == "degree") return HubOrdering::DegreeDescending;
    if (name == "random") return HubOrdering::RandomSeeded;
    throw ParameterError("unknown hub ordering '" + name + "' (degree or random)");
}

py::dict result_dict(const HyperbolicityResult& r) {
    py::dict out;
    out["delta"] = r.best.delta.value();
    out["delta_str"] = r.best.delta.str();
    out["delta_doubled"] = r.best.delta.twice;
    out["witness"] = r.best.witness;
    out["approximate"] = r.approximate;
    out["upper_bound"] = r.upper_bound.value();
    py::list levels;
    for (const LevelStats& l : r.stats.levels) {
        py::dict d;
        d["k"] = l.k;
        d["dominators"] = l.dominators;
        d["considered"] = l.considered;
        d["explored"] = l.explored;
        d["pair_skips"] = l.pair_skips;
        levels.append(d);
    }
    out["levels"] = levels;
    out["cache"] = py::dict(py::arg("hits") = r.stats.cache.hits,
                            py::arg("misses") = r.stats.cache.misses,
                            py::arg("bypasses") = r.stats.cache.bypasses,
                            py::arg("label_queries") = r.stats.cache.label_queries);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Gromov hyperbolicity via hierarchical k-domination";

    py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<MemoryBudgetError>(m, "MemoryBudgetError", PyExc_MemoryError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", [](const Graph& g, VertexId v) { return g.degree(v); })
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 auto nb = g.neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             })
        .def("has_edge", &Graph::has_edge)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<VertexId, VertexId>> out;
                 for (VertexId v = 0; v < g.vertex_count(); ++v)
                     for (VertexId w : g.neighbors(v))
                         if (v < w) out.emplace_back(v, w);
                 return out;
             })
        .def("summary",
             [](const Graph& g) {
                 GraphSummary s = graph_summary(g);
                 py::dict d;
                 d["n"] = s.n;
                 d["m"] = s.m;
                 d["min_degree"] = s.min_degree;
                 d["mean_degree"] = s.mean_degree;
                 d["max_degree"] = s.max_degree;
                 return d;
             })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return out.str();
        });

    m.def(
        "from_edges",
        [](std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
            return Graph::from_edges(n, std::move(edges));
        },
        py::arg("n"), py::arg("edges"));
    m.def(
        "load_edge_list",
        [](const std::string& path, const std::string& format) {
            LoadResult r = load_edge_list_file(
                path, format == "dimacs" ? EdgeFormat::Dimacs : EdgeFormat::EdgeList);
            return py::make_tuple(r.graph, r.original_ids);
        },
        py::arg("path"), py::arg("format") = "edgelist",
        "load a graph; returns (graph, original_ids)");
    m.def("write_edge_list", [](const Graph& g, const std::string& path) {
        std::ofstream out(path);
        if (!out) throw ParameterError("cannot write to '" + path + "'");
        write_edge_list(g, out);
    });
    m.def("is_connected", &is_connected);
    m.def("largest_biconnected_component", [](const Graph& g) {
        SubgraphResult r = largest_biconnected_component(g);
        return py::make_tuple(r.graph, r.original_ids);
    });
    m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));

    m.def("gen_cycle", &gen_cycle, py::arg("n"));
    m.def("gen_path", &gen_path, py::arg("n"));
    m.def("gen_grid", &gen_grid, py::arg("rows"), py::arg("cols"));
    m.def("gen_tree", &gen_tree, py::arg("n"), py::arg("seed") = 0);
    m.def("gen_random_connected", &gen_random_connected, py::arg("n"), py::arg("edge_prob"),
          py::arg("seed") = 0);
    m.def("gen_grid_perturbed", &gen_grid_perturbed, py::arg("side"), py::arg("delete_fraction"),
          py::arg("seed") = 0);

    py::class_<EccentricityTable>(m, "EccentricityTable")
        .def_readonly("ecc", &EccentricityTable::ecc)
        .def_readonly("radius", &EccentricityTable::radius)
        .def_readonly("diameter", &EccentricityTable::diameter)
        .def_readonly("central_vertex", &EccentricityTable::central_vertex)
        .def("mean", &EccentricityTable::mean);
    m.def("compute_all_eccentricities", &compute_all_eccentricities);

    py::class_<HubLabels>(m, "HubLabels")
        .def("query", &HubLabels::query, py::arg("u"), py::arg("v"))
        .def("stats",
             [](const HubLabels& l) {
                 auto s = l.stats();
                 py::dict d;
                 d["mean_label_size"] = s.mean_label_size;
                 d["max_label_size"] = s.max_label_size;
                 d["total_entries"] = s.total_entries;
                 return d;
             })
        .def("dump", [](const HubLabels& l) {
            std::ostringstream out;
            l.dump(out);
            return out.str();
        });
    m.def(
        "build_hub_labels",
        [](const Graph& g, const std::string& ordering, std::uint64_t seed) {
            return HubLabels::build(g, ordering_from(ordering), seed);
        },
        py::arg("graph"), py::arg("ordering") = "degree", py::arg("seed") = 0);

    m.def("derive_sequence", &derive_sequence, py::arg("k"), py::arg("r"));

    py::class_<DominationHierarchy>(m, "DominationHierarchy")
        .def_property_readonly("num_levels",
                               [](const DominationHierarchy& h) { return h.levels.size(); })
        .def("level_k", [](const DominationHierarchy& h, std::size_t j) { return h.levels[j].k; })
        .def("dominators",
             [](const DominationHierarchy& h, std::size_t j) { return h.levels[j].dominators; })
        .def("dominator_of", [](const DominationHierarchy& h, std::size_t j, VertexId v) {
            return h.levels[j].dominator_of[v];
        });
    m.def(
        "hierarchical_dominating_set",
        [](const Graph& g, const std::vector<std::int32_t>& seq) {
            return hierarchical_dominating_set(g, seq);
        },
        py::arg("graph"), py::arg("sequence"));
    m.def(
        "hierarchy_check",
        [](const Graph& g, const DominationHierarchy& h) {
            HierarchyReport r = hierarchy_check(g, h);
            return py::make_tuple(r.ok, r.detail);
        },
        py::arg("graph"), py::arg("hierarchy"));

    m.def("delta4", [](std::int64_t d_uv, std::int64_t d_xy, std::int64_t d_ux, std::int64_t d_vy,
                       std::int64_t d_uy,
                       std::int64_t d_vx) { return delta4(d_uv, d_xy, d_ux, d_vy, d_uy, d_vx).value(); });
    m.def("tau4", [](std::int64_t d_uv, std::int64_t d_xy, std::int64_t d_ux, std::int64_t d_vy,
                     std::int64_t d_uy,
                     std::int64_t d_vx) { return tau4(d_uv, d_xy, d_ux, d_vy, d_uy, d_vx).value(); });

    m.def(
        "compute_hyperbolicity",
        [](const Graph& g, std::int32_t k, double r, std::size_t cache_size,
           std::size_t side_limit, bool cache_enabled, std::uint64_t memory_budget,
           bool pass1_only, const std::string& hub_ordering, std::uint64_t seed) {
            EngineConfig cfg;
            cfg.max_dom_dist = k;
            cfg.ratio = r;
            cfg.cache_capacity = cache_size;
            cfg.matrix_side_limit = side_limit;
            cfg.cache_enabled = cache_enabled;
            cfg.memory_budget_entries = memory_budget;
            cfg.pass1_only = pass1_only;
            cfg.hub_ordering = ordering_from(hub_ordering);
            cfg.hub_seed = seed;
            return result_dict(compute_hyperbolicity(g, cfg));
        },
        py::arg("graph"), py::arg("k") = 2, py::arg("r") = 2.0, py::arg("cache_size") = 10000,
        py::arg("side_limit") = 50000, py::arg("cache_enabled") = true,
        py::arg("memory_budget") = 2'000'000'000ULL, py::arg("pass1_only") = false,
        py::arg("hub_ordering") = "degree", py::arg("seed") = 0);

    m.def(
        "brute_force_hyperbolicity",
        [](const Graph& g, std::size_t limit) {
            QuadrupleResult r = brute_force_hyperbolicity(g, limit);
            py::dict out;
            out["delta"] = r.delta.value();
            out["delta_str"] = r.delta.str();
            out["delta_doubled"] = r.delta.twice;
            out["witness"] = r.witness;
            return out;
        },
        py::arg("graph"), py::arg("limit") = 600);

    m.def(
        "lemma_sandwich_check",
        [](const Graph& g, const DominationHierarchy& h, std::size_t samples, std::uint64_t seed) {
            CheckReport r = lemma_sandwich_check(g, h, samples, seed);
            return py::make_tuple(r.ok, r.first_violation);
        },
        py::arg("graph"), py::arg("hierarchy"), py::arg("samples") = 10000, py::arg("seed") = 1);
    m.def(
        "bound_lemmas_check",
        [](const Graph& g, const DominationHierarchy& h, std::size_t samples, std::uint64_t seed) {
            CheckReport r = bound_lemmas_check(g, h, samples, seed);
            return py::make_tuple(r.ok, r.first_violation);
        },
        py::arg("graph"), py::arg("hierarchy"), py::arg("samples") = 10000, py::arg("seed") = 1);
}
