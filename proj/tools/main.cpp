// hyperdom: exact Gromov hyperbolicity of large sparse graphs through a
// hierarchy of distance-k dominating sets.
//
// Subcommands: compute, oracle, bcc, gen, stats. See --help.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperdom/bfs.hpp"
#include "hyperdom/engine.hpp"
#include "hyperdom/errors.hpp"
#include "hyperdom/generators.hpp"

using json = nlohmann::ordered_json;
using namespace hyperdom;

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("HYP_LOG");
    if (!env) return LogLevel::Quiet;
    std::string v = env;
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Quiet;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[hyperdom] " << msg << '\n';
}

constexpr int kExitParse = 2;
constexpr int kExitParameter = 3;
constexpr int kExitMemory = 4;

struct InputOptions {
    std::string path;
    std::string format = "edgelist";
    bool bcc = false;
};

struct LoadedGraph {
    Graph graph;
    std::vector<std::uint64_t> to_original;  // dense id -> input file id
    Graph::BuildStats dropped;
    std::size_t bcc_n = 0;
};

EdgeFormat parse_format(const std::string& name) {
    if (name == "edgelist") return EdgeFormat::EdgeList;
    if (name == "dimacs") return EdgeFormat::Dimacs;
    throw ParameterError("unknown format '" + name + "' (edgelist or dimacs)");
}

LoadedGraph load_input(const InputOptions& in) {
    LoadedGraph out;
    LoadResult loaded = load_edge_list_file(in.path, parse_format(in.format));
    out.graph = std::move(loaded.graph);
    out.to_original = std::move(loaded.original_ids);
    out.dropped = loaded.dropped;
    log_info("loaded n=" + std::to_string(out.graph.vertex_count()) +
             " m=" + std::to_string(out.graph.edge_count()));
    if (in.bcc) {
        SubgraphResult sub = largest_biconnected_component(out.graph);
        std::vector<std::uint64_t> composed(sub.original_ids.size());
        for (std::size_t i = 0; i < sub.original_ids.size(); ++i)
            composed[i] = out.to_original[sub.original_ids[i]];
        out.graph = std::move(sub.graph);
        out.to_original = std::move(composed);
        out.bcc_n = out.graph.vertex_count();
        log_info("largest biconnected component: n=" + std::to_string(out.graph.vertex_count()) +
                 " m=" + std::to_string(out.graph.edge_count()));
    }
    return out;
}

json timings_json(const EngineTimings& t) {
    return json{{"eccentricities", t.eccentricities}, {"hub_labels", t.hub_labels},
                {"hierarchy", t.hierarchy},           {"top_matrix", t.top_matrix},
                {"pass1", t.pass1},                   {"pass2", t.pass2},
                {"total", t.total}};
}

json stats_json(const HyperbolicityResult& r, const LoadedGraph& input, const json& config_echo) {
    const RunStats& s = r.stats;
    json out;
    out["schema"] = 1;
    out["config"] = config_echo;
    out["graph"] = {{"n", s.graph.n},
                    {"m", s.graph.m},
                    {"degree", {{"min", s.graph.min_degree},
                                {"mean", s.graph.mean_degree},
                                {"max", s.graph.max_degree}}}};
    out["eccentricity"] = {{"radius", s.radius},
                           {"mean", s.mean_eccentricity},
                           {"diameter", s.diameter},
                           {"central_vertex", s.central_vertex},
                           {"bfs_runs", s.eccentricity_bfs_runs}};
    out["labels"] = {{"mean_size", s.labels.mean_label_size},
                     {"max_size", s.labels.max_label_size},
                     {"total_entries", s.labels.total_entries}};
    out["delta"] = r.best.delta.str();
    out["delta_doubled"] = r.best.delta.twice;
    out["approximate"] = r.approximate;
    if (r.approximate) {
        out["certified_interval"] = {r.best.delta.str(), r.upper_bound.str()};
    }
    json witness = json::array();
    json witness_original = json::array();
    for (VertexId v : r.best.witness) {
        witness.push_back(v);
        witness_original.push_back(v < input.to_original.size() ? input.to_original[v]
                                                                : std::uint64_t(v));
    }
    out["witness"] = witness;
    out["witness_original"] = witness_original;
    out["brute_forced"] = s.brute_forced;
    json levels = json::array();
    for (std::size_t j = s.levels.size(); j-- > 0;) {
        const LevelStats& l = s.levels[j];
        levels.push_back({{"level", j},
                          {"k", l.k},
                          {"dominators", l.dominators},
                          {"considered", l.considered},
                          {"explored", l.explored},
                          {"pair_skips", l.pair_skips},
                          {"radius_histogram", l.radius_histogram}});
    }
    out["levels"] = levels;
    json passes = json::array();
    for (const PassStats& p : s.passes)
        passes.push_back({{"pass", p.pass},
                          {"pairs_processed", p.pairs_processed},
                          {"pairs_skipped_radius", p.pairs_skipped_radius},
                          {"pairs_skipped_record", p.pairs_skipped_record},
                          {"self_pairs_processed", p.self_pairs_processed},
                          {"stopped_early", p.stopped_early},
                          {"delta_lower_doubled", p.twice_delta_end}});
    out["passes"] = passes;
    out["delta_trajectory_doubled"] = s.delta_trajectory;
    out["cache"] = {{"hits", s.cache.hits},
                    {"misses", s.cache.misses},
                    {"bypasses", s.cache.bypasses},
                    {"evictions", s.cache.evictions},
                    {"label_queries", s.cache.label_queries},
                    {"direct_label_queries", s.direct_label_queries}};
    out["dropped"] = {{"loops", input.dropped.dropped_loops},
                      {"duplicates", input.dropped.dropped_duplicates}};
    out["timings"] = timings_json(s.timings);
    return out;
}

void write_stats(const std::string& path, const json& doc) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write stats JSON to '" + path + "'");
    out << doc.dump(2) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"exact Gromov hyperbolicity via hierarchical k-domination"};
    app.require_subcommand(1);

    // compute ---------------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "compute hyperbolicity of an edge-list graph");
    InputOptions cin_opts;
    EngineConfig cfg;
    std::string mode = "exact";
    std::string stats_path;
    std::uint64_t seed = 0;
    std::size_t oracle_limit = 600;
    compute->add_option("--input,-i", cin_opts.path, "input graph file")->required();
    compute->add_option("--format", cin_opts.format, "edgelist|dimacs");
    compute->add_flag("--bcc", cin_opts.bcc, "first extract the largest biconnected component");
    compute->add_option("--max-dom-dist,-k", cfg.max_dom_dist, "top domination distance k");
    compute->add_option("--ratio,-r", cfg.ratio, "level shrink ratio (> 1)");
    compute->add_option("--cache-size", cfg.cache_capacity, "matrix cache capacity (>= 7)");
    compute->add_option("--side-limit", cfg.matrix_side_limit, "max matrix side before bypass");
    bool no_cache = false;
    compute->add_flag("--no-cache", no_cache, "disable the matrix cache");
    compute->add_option("--memory-budget", cfg.memory_budget_entries,
                        "max entries of the top-level distance matrix");
    compute->add_option("--mode", mode, "exact|approx-pass1|oracle");
    compute->add_option("--stats-json", stats_path, "write run statistics to this file");
    compute->add_option("--seed", seed, "seed echoed into stats (hub random ordering)");
    compute->add_option("--oracle-limit", oracle_limit, "vertex limit for --mode oracle");
    std::string labels_path;
    compute->add_option("--dump-labels", labels_path,
                        "write the hub labels as text: \"v: (h1,d1) (h2,d2) ...\"");

    // oracle ----------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force hyperbolicity (small graphs)");
    InputOptions oin_opts;
    std::size_t olimit = 600;
    std::string ostats_path;
    oracle->add_option("--input,-i", oin_opts.path, "input graph file")->required();
    oracle->add_option("--format", oin_opts.format, "edgelist|dimacs");
    oracle->add_flag("--bcc", oin_opts.bcc, "first extract the largest biconnected component");
    oracle->add_option("--limit", olimit, "refuse graphs larger than this");
    oracle->add_option("--stats-json", ostats_path, "write run statistics to this file");

    // bcc -------------------------------------------------------------------
    auto* bcc = app.add_subcommand("bcc", "emit the largest biconnected component as an edge list");
    InputOptions bin_opts;
    std::string bcc_output;
    bcc->add_option("--input,-i", bin_opts.path, "input graph file")->required();
    bcc->add_option("--format", bin_opts.format, "edgelist|dimacs");
    bcc->add_option("--output,-o", bcc_output, "output file (default stdout)");

    // gen -------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a synthetic graph as an edge list");
    std::string kind = "cycle";
    GenSpec spec;
    std::string gen_output;
    gen->add_option("--kind", kind, "cycle|path|tree|grid|grid-perturbed|random")->required();
    gen->add_option("--n", spec.n, "vertex count (cycle/path/tree/random)");
    gen->add_option("--rows", spec.rows, "grid rows");
    gen->add_option("--cols", spec.cols, "grid cols");
    gen->add_option("--side", spec.side, "perturbed grid side s, vertices (s+1)^2");
    gen->add_option("--delete-frac", spec.delete_fraction, "fraction of edges to delete");
    gen->add_option("--edge-prob", spec.edge_prob, "edge probability (random)");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("--output,-o", gen_output, "output file (default stdout)");

    // stats -----------------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "graph summary: size, eccentricities, degrees");
    InputOptions sin_opts;
    std::string sstats_path;
    stats->add_option("--input,-i", sin_opts.path, "input graph file")->required();
    stats->add_option("--format", sin_opts.format, "edgelist|dimacs");
    stats->add_flag("--bcc", sin_opts.bcc, "first extract the largest biconnected component");
    stats->add_option("--stats-json", sstats_path, "write the summary to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParameter;
    }

    if (*compute) {
        if (!(cfg.ratio > 1.0)) throw ParameterError("ratio must exceed 1");
        if (mode != "exact" && mode != "approx-pass1" && mode != "oracle")
            throw ParameterError("unknown mode '" + mode + "'");
        cfg.pass1_only = (mode == "approx-pass1");
        cfg.hub_seed = seed;
        cfg.cache_enabled = !no_cache;
        LoadedGraph input = load_input(cin_opts);
        if (!labels_path.empty()) {
            HubLabels labels = HubLabels::build(input.graph, cfg.hub_ordering, cfg.hub_seed);
            std::ofstream lout(labels_path);
            if (!lout) throw ParameterError("cannot write labels to '" + labels_path + "'");
            labels.dump(lout);
            log_info("hub labels dumped to " + labels_path);
        }
        if (mode == "oracle") {
            QuadrupleResult r = brute_force_hyperbolicity(input.graph, oracle_limit);
            std::cout << "hyperbolicity: " << r.delta.str() << '\n';
            std::cout << "witness: " << r.witness[0] << ' ' << r.witness[1] << ' ' << r.witness[2]
                      << ' ' << r.witness[3] << '\n';
            return 0;
        }
        HyperbolicityResult r = compute_hyperbolicity(input.graph, cfg);
        json config_echo = {{"input", cin_opts.path},
                            {"format", cin_opts.format},
                            {"bcc", cin_opts.bcc},
                            {"max_dom_dist", cfg.max_dom_dist},
                            {"ratio", cfg.ratio},
                            {"cache_size", cfg.cache_capacity},
                            {"cache_enabled", cfg.cache_enabled},
                            {"side_limit", cfg.matrix_side_limit},
                            {"memory_budget", cfg.memory_budget_entries},
                            {"mode", mode},
                            {"seed", seed},
                            {"generator", generator_identity()}};
        if (r.approximate) {
            std::cout << "hyperbolicity-lower-bound: " << r.best.delta.str() << '\n';
            std::cout << "certified-interval: [" << r.best.delta.str() << ", "
                      << r.upper_bound.str() << "]\n";
        } else {
            std::cout << "hyperbolicity: " << r.best.delta.str() << '\n';
        }
        if (log_level() >= LogLevel::Debug) {
            std::cerr << "[hyperdom] timings: hierarchy " << r.stats.timings.hierarchy
                      << "s, ecc " << r.stats.timings.eccentricities << "s, labels "
                      << r.stats.timings.hub_labels << "s, matrix " << r.stats.timings.top_matrix
                      << "s, pass1 " << r.stats.timings.pass1 << "s, pass2 "
                      << r.stats.timings.pass2 << "s\n";
            std::cerr << "[hyperdom] cache: " << r.stats.cache.hits << " hits, "
                      << r.stats.cache.misses << " misses, " << r.stats.cache.bypasses
                      << " bypasses\n";
        }
        std::cout << "witness: " << r.best.witness[0] << ' ' << r.best.witness[1] << ' '
                  << r.best.witness[2] << ' ' << r.best.witness[3] << '\n';
        write_stats(stats_path, stats_json(r, input, config_echo));
        return 0;
    }

    if (*oracle) {
        LoadedGraph input = load_input(oin_opts);
        QuadrupleResult r = brute_force_hyperbolicity(input.graph, olimit);
        std::cout << "hyperbolicity: " << r.delta.str() << '\n';
        std::cout << "witness: " << r.witness[0] << ' ' << r.witness[1] << ' ' << r.witness[2]
                  << ' ' << r.witness[3] << '\n';
        if (!ostats_path.empty()) {
            json doc = {{"schema", 1},
                        {"delta", r.delta.str()},
                        {"delta_doubled", r.delta.twice},
                        {"witness", {r.witness[0], r.witness[1], r.witness[2], r.witness[3]}}};
            write_stats(ostats_path, doc);
        }
        return 0;
    }

    if (*bcc) {
        LoadedGraph input = load_input(bin_opts);
        SubgraphResult sub = largest_biconnected_component(input.graph);
        std::ostringstream header;
        header << "largest biconnected component n=" << sub.graph.vertex_count()
               << " m=" << sub.graph.edge_count();
        if (bcc_output.empty()) {
            write_edge_list(sub.graph, std::cout, header.str());
        } else {
            std::ofstream out(bcc_output);
            if (!out) throw ParameterError("cannot write to '" + bcc_output + "'");
            write_edge_list(sub.graph, out, header.str());
        }
        return 0;
    }

    if (*gen) {
        if (kind == "cycle") spec.kind = GenKind::Cycle;
        else if (kind == "path") spec.kind = GenKind::Path;
        else if (kind == "tree") spec.kind = GenKind::Tree;
        else if (kind == "grid") spec.kind = GenKind::Grid;
        else if (kind == "grid-perturbed") spec.kind = GenKind::GridPerturbed;
        else if (kind == "random") spec.kind = GenKind::RandomConnected;
        else throw ParameterError("unknown generator kind '" + kind + "'");
        Graph g = generate(spec);
        if (gen_output.empty()) {
            write_edge_list(g, std::cout, describe(spec));
        } else {
            std::ofstream out(gen_output);
            if (!out) throw ParameterError("cannot write to '" + gen_output + "'");
            write_edge_list(g, out, describe(spec));
        }
        return 0;
    }

    if (*stats) {
        LoadedGraph input = load_input(sin_opts);
        GraphSummary s = graph_summary(input.graph);
        if (!is_connected(input.graph)) throw ParameterError("stats needs a connected graph");
        EccentricityTable ecc = compute_all_eccentricities(input.graph);
        std::cout << "n: " << s.n << "\nm: " << s.m << '\n';
        std::cout << "eccentricity: radius " << ecc.radius << ", mean " << ecc.mean()
                  << ", diameter " << ecc.diameter << '\n';
        std::cout << "degree: min " << s.min_degree << ", mean " << s.mean_degree << ", max "
                  << s.max_degree << '\n';
        if (!sstats_path.empty()) {
            json doc = {{"schema", 1},
                        {"n", s.n},
                        {"m", s.m},
                        {"eccentricity",
                         {{"radius", ecc.radius}, {"mean", ecc.mean()}, {"diameter", ecc.diameter}}},
                        {"degree",
                         {{"min", s.min_degree}, {"mean", s.mean_degree}, {"max", s.max_degree}}},
                        {"dropped",
                         {{"loops", input.dropped.dropped_loops},
                          {"duplicates", input.dropped.dropped_duplicates}}}};
            write_stats(sstats_path, doc);
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const MemoryBudgetError& e) {
        std::cerr << "memory budget: " << e.what() << '\n';
        return kExitMemory;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
